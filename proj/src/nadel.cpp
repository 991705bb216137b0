#include "kecert/nadel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kecert/zero_set.hpp"

namespace kecert {

using nlohmann::json;

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::passed: return "passed";
    case Outcome::failed: return "failed";
    case Outcome::unresolved: return "unresolved";
  }
  return "unresolved";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::granted_simple_criterion: return "granted_simple_criterion";
    case Verdict::granted_low_degree: return "granted_low_degree";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::rejected_input: return "rejected_input";
  }
  return "inconclusive";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::granted_simple_criterion:
    case Verdict::granted_low_degree: return 0;
    case Verdict::rejected_input: return 1;
    case Verdict::inconclusive: return 2;
  }
  return 2;
}

namespace {

std::vector<Vector> span_intersection(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  const std::size_t n = a[0].size();
  const FieldPtr& ctx = a[0][0].context();
  Matrix c = zero_matrix(ctx, n, a.size() + b.size());
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t i = 0; i < a.size(); ++i) c[row][i] = a[i][row];
    for (std::size_t j = 0; j < b.size(); ++j) c[row][a.size() + j] = -b[j][row];
  }
  Matrix vecs;
  for (const auto& k : kernel(c)) {
    Vector v(n, Scalar::zero(ctx));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t row = 0; row < n; ++row) v[row] += k[i] * a[i][row];
    vecs.push_back(std::move(v));
  }
  if (vecs.empty()) return {};
  auto pivots = row_reduce(vecs);
  vecs.resize(pivots.size());
  return vecs;
}

std::string point_text(const Vector& v) { return ProjectivePoint(v).to_string(); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string element_label(const SurfaceConfig& cfg, const SurfaceGroup& g, int k) {
  for (std::size_t i = 0; i < cfg.generators.size(); ++i)
    if (g.group.generators()[i] == k) return cfg.generators[i].label;
  return "element " + std::to_string(k) + " [" + g.elements[static_cast<std::size_t>(k)].map.key() + "]";
}

CheckResult fpf_blown_up(const SurfaceConfig& cfg, const SurfaceGroup& g) {
  CheckResult res{"fixed_point_free", Outcome::passed, "", {}};
  std::vector<std::string> notes;
  std::vector<Polynomial> forms;
  for (const auto& gen : cfg.generators)
    for (auto& c : gen.map.cross_polynomials())
      if (!c.is_zero()) forms.push_back(c);
  std::vector<PointCoords> excluded;
  for (const auto& p : cfg.points) excluded.push_back(p.coords());
  if (!forms.empty()) {
    ZeroSetDecision d = decide_common_zeros(forms, excluded);
    if (d.kind != ZeroSetKind::empty) {
      res.outcome = Outcome::failed;
      res.evidence = "the generators share a fixed point away from the blown-up points";
      if (d.witness) res.evidence += ": " + point_text(*d.witness);
      return res;
    }
    notes.push_back("no common fixed point off the exceptional curves (" + d.evidence + ")");
  } else {
    res.outcome = Outcome::failed;
    res.evidence = "every generator is the identity";
    return res;
  }

  const int r = cfg.r();
  const auto n = static_cast<int>(g.group.order());
  for (int i = 1; i <= r; ++i) {
    const DivisorClass e = DivisorClass::exceptional(r, i);
    const std::string name = "E" + std::to_string(i);
    int mover = -1;
    std::vector<int> stabilizer;
    for (int k = 0; k < n; ++k) {
      DivisorClass img = g.elements[static_cast<std::size_t>(k)].lift->apply(e);
      if (img == e) {
        stabilizer.push_back(k);
      } else if (mover < 0 && intersection_pairing(img, e) == 0) {
        mover = k;
      }
    }
    if (mover >= 0) {
      notes.push_back(name + " is moved to a disjoint curve by " + element_label(cfg, g, mover));
      continue;
    }
    const ProjectivePoint& p = cfg.points[static_cast<std::size_t>(i - 1)];
    std::vector<Matrix> diffs;
    for (int k : stabilizer) diffs.push_back(jacobian_matrix(g.elements[static_cast<std::size_t>(k)].map, p, p.chart()));
    CommonFixedSpaces common = common_fixed_subspaces(diffs);
    if (common.spaces.empty() && !common.unresolved) {
      notes.push_back(name + ": its stabilizer (order " + std::to_string(stabilizer.size()) + ") fixes no tangent direction");
      continue;
    }
    if (!common.spaces.empty() && !common.unresolved && static_cast<int>(stabilizer.size()) == n) {
      res.outcome = Outcome::failed;
      res.evidence = "the whole group fixes the direction " + point_text(common.spaces[0][0]) + " on " + name;
      return res;
    }
    res.unresolved.push_back(name + ": common fixed directions of its stabilizer could not be excluded");
  }
  if (!res.unresolved.empty()) res.outcome = Outcome::unresolved;
  res.evidence = join(notes, "; ");
  return res;
}

CheckResult fpf_cubic(const SurfaceConfig& cfg) {
  CheckResult res{"fixed_point_free", Outcome::passed, "", {}};
  std::vector<Matrix> mats;
  for (const auto& gen : cfg.generators) mats.push_back(gen.map.matrix());
  CommonFixedSpaces common = common_fixed_subspaces(mats);
  std::vector<std::string> notes;
  if (common.unresolved && !common.spaces.empty()) {
    // Some generator was skipped, so these spaces only bound the common fixed locus from above.
    res.outcome = Outcome::unresolved;
    res.evidence = std::to_string(common.spaces.size()) + " candidate fixed space(s) remain";
    res.unresolved.push_back("some generator has eigenvalues outside the field");
    return res;
  }
  for (const auto& space : common.spaces) {
    if (space.size() >= 2) {
      res.outcome = Outcome::failed;
      res.evidence = "a line of common fixed points meets the surface (spanned by " + point_text(space[0]) + ", " +
                     point_text(space[1]) + ")";
      return res;
    }
    if (cfg.cubic.evaluate(space[0]).is_zero()) {
      res.outcome = Outcome::failed;
      res.evidence = "common fixed point " + point_text(space[0]) + " lies on the surface";
      return res;
    }
    notes.push_back("common fixed point " + point_text(space[0]) + " is off the surface");
  }
  if (common.unresolved) {
    res.outcome = Outcome::unresolved;
    res.unresolved.push_back("some generator has eigenvalues outside the field");
  }
  if (notes.empty()) notes.push_back("the generators have no common eigenvector");
  res.evidence = join(notes, "; ");
  return res;
}

// Every irreducible factor of q divides j.
bool supported_on(Polynomial q, const Polynomial& j) {
  while (q.total_degree() > 0) {
    Polynomial h = gcd(q, j);
    if (h.total_degree() <= 0) return false;
    q = *exact_divide(q, h);
  }
  return true;
}

struct FixedCurve {
  bool exceptional = false;
  int index = 0;  // E_index for exceptional curves
  Polynomial equation;
  bool split_unresolved = false;
  std::vector<int> fixers;
  std::string name() const { return exceptional ? "E" + std::to_string(index) : equation.to_string(); }
};

}  // namespace

CommonFixedSpaces common_fixed_subspaces(const std::vector<Matrix>& matrices) {
  CommonFixedSpaces out;
  if (matrices.empty()) return out;
  const std::size_t n = matrices[0].size();
  const FieldPtr& ctx = matrices[0][0][0].context();
  std::vector<std::vector<Vector>> current{identity_matrix(ctx, n)};
  for (const auto& m : matrices) {
    EigenResult eig = projectivity_fixed_points(m);
    if (eig.unresolved) {
      out.unresolved = true;
      continue;
    }
    std::vector<std::vector<Vector>> next;
    for (const auto& s : current)
      for (const auto& e : eig.spaces) {
        auto inter = span_intersection(s, e.basis);
        if (!inter.empty()) next.push_back(std::move(inter));
      }
    current = std::move(next);
    if (current.empty()) {
      out.unresolved = false;
      return out;
    }
  }
  out.spaces = std::move(current);
  return out;
}

CheckResult fixed_point_free_on_surface(const SurfaceConfig& cfg, const SurfaceGroup& g) {
  return cfg.model == ModelType::cubic_in_p3 ? fpf_cubic(cfg) : fpf_blown_up(cfg, g);
}

CheckResult invariant_curve_effectiveness(const SurfaceConfig& cfg, const SurfaceGroup& g, EffectivenessOptions opts) {
  CheckResult res{"invariant_curve_effectiveness", Outcome::passed, "", {}};
  const int r = cfg.r();
  const auto n = static_cast<int>(g.group.order());
  std::map<std::string, FixedCurve> curves;
  std::vector<std::string> notes;

  for (int k = 1; k < n; ++k) {
    const SurfaceElement& el = g.elements[static_cast<std::size_t>(k)];
    Polynomial h = gcd_all(el.map.cross_polynomials());
    if (h.total_degree() > 0) {
      CurveSplit split = split_plane_curve(h);
      for (const auto& f : split.factors) {
        auto& rec = curves[f.to_string()];
        rec.equation = f;
        rec.split_unresolved = rec.split_unresolved || split.unresolved;
        rec.fixers.push_back(k);
      }
    }
    for (int i = 1; i <= r; ++i) {
      const DivisorClass e = DivisorClass::exceptional(r, i);
      if (!(el.lift->apply(e) == e)) continue;
      const ProjectivePoint& p = cfg.points[static_cast<std::size_t>(i - 1)];
      if (is_scalar_matrix(jacobian_matrix(el.map, p, p.chart()))) {
        auto& rec = curves["E" + std::to_string(i)];
        rec.exceptional = true;
        rec.index = i;
        rec.fixers.push_back(k);
      }
    }
  }
  if (curves.empty()) {
    res.evidence = "no nonidentity element fixes a curve pointwise";
    return res;
  }

  std::vector<Polynomial> jacobians;
  for (const auto& gen : cfg.generators) jacobians.push_back(gen.map.jacobian_determinant());

  for (const auto& [key, c] : curves) {
    const std::string name = c.name();
    // (a) invariance under every generator
    std::string moved_by;
    bool support_problem = false;
    for (std::size_t gi = 0; gi < cfg.generators.size() && moved_by.empty(); ++gi) {
      const GeneratorSpec& gen = cfg.generators[gi];
      if (c.exceptional) {
        const DivisorClass e = DivisorClass::exceptional(r, c.index);
        if (!(gen.lift->apply(e) == e)) moved_by = gen.label;
        continue;
      }
      if (!gen.map.is_projectivity() && exact_divide(jacobians[gi], c.equation)) {
        moved_by = gen.label + " (contracted)";
        continue;
      }
      auto q = divides_as_factor(c.equation, substitute_map(c.equation, gen.map.components()));
      if (!q) {
        moved_by = gen.label;
      } else if (!supported_on(*q, jacobians[gi])) {
        support_problem = true;
      }
    }
    if (!moved_by.empty()) {
      notes.push_back(name + " is not invariant (moved by " + moved_by + ")");
      continue;
    }
    if (support_problem) {
      res.unresolved.push_back(name + ": invariance quotient has a factor not contracted by the generator");
      continue;
    }
    // (b) genus: a smooth plane cubic is elliptic
    if (!c.exceptional) {
      const int deg = c.equation.total_degree();
      const bool smooth = deg <= 3 && is_smooth_plane_curve(c.equation).smooth;
      if (deg == 3 && smooth && !opts.treat_cubics_as_rational) {
        notes.push_back(name + " is invariant and a smooth cubic, hence elliptic");
        continue;
      }
      const bool rational = deg == 1 || (deg == 2 && smooth) || (deg == 3 && smooth);
      if (!rational || (c.split_unresolved && deg >= 2)) {
        res.unresolved.push_back(name + ": invariant fixed curve of degree " + std::to_string(deg) + " could not be classified");
        continue;
      }
    }
    // (c) the group acting on the curve
    std::vector<int> pointwise{0};
    for (int k = 1; k < n; ++k) {
      const SurfaceElement& el = g.elements[static_cast<std::size_t>(k)];
      bool fixes;
      if (c.exceptional) {
        fixes = std::find(c.fixers.begin(), c.fixers.end(), k) != c.fixers.end();
      } else {
        fixes = true;
        for (const auto& cp : el.map.cross_polynomials())
          if (!cp.is_zero() && !exact_divide(cp, c.equation)) {
            fixes = false;
            break;
          }
      }
      if (fixes) pointwise.push_back(k);
    }
    try {
      FiniteGroup quotient = pointwise_stabilizer_quotient(g.group, pointwise);
      ForbiddenResult fr = identify_forbidden(quotient);
      const std::string q = "G/N with |N| = " + std::to_string(pointwise.size()) + " has " + fingerprint(quotient).to_string();
      if (fr.forbidden) {
        res.outcome = Outcome::failed;
        notes.push_back(name + " is an invariant rational curve on which " + q + ", which is " + fr.name);
      } else {
        notes.push_back(name + " is invariant; " + q + ", not a finite subgroup of PGL(2)");
      }
    } catch (const Error& e) {
      res.unresolved.push_back(name + ": " + e.what());
    }
  }
  if (res.outcome != Outcome::failed && !res.unresolved.empty()) res.outcome = Outcome::unresolved;
  res.evidence = join(notes, "; ");
  return res;
}

bool degree_bound_check(int r, int d) { return r >= (r - 3) * d; }

CheckResult degree_bound_table() {
  CheckResult res{"degree_bound_table", Outcome::passed, "", {}};
  std::vector<std::string> rows;
  for (int r = 6; r <= 8; ++r) {
    // (r - 3) d grows with d, so failing at d = 3 rules out every d >= 3.
    int largest = 0;
    while (degree_bound_check(r, largest + 1)) ++largest;
    bool ok = !degree_bound_check(r, 3);
    rows.push_back("r=" + std::to_string(r) + ": " + std::to_string(r) + ">=" + std::to_string(r - 3) +
                   "*d holds exactly for d<=" + std::to_string(largest) + ", fails at d=3 (" + std::to_string(r) + "<" +
                   std::to_string(3 * (r - 3)) + ")");
    if (!ok) res.outcome = Outcome::failed;
  }
  res.evidence = join(rows, "; ");
  return res;
}

namespace {

CheckResult closure_check(const SurfaceGroup& g) {
  return {"group_closure", Outcome::passed, fingerprint(g.group).to_string(), {}};
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.outcome == Outcome::passed; });
}

Certificate base_certificate(const SurfaceConfig& cfg, const SurfaceGroup& g) {
  Certificate cert;
  cert.config_name = cfg.name;
  cert.model = cfg.model == ModelType::cubic_in_p3 ? "cubic_in_p3" : "blown_up_plane";
  cert.conductor = cfg.conductor;
  cert.config_digest = cfg.digest;
  cert.group = fingerprint(g.group);
  cert.assumptions.push_back(
      "The criterion is sufficient, not necessary: an inconclusive verdict does not assert that no Kahler-Einstein metric "
      "exists.");
  return cert;
}

}  // namespace

Certificate criterion_simple(const SurfaceConfig& cfg, const SurfaceGroup& g) {
  Certificate cert = base_certificate(cfg, g);
  cert.assumptions.push_back(
      "Only curves fixed pointwise by a group element can carry a non-effective action; other invariant curves are not "
      "examined.");
  cert.checks.push_back({"general_position", Outcome::passed,
                         std::to_string(cfg.r()) + " points, no three collinear, no six on a conic, no cubic through seven "
                                                   "singular at the eighth",
                         {}});
  cert.checks.push_back({"generators", Outcome::passed,
                         std::to_string(cfg.generators.size()) +
                             " generators defined off the blown-up points with lattice actions matching their geometry",
                         {}});
  cert.checks.push_back(closure_check(g));
  cert.checks.push_back(fixed_point_free_on_surface(cfg, g));
  cert.checks.push_back(invariant_curve_effectiveness(cfg, g));
  ForbiddenResult fr = identify_forbidden(g.group);
  cert.checks.push_back({"forbidden_list", fr.forbidden ? Outcome::failed : Outcome::passed,
                         fr.forbidden ? "the group is " + fr.name + ": " + fr.evidence : fr.evidence,
                         {}});
  cert.verdict = all_passed(cert.checks) ? Verdict::granted_simple_criterion : Verdict::inconclusive;
  return cert;
}

Certificate low_degree_certificate(const SurfaceConfig& cfg, const SurfaceGroup& g) {
  Certificate cert = base_certificate(cfg, g);
  cert.assumptions.push_back(
      "The supplied generators are assumed to generate the full automorphism group of the surface; this is not verified.");
  cert.checks.push_back({"surface_smooth", Outcome::passed, "the cubic and its gradient have no common zero", {}});
  cert.checks.push_back(
      {"generators", Outcome::passed, std::to_string(cfg.generators.size()) + " projectivities preserving the cubic", {}});
  cert.checks.push_back(closure_check(g));
  cert.checks.push_back(fixed_point_free_on_surface(cfg, g));
  cert.checks.push_back(degree_bound_table());
  cert.verdict = all_passed(cert.checks) ? Verdict::granted_low_degree : Verdict::inconclusive;
  return cert;
}

Certificate certify(const json& config, std::optional<int> conductor_override, std::size_t cap) {
  SurfaceConfig cfg;
  try {
    cfg = parse_config(config, conductor_override);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CapExceeded) throw;
    Certificate cert;
    cert.config_name = config.is_object() ? config.value("name", "unnamed") : "unnamed";
    cert.verdict = Verdict::rejected_input;
    cert.error = e.what();
    cert.checks.push_back({"input", Outcome::failed, e.what(), {}});
    return cert;
  }
  SurfaceGroup g = build_group(cfg, cap);
  return cfg.model == ModelType::cubic_in_p3 ? low_degree_certificate(cfg, g) : criterion_simple(cfg, g);
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["config"] = c.config_name;
  j["verdict"] = to_string(c.verdict);
  j["assumptions"] = c.assumptions;
  j["checks"] = json::array();
  for (const auto& ch : c.checks) {
    j["checks"].push_back(
        {{"name", ch.name}, {"outcome", to_string(ch.outcome)}, {"evidence", ch.evidence}, {"unresolved", ch.unresolved}});
  }
  if (c.group) {
    json stats = json::object();
    for (const auto& [o, count] : c.group->element_orders) stats[std::to_string(o)] = count;
    j["group"] = {{"order", c.group->order}, {"abelian", c.group->is_abelian}, {"statistics", stats}};
  } else {
    j["group"] = nullptr;
  }
  j["config_digest"] = c.config_digest;
  j["provenance"] = {{"tool", "kecert"}, {"version", "1.0.0"}, {"model", c.model}, {"field_conductor", c.conductor}};
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

std::string certificate_to_text(const Certificate& c) {
  std::ostringstream out;
  out << "certificate for " << c.config_name << "\n";
  out << "verdict: " << to_string(c.verdict) << "\n";
  if (!c.model.empty()) out << "model: " << c.model << " over Q(zeta_" << c.conductor << ")\n";
  if (c.group) out << "group: " << c.group->to_string() << "\n";
  out << "checks:\n";
  for (const auto& ch : c.checks) {
    out << "  [" << to_string(ch.outcome) << "] " << ch.name << ": " << ch.evidence << "\n";
    for (const auto& u : ch.unresolved) out << "      unresolved: " << u << "\n";
  }
  if (!c.assumptions.empty()) {
    out << "assumptions:\n";
    for (const auto& a : c.assumptions) out << "  - " << a << "\n";
  }
  if (!c.config_digest.empty()) out << "config digest: " << c.config_digest << "\n";
  return out.str();
}

}  // namespace kecert
