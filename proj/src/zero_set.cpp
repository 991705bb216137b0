#include "kecert/zero_set.hpp"

#include <algorithm>

namespace kecert {

PointCoords normalize_projective(const PointCoords& p) {
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    if (c.is_one()) return p;
    Scalar inv = c.inverse();
    PointCoords out;
    out.reserve(p.size());
    for (const auto& x : p) out.push_back(x * inv);
    return out;
  }
  throw Error(ErrorKind::BadParams, "projective point with all coordinates zero");
}

namespace {

bool lexicographic_less(const PointCoords& a, const PointCoords& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Prepared {
  Polynomial lead;                  // constant leading coefficient in the last variable
  std::vector<Polynomial> others;
  std::vector<Scalar> shear;
  int samples = 0;                  // number of t values needed
};

// Small integer tuples in a fixed order: all zeros first, then growing boxes.
std::vector<std::vector<long>> shear_candidates(int count) {
  std::vector<std::vector<long>> out;
  out.emplace_back(static_cast<std::size_t>(count), 0);
  for (long r = 1; r <= 4; ++r) {
    std::vector<long> t(static_cast<std::size_t>(count), -r);
    for (;;) {
      bool on_box = false;
      for (long x : t) on_box = on_box || x == r || x == -r;
      if (on_box) out.push_back(t);
      std::size_t i = 0;
      while (i < t.size() && t[i] == r) t[i++] = -r;
      if (i == t.size()) break;
      ++t[i];
    }
  }
  return out;
}

Polynomial apply_shear(const Polynomial& f, const std::vector<Scalar>& shear) {
  const int n = f.num_vars();
  const FieldPtr& ctx = f.context();
  std::vector<Polynomial> args;
  Polynomial last = Polynomial::variable(ctx, n, n - 1);
  for (int i = 0; i < n - 1; ++i) args.push_back(Polynomial::variable(ctx, n, i) + last * shear[static_cast<std::size_t>(i)]);
  args.push_back(last);
  return f.compose(args);
}

// Assumes polys nonzero and nonconstant.
Prepared prepare(const std::vector<Polynomial>& polys) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < polys.size(); ++i)
    if (polys[i].total_degree() < polys[best].total_degree()) best = i;
  const Polynomial& g1 = polys[best];
  const int n = g1.num_vars();
  const int m = g1.total_degree();
  const FieldPtr& ctx = g1.context();
  Polynomial top = g1.homogeneous_part(m);
  Prepared prep;
  for (const auto& cand : shear_candidates(n - 1)) {
    PointCoords at;
    for (long s : cand) at.emplace_back(ctx, Rational(s));
    at.push_back(Scalar::one(ctx));
    if (top.evaluate(at).is_zero()) continue;
    at.pop_back();
    prep.shear = at;
    break;
  }
  if (prep.shear.empty()) throw Error(ErrorKind::BadParams, "internal: no admissible shear");
  prep.lead = apply_shear(g1, prep.shear);
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (i != best) prep.others.push_back(apply_shear(polys[i], prep.shear));
  const int k = static_cast<int>(prep.others.size());
  prep.samples = k == 0 ? 0 : m * (k - 1) + 1;
  return prep;
}

Polynomial sample(const Prepared& prep, int t) {
  const FieldPtr& ctx = prep.lead.context();
  Polynomial h(ctx, prep.lead.num_vars());
  Scalar pw = Scalar::one(ctx);
  for (const auto& g : prep.others) {
    h += g * pw;
    pw *= Rational(t);
  }
  return resultant(prep.lead, h, prep.lead.num_vars() - 1);
}

// Splits the input into nonzero entries; reports a nonzero constant if present.
bool collect_nonzero(const std::vector<Polynomial>& polys, std::vector<Polynomial>& out) {
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return true;
    out.push_back(p);
  }
  return false;
}

UnivariatePoly gcd_in_last(const std::vector<Polynomial>& polys, int var, const Scalar& value) {
  UnivariatePoly g(value.context());
  for (const auto& p : polys) {
    UnivariatePoly u = to_univariate(p.specialize(var, value), 1 - var);
    if (u.is_zero()) continue;
    g = g.is_zero() ? u.monic() : gcd(g, u);
    if (g.degree() == 0) break;
  }
  return g;
}

UnivariatePoly strip_root(UnivariatePoly p, const Scalar& r) {
  while (p.degree() > 0 && p.evaluate(r).is_zero()) p = p.divmod(UnivariatePoly::linear(r)).first;
  return p;
}

std::optional<Scalar> some_root(const UnivariatePoly& p) {
  auto roots = univariate_roots_in_field(p);
  if (roots.roots.empty()) return std::nullopt;
  return roots.roots.front().first;
}

}  // namespace

Projection project_out_last(const std::vector<Polynomial>& polys) {
  Projection out;
  std::vector<Polynomial> nz;
  if (collect_nonzero(polys, nz)) {
    out.contains_nonzero_constant = true;
    return out;
  }
  if (nz.empty()) return out;
  Prepared prep = prepare(nz);
  out.shear = prep.shear;
  for (int t = 0; t < prep.samples; ++t) out.eliminants.push_back(sample(prep, t));
  return out;
}

ZeroSetDecision decide_affine_zeros(const std::vector<Polynomial>& polys, const std::vector<PointCoords>& excluded) {
  ZeroSetDecision result;
  std::vector<Polynomial> nz;
  if (collect_nonzero(polys, nz)) {
    result.evidence = "system contains a nonzero constant";
    return result;
  }
  if (nz.empty()) {
    result.kind = ZeroSetKind::positive_dimensional;
    result.evidence = "all polynomials vanish identically";
    return result;
  }
  const FieldPtr ctx = nz[0].context();
  Polynomial common = gcd_all(nz);
  if (!common.is_constant()) {
    result.kind = ZeroSetKind::positive_dimensional;
    result.evidence = "common factor " + common.to_string();
    return result;
  }
  Prepared prep = prepare(nz);
  const Scalar& s = prep.shear[0];
  std::vector<Polynomial> sheared{prep.lead};
  sheared.insert(sheared.end(), prep.others.begin(), prep.others.end());

  UnivariatePoly g(ctx);
  int used = 0;
  if (prep.samples == 0) {
    g = UnivariatePoly::constant(ctx, Scalar::one(ctx));  // single curve; handled below
  }
  for (int t = 0; t < prep.samples; ++t) {
    UnivariatePoly r = to_univariate(sample(prep, t), 0);
    ++used;
    if (r.is_zero()) continue;
    g = g.is_zero() ? r.monic() : gcd(g, r);
    if (g.degree() == 0) break;
  }
  if (prep.samples == 0) {
    result.kind = ZeroSetKind::positive_dimensional;
    result.evidence = "single curve " + nz[0].to_string();
    return result;
  }
  if (g.degree() <= 0) {
    result.evidence = "x-eliminant is constant after " + std::to_string(used) + " resultant samples";
    return result;
  }

  auto unshear = [&](const Scalar& x, const Scalar& y) { return PointCoords{x + s * y, y}; };
  for (const auto& e : excluded) {
    Scalar xe = e[0] - s * e[1];
    if (!g.evaluate(xe).is_zero()) continue;
    UnivariatePoly ys = gcd_in_last(sheared, 0, xe);
    for (const auto& f : excluded)
      if (f[0] - s * f[1] == xe) ys = strip_root(ys, f[1]);
    if (ys.degree() > 0) {
      result.kind = ZeroSetKind::finite_nonempty;
      result.evidence = "common zero over x = " + xe.to_string() + " besides the excluded points";
      if (auto y = some_root(ys)) result.witness = unshear(xe, *y);
      return result;
    }
    g = strip_root(g, xe);
  }
  if (g.degree() <= 0) {
    result.evidence = "only excluded points survive elimination";
    return result;
  }
  result.kind = ZeroSetKind::finite_nonempty;
  result.evidence = "x-eliminant " + g.to_string() + " has roots off the excluded points";
  for (const auto& [x, mult] : univariate_roots_in_field(g).roots) {
    UnivariatePoly ys = gcd_in_last(sheared, 0, x);
    if (auto y = some_root(ys)) {
      result.witness = unshear(x, *y);
      break;
    }
  }
  return result;
}

namespace {

std::vector<Polynomial> to_chart(const std::vector<Polynomial>& forms) {
  std::vector<Polynomial> out;
  const FieldPtr& ctx = forms[0].context();
  for (const auto& f : forms) out.push_back(f.specialize(0, Scalar::one(ctx)).permute_vars({0, 0, 1}, 2));
  return out;
}

Polynomial at_infinity(const std::vector<Polynomial>& forms) {
  const FieldPtr& ctx = forms[0].context();
  Polynomial b(ctx, 3);
  for (const auto& f : forms) {
    Polynomial r = f.specialize(0, Scalar::zero(ctx));
    if (r.is_zero()) continue;
    b = gcd_homogeneous(b, r);
    if (b.is_constant()) break;
  }
  return b;
}

void check_forms(const std::vector<Polynomial>& forms) {
  for (const auto& f : forms) {
    if (f.num_vars() != 3) throw Error(ErrorKind::ArityMismatch, "expected forms in three variables");
    if (!f.is_homogeneous()) throw Error(ErrorKind::InhomogeneousComponents, "expected homogeneous forms");
  }
}

}  // namespace

ZeroSetDecision decide_common_zeros(const std::vector<Polynomial>& forms, const std::vector<PointCoords>& excluded) {
  check_forms(forms);
  ZeroSetDecision result;
  std::vector<Polynomial> nz;
  if (collect_nonzero(forms, nz)) {
    result.evidence = "system contains a nonzero constant";
    return result;
  }
  if (nz.empty()) {
    result.kind = ZeroSetKind::positive_dimensional;
    result.evidence = "all forms vanish identically";
    return result;
  }
  const FieldPtr ctx = nz[0].context();
  Polynomial common = gcd_all(nz);
  if (!common.is_constant()) {
    result.kind = ZeroSetKind::positive_dimensional;
    result.evidence = "common factor " + common.to_string();
    return result;
  }

  Polynomial b = at_infinity(nz);
  for (const auto& e : excluded) {
    if (!e[0].is_zero()) continue;
    Polynomial line = Polynomial::variable(ctx, 3, 1) * e[2] - Polynomial::variable(ctx, 3, 2) * e[1];
    while (b.total_degree() > 0) {
      auto q = exact_divide(b, line);
      if (!q) break;
      b = *q;
    }
  }
  if (b.total_degree() > 0) {
    result.kind = ZeroSetKind::finite_nonempty;
    result.evidence = "common zero on X0 = 0 cut out by " + b.to_string();
    if (b.specialize(1, Scalar::zero(ctx)).is_zero()) {
      result.witness = PointCoords{Scalar::zero(ctx), Scalar::zero(ctx), Scalar::one(ctx)};
    } else if (auto t = some_root(to_univariate(b.specialize(1, Scalar::one(ctx)), 2))) {
      result.witness = PointCoords{Scalar::zero(ctx), Scalar::one(ctx), *t};
    }
    return result;
  }

  std::vector<PointCoords> affine_excluded;
  for (const auto& e : excluded) {
    if (e[0].is_zero()) continue;
    Scalar inv = e[0].inverse();
    affine_excluded.push_back({e[1] * inv, e[2] * inv});
  }
  ZeroSetDecision affine = decide_affine_zeros(to_chart(nz), affine_excluded);
  result.kind = affine.kind;
  result.evidence = "chart X0 = 1: " + affine.evidence;
  if (affine.witness) result.witness = PointCoords{Scalar::one(ctx), (*affine.witness)[0], (*affine.witness)[1]};
  return result;
}

PointSolveResult solve_points(const std::vector<Polynomial>& forms) {
  check_forms(forms);
  PointSolveResult result;
  std::vector<Polynomial> nz;
  if (collect_nonzero(forms, nz)) return result;
  if (nz.empty()) {
    result.positive_dimensional = true;
    return result;
  }
  const FieldPtr ctx = nz[0].context();
  if (!gcd_all(nz).is_constant()) {
    result.positive_dimensional = true;
    return result;
  }
  const Scalar zero = Scalar::zero(ctx);
  const Scalar one = Scalar::one(ctx);

  Polynomial b = at_infinity(nz);
  if (b.total_degree() > 0) {
    if (b.specialize(1, zero).is_zero()) result.points.push_back({zero, zero, one});
    UnivariatePoly u = to_univariate(b.specialize(1, one), 2);
    if (u.degree() > 0) {
      auto roots = univariate_roots_in_field(u);
      result.unresolved = result.unresolved || roots.unresolved;
      for (const auto& [t, mult] : roots.roots) result.points.push_back({zero, one, t});
    }
  }

  std::vector<Polynomial> chart = to_chart(nz);
  std::vector<Polynomial> cnz;
  if (!collect_nonzero(chart, cnz) && !cnz.empty()) {
    Prepared prep = prepare(cnz);
    const Scalar& s = prep.shear[0];
    std::vector<Polynomial> sheared{prep.lead};
    sheared.insert(sheared.end(), prep.others.begin(), prep.others.end());
    UnivariatePoly g(ctx);
    for (int t = 0; t < prep.samples; ++t) {
      UnivariatePoly r = to_univariate(sample(prep, t), 0);
      if (r.is_zero()) continue;
      g = g.is_zero() ? r.monic() : gcd(g, r);
      if (g.degree() == 0) break;
    }
    if (prep.samples == 0) throw Error(ErrorKind::BadParams, "internal: single curve after gcd check");
    if (g.degree() > 0) {
      auto xs = univariate_roots_in_field(g);
      result.unresolved = result.unresolved || xs.unresolved;
      for (const auto& [x, mult] : xs.roots) {
        UnivariatePoly ys = gcd_in_last(sheared, 0, x);
        if (ys.degree() <= 0) continue;
        auto yr = univariate_roots_in_field(ys);
        result.unresolved = result.unresolved || yr.unresolved;
        for (const auto& [y, m2] : yr.roots) result.points.push_back({one, x + s * y, y});
      }
    }
  }
  std::sort(result.points.begin(), result.points.end(), lexicographic_less);
  result.points.erase(std::unique(result.points.begin(), result.points.end()), result.points.end());
  return result;
}

SmoothnessResult is_smooth_plane_curve(const Polynomial& f) {
  if (f.num_vars() != 3 || !f.is_homogeneous() || f.total_degree() < 1) {
    throw Error(ErrorKind::BadParams, "expected a plane curve given by a form in three variables");
  }
  SmoothnessResult result;
  std::vector<Polynomial> system{f};
  for (int i = 0; i < 3; ++i) system.push_back(f.derivative(i));
  Polynomial common = gcd_all(system);
  if (!common.is_constant()) {
    result.squarefree = false;
    result.certificate = "repeated component " + common.to_string();
    return result;
  }
  ZeroSetDecision d = decide_common_zeros(system, {});
  result.smooth = d.kind == ZeroSetKind::empty;
  result.certificate = d.evidence;
  if (d.witness) {
    std::string w;
    for (const auto& c : *d.witness) w += (w.empty() ? "" : ",") + c.to_string();
    result.certificate += "; singular point [" + w + "]";
  }
  return result;
}

SmoothnessResult is_smooth_surface(const Polynomial& f) {
  if (f.num_vars() != 4 || !f.is_homogeneous() || f.total_degree() < 1) {
    throw Error(ErrorKind::BadParams, "expected a surface given by a form in four variables");
  }
  const FieldPtr& ctx = f.context();
  SmoothnessResult result;
  std::vector<Polynomial> grad;
  for (int i = 0; i < 4; ++i) grad.push_back(f.derivative(i));
  std::vector<Polynomial> with_f{f};
  with_f.insert(with_f.end(), grad.begin(), grad.end());
  Polynomial common = gcd_all(with_f);
  if (!common.is_constant()) {
    result.squarefree = false;
    result.certificate = "repeated component " + common.to_string();
    return result;
  }
  std::vector<Polynomial> plane;
  for (const auto& g : grad) plane.push_back(g.specialize(0, Scalar::zero(ctx)).permute_vars({0, 0, 1, 2}, 3));
  ZeroSetDecision at_inf = decide_common_zeros(plane, {});
  if (at_inf.kind != ZeroSetKind::empty) {
    result.certificate = "singular along Z0 = 0: " + at_inf.evidence;
    return result;
  }
  std::vector<Polynomial> chart;
  for (const auto& g : grad) chart.push_back(g.specialize(0, Scalar::one(ctx)).permute_vars({0, 0, 1, 2}, 3));
  Projection proj = project_out_last(chart);
  if (proj.contains_nonzero_constant) {
    result.smooth = true;
    result.certificate = "gradient contains a nonzero constant in the chart Z0 = 1";
    return result;
  }
  std::vector<Polynomial> plane_elims;
  for (const auto& e : proj.eliminants) plane_elims.push_back(e.with_num_vars(2));
  ZeroSetDecision affine = decide_affine_zeros(plane_elims, {});
  result.smooth = affine.kind == ZeroSetKind::empty;
  result.certificate = "Z0 = 0: " + at_inf.evidence + "; chart Z0 = 1 after eliminating Z3 with " +
                       std::to_string(proj.eliminants.size()) + " resultants: " + affine.evidence;
  return result;
}

}  // namespace kecert
