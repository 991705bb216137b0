#include "kecert/surface.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "kecert/named_maps.hpp"
#include "kecert/zero_set.hpp"

namespace kecert {

using nlohmann::json;

namespace {

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Scalar parse_scalar(const json& v, const FieldPtr& field) {
  if (v.is_number_integer()) return Scalar(field, Rational(v.get<long>()));
  if (v.is_string()) return parse_element(v.get<std::string>(), field);
  throw Error(ErrorKind::InvalidConfig, "scalars must be integers or expression strings, got " + v.dump());
}

int get_int(const json& params, const char* key) {
  if (!params.is_object() || !params.contains(key) || !params[key].is_number_integer()) {
    throw Error(ErrorKind::BadParams, std::string("missing integer parameter '") + key + "'");
  }
  return params[key].get<int>();
}

std::vector<int> get_int_list(const json& params, const char* key) {
  if (!params.is_object() || !params.contains(key) || !params[key].is_array()) {
    throw Error(ErrorKind::BadParams, std::string("missing integer list parameter '") + key + "'");
  }
  std::vector<int> out;
  for (const auto& x : params[key]) {
    if (!x.is_number_integer()) throw Error(ErrorKind::BadParams, std::string("'") + key + "' must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::string describe(const json& descriptor) {
  if (descriptor.contains("label")) return descriptor["label"].get<std::string>();
  if (descriptor.contains("kind")) {
    std::string s = descriptor["kind"].get<std::string>();
    if (descriptor.contains("params")) s += descriptor["params"].dump();
    return s;
  }
  return descriptor.contains("matrix") ? "matrix" : "components";
}

DivisorClass pullback_of_hyperplane(const PolynomialMap& f, const std::vector<ProjectivePoint>& points) {
  std::vector<long> m;
  for (const auto& p : points) {
    int best = f.degree();
    for (const auto& c : f.components())
      if (!c.is_zero()) best = std::min(best, multiplicity_at(c, p));
    m.push_back(best);
  }
  return DivisorClass(f.degree(), std::move(m));
}

int point_index(const std::vector<ProjectivePoint>& points, const ProjectivePoint& p) {
  auto it = std::find(points.begin(), points.end(), p);
  return it == points.end() ? 0 : static_cast<int>(it - points.begin()) + 1;
}

}  // namespace

int multiplicity_at(const Polynomial& f, const ProjectivePoint& p) {
  if (f.is_zero()) throw Error(ErrorKind::BadParams, "multiplicity of the zero polynomial");
  const int n = f.num_vars();
  const auto c = static_cast<int>(p.chart());
  const FieldPtr& ctx = f.context();
  std::vector<Polynomial> subs;
  for (int i = 0; i < n; ++i) {
    Polynomial xi = Polynomial::variable(ctx, n, i);
    subs.push_back(i == c ? xi : xi + Polynomial::variable(ctx, n, c) * p[static_cast<std::size_t>(i)]);
  }
  Polynomial g = f.compose(subs);
  int best = f.total_degree();
  for (const auto& [e, coeff] : g.terms()) {
    int deg = 0;
    for (int i = 0; i < n; ++i) deg += e[static_cast<std::size_t>(i)];
    best = std::min(best, deg - e[static_cast<std::size_t>(c)]);
  }
  return best;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError, path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

PolynomialMap make_named_map(const json& descriptor, const std::vector<ProjectivePoint>& points, const FieldPtr& field,
                             int num_vars) {
  if (!descriptor.is_object()) throw Error(ErrorKind::InvalidConfig, "map descriptor must be an object");
  if (descriptor.contains("matrix")) {
    Matrix m;
    for (const auto& row : descriptor["matrix"]) {
      Vector v;
      for (const auto& x : row) v.push_back(parse_scalar(x, field));
      m.push_back(std::move(v));
    }
    if (m.empty() || m.size() != m[0].size()) throw Error(ErrorKind::BadParams, "matrix must be square");
    if (static_cast<int>(m.size()) != num_vars) throw Error(ErrorKind::ArityMismatch, "matrix size does not match the model");
    return PolynomialMap::from_matrix(m);
  }
  if (descriptor.contains("components")) {
    std::vector<Polynomial> comps;
    for (const auto& c : descriptor["components"]) {
      if (!c.is_string()) throw Error(ErrorKind::InvalidConfig, "components must be polynomial strings");
      comps.push_back(parse_polynomial(c.get<std::string>(), field, num_vars));
    }
    if (static_cast<int>(comps.size()) != num_vars) throw Error(ErrorKind::ArityMismatch, "component count does not match the model");
    return PolynomialMap(std::move(comps));
  }
  if (!descriptor.contains("kind") || !descriptor["kind"].is_string()) {
    throw Error(ErrorKind::InvalidConfig, "map descriptor needs 'kind', 'matrix' or 'components'");
  }
  const std::string kind = descriptor["kind"].get<std::string>();
  const json params = descriptor.value("params", json::object());
  if (kind == "identity") return PolynomialMap::identity(field, num_vars);
  if (kind == "coordinate_permutation") return coordinate_permutation(field, get_int_list(params, "perm"));
  auto plane_only = [&] {
    if (num_vars != 3) throw Error(ErrorKind::BadParams, kind + " is a map of the plane");
  };
  if (kind == "standard_cremona") {
    plane_only();
    return standard_cremona(field);
  }
  if (kind == "klein_four") {
    plane_only();
    return klein_four(field, get_int(params, "i"), get_int(params, "j"));
  }
  if (kind == "point_permutation") {
    plane_only();
    return point_permutation(points, get_int_list(params, "images"));
  }
  if (kind == "cremona_fixing") {
    plane_only();
    return cremona_fixing(points, get_int(params, "i"));
  }
  if (kind == "cr_pair_swap") {
    plane_only();
    return cr_pair_swap(points, get_int(params, "i"), get_int(params, "j"));
  }
  if (kind == "sigma") {
    plane_only();
    return sigma(points, get_int(params, "i"));
  }
  throw Error(ErrorKind::UnknownKind, "unknown map kind '" + kind + "'");
}

LatticeIsometry derive_lift(const PolynomialMap& f, const std::vector<ProjectivePoint>& points, const json& descriptor) {
  const int r = static_cast<int>(points.size());
  auto images_of = [&](const std::vector<int>& skip) {
    std::vector<int> images;
    for (int k = 1; k <= r; ++k) {
      if (std::find(skip.begin(), skip.end(), k) != skip.end()) {
        images.push_back(k);
        continue;
      }
      auto img = f.image(points[static_cast<std::size_t>(k - 1)]);
      int j = img ? point_index(points, *img) : 0;
      if (j == 0) throw Error(ErrorKind::InvalidConfig, "generator sends P" + std::to_string(k) + " off the blown-up points");
      images.push_back(j);
    }
    return images;
  };
  if (f.is_projectivity()) return lift_plane_automorphism(images_of({}));
  if (descriptor.value("kind", "") == "sigma" && r == 5) return lift_sigma(descriptor["params"]["i"].get<int>());
  if (f.degree() == 2) {
    DivisorClass pull = pullback_of_hyperplane(f, points);
    std::vector<int> base;
    for (int k = 1; k <= r; ++k)
      if (pull.multiplicities()[static_cast<std::size_t>(k - 1)] > 0) base.push_back(k);
    if (base.size() != 3) throw Error(ErrorKind::InvalidConfig, "quadratic generator must have three blown-up base points");
    return lift_plane_automorphism(images_of(base)).compose(lift_cremona(r, base[0], base[1], base[2], std::nullopt));
  }
  throw Error(ErrorKind::BadParams, "lattice action unknown for generator " + describe(descriptor) +
                                        "; use a projectivity, a quadratic map or a named kind");
}

std::string check_lift(const PolynomialMap& f, const std::vector<ProjectivePoint>& points, const LatticeIsometry& lift) {
  const int r = static_cast<int>(points.size());
  if (lift.r() != r) return "lift has the wrong rank";
  if (!lift.is_isometry()) return "lift is not an isometry fixing K";
  if (r >= 1 && !lift.line_permutation(enumerate_lines(r))) return "lift does not permute the lines";
  DivisorClass pull = pullback_of_hyperplane(f, points);
  DivisorClass expected = lift.inverse().apply(DivisorClass::hyperplane(r));
  if (!(pull == expected)) return "pullback of h is " + pull.to_string() + " but the lift predicts " + expected.to_string();
  for (int k = 1; k <= r; ++k) {
    if (pull.multiplicities()[static_cast<std::size_t>(k - 1)] != 0) continue;
    auto img = f.image(points[static_cast<std::size_t>(k - 1)]);
    int j = img ? point_index(points, *img) : 0;
    if (j == 0) return "P" + std::to_string(k) + " is sent off the blown-up points";
    if (!(lift.apply(DivisorClass::exceptional(r, k)) == DivisorClass::exceptional(r, j))) {
      return "lift disagrees with the image of P" + std::to_string(k);
    }
  }
  return {};
}

SurfaceConfig parse_config(const json& j, std::optional<int> conductor_override) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidConfig, "config must be a JSON object");
  SurfaceConfig cfg;
  cfg.name = j.value("name", "unnamed");
  cfg.conductor = conductor_override ? *conductor_override : j.value("field_conductor", 12);
  if (cfg.conductor < 1) throw Error(ErrorKind::InvalidConfig, "field conductor must be positive");
  cfg.field = FieldContext::get(cfg.conductor);
  json canonical = j;
  canonical["field_conductor"] = cfg.conductor;
  cfg.digest = "fnv1a64:" + fnv1a_hex(canonical.dump());

  if (!j.contains("model") || !j["model"].is_object()) throw Error(ErrorKind::InvalidConfig, "missing 'model' object");
  const json& model = j["model"];
  const std::string type = model.value("type", "");
  int num_vars = 3;
  if (type == "blown_up_plane") {
    cfg.model = ModelType::blown_up_plane;
    if (!model.contains("points") || !model["points"].is_array()) throw Error(ErrorKind::InvalidConfig, "missing 'points'");
    for (const auto& pt : model["points"]) {
      if (!pt.is_array() || pt.size() != 3) throw Error(ErrorKind::InvalidConfig, "points need three coordinates");
      std::vector<Scalar> coords;
      for (const auto& x : pt) coords.push_back(parse_scalar(x, cfg.field));
      if (std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); })) {
        throw Error(ErrorKind::InvalidConfig, "the zero vector is not a point");
      }
      cfg.points.emplace_back(coords);
    }
    if (cfg.points.empty() || cfg.points.size() > 8) throw Error(ErrorKind::InvalidConfig, "blow up between 1 and 8 points");
    GeneralPositionResult gp = general_position_check(cfg.points);
    if (!gp.ok) {
      std::string w;
      for (auto i : gp.witness) w += (w.empty() ? "" : ",") + std::to_string(i + 1);
      throw Error(ErrorKind::InvalidConfig, "points are not in general position: " + gp.violation + " (points " + w + ")");
    }
  } else if (type == "cubic_in_p3") {
    cfg.model = ModelType::cubic_in_p3;
    num_vars = 4;
    cfg.cubic = parse_polynomial(model.value("equation", ""), cfg.field, 4);
    if (cfg.cubic.total_degree() != 3 || !cfg.cubic.is_homogeneous()) {
      throw Error(ErrorKind::InvalidConfig, "the surface equation must be a cubic form in X0..X3");
    }
    SmoothnessResult s = is_smooth_surface(cfg.cubic);
    if (!s.smooth) throw Error(ErrorKind::InvalidConfig, "the cubic surface is singular: " + s.certificate);
  } else {
    throw Error(ErrorKind::InvalidConfig, "model type must be blown_up_plane or cubic_in_p3");
  }

  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty()) {
    throw Error(ErrorKind::InvalidConfig, "at least one generator is required");
  }
  for (const auto& d : j["generators"]) {
    GeneratorSpec g;
    g.descriptor = d;
    g.label = describe(d);
    g.map = make_named_map(d, cfg.points, cfg.field, num_vars);
    if (cfg.model == ModelType::cubic_in_p3) {
      if (!g.map.is_projectivity()) throw Error(ErrorKind::InvalidConfig, g.label + " is not a projectivity of P^3");
      Polynomial image = substitute_map(cfg.cubic, g.map.components());
      const Scalar& lc = cfg.cubic.leading_coefficient();
      if (image.is_zero() || image * lc != cfg.cubic * image.coefficient(cfg.cubic.leading_exponent())) {
        throw Error(ErrorKind::InvalidConfig, g.label + " does not preserve the cubic surface");
      }
    } else {
      if (!g.map.is_projectivity()) {
        IndeterminacyResult ind = indeterminacy_locus(g.map);
        for (const auto& p : ind.points)
          if (!point_index(cfg.points, p)) {
            throw Error(ErrorKind::InvalidConfig, g.label + " is undefined at " + p.to_string() + ", which is not blown up");
          }
        if (ind.unresolved) throw Error(ErrorKind::InvalidConfig, g.label + " has indeterminacy points outside the field");
      }
      g.lift = derive_lift(g.map, cfg.points, d);
      std::string problem = check_lift(g.map, cfg.points, *g.lift);
      if (!problem.empty()) throw Error(ErrorKind::InvalidConfig, g.label + ": " + problem);
    }
    cfg.generators.push_back(std::move(g));
  }
  return cfg;
}

SurfaceGroup build_group(const SurfaceConfig& cfg, std::size_t cap) {
  const int n = cfg.model == ModelType::cubic_in_p3 ? 4 : 3;
  SurfaceElement id{PolynomialMap::identity(cfg.field, n), std::nullopt};
  if (cfg.model == ModelType::blown_up_plane) id.lift = LatticeIsometry::identity(cfg.r());
  std::vector<SurfaceElement> gens;
  for (const auto& g : cfg.generators) gens.push_back({g.map, g.lift});
  auto compose = [](const SurfaceElement& a, const SurfaceElement& b) {
    SurfaceElement c{compose_maps(a.map, b.map), std::nullopt};
    if (a.lift && b.lift) c.lift = a.lift->compose(*b.lift);
    return c;
  };
  auto key = [](const SurfaceElement& e) { return e.map.key(); };
  auto closure = generate_closure(id, gens, compose, key, cap);
  return {std::move(closure.elements), std::move(closure.group)};
}

}  // namespace kecert
