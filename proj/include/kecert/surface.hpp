#pragma once

// Surface configurations: a plane blown up in points or a cubic surface in P^3,
// together with generator maps, plus the group they generate.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kecert/groups.hpp"
#include "kecert/picard.hpp"
#include "kecert/projgeom.hpp"

namespace kecert {

enum class ModelType { blown_up_plane, cubic_in_p3 };

struct GeneratorSpec {
  std::string label;
  nlohmann::json descriptor;
  PolynomialMap map;
  std::optional<LatticeIsometry> lift;  // blown-up planes only
};

struct SurfaceConfig {
  std::string name;
  int conductor = 12;
  FieldPtr field;
  ModelType model = ModelType::blown_up_plane;
  std::vector<ProjectivePoint> points;  // blown-up plane
  Polynomial cubic;                     // cubic surface
  std::vector<GeneratorSpec> generators;
  std::string digest;

  int r() const { return static_cast<int>(points.size()); }
};

/// Builds the configuration and validates it: general position, generators that are
/// automorphisms of the surface, lattice lifts consistent with the maps.  Invalid
/// input raises an Error (InvalidConfig for failed validation).
SurfaceConfig parse_config(const nlohmann::json& j, std::optional<int> conductor_override = std::nullopt);
/// Reads and parses a file; JSON syntax errors carry line and column.
nlohmann::json read_json_file(const std::string& path);

/// A map descriptor: {"kind": ..., "params": {...}}, {"matrix": [[...]]} or {"components": [...]}.
PolynomialMap make_named_map(const nlohmann::json& descriptor, const std::vector<ProjectivePoint>& points,
                             const FieldPtr& field, int num_vars);

/// Lattice action of a map of the blown-up plane, derived from its geometry.
LatticeIsometry derive_lift(const PolynomialMap& f, const std::vector<ProjectivePoint>& points, const nlohmann::json& descriptor);
/// Empty string when the lift is consistent with the map, else a description of the mismatch.
std::string check_lift(const PolynomialMap& f, const std::vector<ProjectivePoint>& points, const LatticeIsometry& lift);
/// Order of vanishing of a form at a point.
int multiplicity_at(const Polynomial& f, const ProjectivePoint& p);

struct SurfaceElement {
  PolynomialMap map;
  std::optional<LatticeIsometry> lift;
};

struct SurfaceGroup {
  std::vector<SurfaceElement> elements;  // index 0 is the identity
  FiniteGroup group;
};
SurfaceGroup build_group(const SurfaceConfig& cfg, std::size_t cap = kDefaultGroupCap);

}  // namespace kecert
