#pragma once

// Certificate assembly.  Two sufficient conditions are checked:
//  * the simple criterion for blown-up planes: the group acts without fixed points,
//    acts effectively on every invariant curve and is not a finite subgroup of PGL(2);
//  * the low-degree criterion for cubic surfaces: the (supplied) automorphism group
//    acts without fixed points.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kecert/surface.hpp"

namespace kecert {

enum class Outcome { passed, failed, unresolved };
std::string to_string(Outcome o);

struct CheckResult {
  std::string name;
  Outcome outcome = Outcome::unresolved;
  std::string evidence;
  std::vector<std::string> unresolved;
};

enum class Verdict { granted_simple_criterion, granted_low_degree, inconclusive, rejected_input };
std::string to_string(Verdict v);

struct Certificate {
  std::string config_name;
  std::string model;
  int conductor = 0;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::string> assumptions;
  std::vector<CheckResult> checks;
  std::optional<GroupFingerprint> group;
  std::string config_digest;
  std::string error;  // rejected input only
};

/// Common fixed subspaces (as bases) of the given invertible matrices.
struct CommonFixedSpaces {
  std::vector<std::vector<Vector>> spaces;
  bool unresolved = false;
};
CommonFixedSpaces common_fixed_subspaces(const std::vector<Matrix>& matrices);

CheckResult fixed_point_free_on_surface(const SurfaceConfig& cfg, const SurfaceGroup& g);

struct EffectivenessOptions {
  /// Skip the elliptic-curve discharge so the stabilizer quotient is always examined.
  bool treat_cubics_as_rational = false;
};
CheckResult invariant_curve_effectiveness(const SurfaceConfig& cfg, const SurfaceGroup& g, EffectivenessOptions opts = {});

/// r >= (r - 3) d
bool degree_bound_check(int r, int d);
/// Passes when, for each r = 6, 7, 8, the bound forces d <= 2 (it fails at d = 3).
CheckResult degree_bound_table();

Certificate criterion_simple(const SurfaceConfig& cfg, const SurfaceGroup& g);
Certificate low_degree_certificate(const SurfaceConfig& cfg, const SurfaceGroup& g);

/// Parses, validates, closes the group and runs the applicable criterion.
/// Invalid input yields verdict rejected_input; CapExceeded propagates.
Certificate certify(const nlohmann::json& config, std::optional<int> conductor_override = std::nullopt,
                    std::size_t cap = kDefaultGroupCap);

nlohmann::json certificate_to_json(const Certificate& c);
std::string certificate_to_text(const Certificate& c);

/// 0 granted, 1 rejected input, 2 inconclusive.
int exit_code(Verdict v);

}  // namespace kecert
