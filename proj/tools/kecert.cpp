// kecert: certificate checker for automorphism-group hypotheses on del Pezzo surfaces.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kecert/nadel.hpp"

using nlohmann::json;
using namespace kecert;

namespace {

constexpr int kExitGranted = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCap = 3;

struct Options {
  std::string out;
  std::string format = "text";
  std::optional<int> conductor;
  std::size_t cap = kDefaultGroupCap;
  std::string scenario;
  std::string input;
};

std::filesystem::path scenario_dir() {
  if (const char* env = std::getenv("KECERT_SCENARIOS")) return env;
  return KECERT_SCENARIO_DIR;
}

json load_input(const Options& o) {
  if (!o.scenario.empty()) {
    auto path = scenario_dir() / (o.scenario + ".json");
    if (!std::filesystem::exists(path)) throw Error(ErrorKind::InvalidConfig, "unknown scenario '" + o.scenario + "'");
    return read_json_file(path.string());
  }
  if (o.input.empty()) throw Error(ErrorKind::InvalidConfig, "give a config file or --scenario NAME");
  return read_json_file(o.input);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorKind::InvalidConfig, "cannot write " + o.out);
  f << text;
}

void emit(const Options& o, const json& j, const std::string& text) {
  emit(o, o.format == "json" ? j.dump(2) + "\n" : text);
}

int report_error(const Options& o, const Error& e) {
  json j{{"error", e.what()}, {"kind", std::string(to_string(e.kind()))}};
  emit(o, j, std::string("error: ") + e.what() + "\n");
  return e.kind() == ErrorKind::CapExceeded ? kExitCap : kExitInvalid;
}

int cmd_verify(const Options& o) {
  Certificate cert = certify(load_input(o), o.conductor, o.cap);
  emit(o, certificate_to_json(cert), certificate_to_text(cert));
  return exit_code(cert.verdict);
}

int cmd_lattice(const Options& o, int r, const std::string& what) {
  json j{{"r", r}, {"what", what}};
  std::string text;
  if (what == "counts") {
    json counts = json::object();
    for (int k = 1; k <= 8; ++k) {
      auto n = enumerate_lines(k).size();
      counts[std::to_string(k)] = n;
      text += "r=" + std::to_string(k) + " lines=" + std::to_string(n) + " K^2=" +
              std::to_string(intersection_pairing(DivisorClass::canonical(k), DivisorClass::canonical(k))) + "\n";
    }
    j["line_counts"] = counts;
  } else {
    auto classes = what == "lines" ? enumerate_lines(r) : enumerate_roots(r);
    j["count"] = classes.size();
    j["classes"] = json::array();
    for (const auto& c : classes) {
      j["classes"].push_back(c.coeffs());
      text += c.to_string() + "\n";
    }
    text += std::to_string(classes.size()) + " " + what + "\n";
  }
  emit(o, j, text);
  return kExitGranted;
}

int cmd_group(const Options& o) {
  SurfaceConfig cfg = parse_config(load_input(o), o.conductor);
  SurfaceGroup g = build_group(cfg, o.cap);
  GroupFingerprint f = fingerprint(g.group);
  ForbiddenResult fr = identify_forbidden(g.group);
  json stats = json::object();
  for (const auto& [ord, count] : f.element_orders) stats[std::to_string(ord)] = count;
  json j{{"config", cfg.name},
         {"order", f.order},
         {"abelian", f.is_abelian},
         {"statistics", stats},
         {"forbidden", fr.forbidden},
         {"forbidden_name", fr.name},
         {"evidence", fr.evidence}};
  std::string text = "group of " + cfg.name + ": " + f.to_string() + "\n" +
                     (fr.forbidden ? "forbidden (" + fr.name + "): " : "not forbidden: ") + fr.evidence + "\n";
  emit(o, j, text);
  return kExitGranted;
}

int cmd_fixed_locus(const Options& o, int index) {
  SurfaceConfig cfg = parse_config(load_input(o), o.conductor);
  if (index < 1 || index > static_cast<int>(cfg.generators.size())) {
    throw Error(ErrorKind::BadIndices, "generator index must be between 1 and " + std::to_string(cfg.generators.size()));
  }
  const GeneratorSpec& gen = cfg.generators[static_cast<std::size_t>(index - 1)];
  json j{{"config", cfg.name}, {"generator", gen.label}, {"map", gen.map.key()}};
  std::string text = "fixed locus of " + gen.label + " [" + gen.map.key() + "]\n";
  if (cfg.model == ModelType::cubic_in_p3) {
    EigenResult eig = projectivity_fixed_points(gen.map.matrix());
    j["eigenspaces"] = json::array();
    for (const auto& s : eig.spaces) {
      json basis = json::array();
      std::string row = "  eigenvalue " + s.eigenvalue.to_string() + ":";
      for (const auto& v : s.basis) {
        basis.push_back(ProjectivePoint(v).to_string());
        row += " " + ProjectivePoint(v).to_string();
      }
      j["eigenspaces"].push_back({{"eigenvalue", s.eigenvalue.to_string()}, {"basis", basis}});
      text += row + "\n";
    }
    j["unresolved"] = eig.unresolved;
    if (eig.unresolved) text += "  unresolved: some eigenvalues lie outside the field\n";
    emit(o, j, text);
    return kExitGranted;
  }
  FixedLocus fl = fixed_locus(gen.map, cfg.points);
  j["identity_map"] = fl.identity_map;
  j["plane_points"] = json::array();
  j["curve_components"] = json::array();
  j["exceptional"] = json::array();
  if (fl.identity_map) text += "  identity_map\n";
  for (const auto& p : fl.plane_points) {
    j["plane_points"].push_back({{"point", p.point.to_string()}, {"blown_up", p.blown_up}});
    text += "  point " + p.point.to_string() + (p.blown_up ? " (blown up)" : "") + "\n";
  }
  for (const auto& c : fl.curve_components) {
    j["curve_components"].push_back(c.to_string());
    text += "  curve " + c.to_string() + " = 0\n";
  }
  for (const auto& e : fl.exceptional) {
    json dirs = json::array();
    std::string row = "  exceptional curve over " + e.point.to_string() + ": ";
    if (e.whole_curve) {
      row += "whole curve fixed";
    } else {
      row += "fixed directions";
      for (const auto& d : e.directions) {
        dirs.push_back(d.to_string());
        row += " " + d.to_string();
      }
    }
    j["exceptional"].push_back({{"point", e.point.to_string()}, {"whole_curve", e.whole_curve}, {"directions", dirs}});
    text += row + "\n";
  }
  j["unresolved"] = fl.unresolved;
  if (fl.unresolved) text += "  unresolved: some fixed points lie outside the field\n";
  emit(o, j, text);
  return kExitGranted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kecert: exact checks of automorphism-group hypotheses on del Pezzo surfaces"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool takes_config) {
    sub->add_option("--out", o.out, "Write the report to this file");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--conductor", o.conductor, "Override the cyclotomic conductor")->check(CLI::PositiveNumber);
    sub->add_option("--cap", o.cap, "Maximum group order explored")->check(CLI::PositiveNumber);
    if (takes_config) {
      sub->add_option("config", o.input, "Surface configuration (JSON)");
      sub->add_option("--scenario", o.scenario, "Run a bundled scenario by name");
    }
  };

  auto* verify = app.add_subcommand("verify", "Certify a surface configuration");
  add_common(verify, true);

  int r = 5;
  std::string what = "lines";
  auto* lattice = app.add_subcommand("lattice", "List (-1)-classes or roots of the lattice Z^{1,r}");
  add_common(lattice, false);
  lattice->add_option("-r,--r", r, "Number of blown-up points")->check(CLI::Range(1, 8));
  lattice->add_option("--what", what, "lines, roots or counts")->check(CLI::IsMember({"lines", "roots", "counts"}));

  auto* group = app.add_subcommand("group", "Close the generators and classify the group");
  add_common(group, true);

  int index = 1;
  auto* fixed = app.add_subcommand("fixed-locus", "Fixed locus of one generator");
  add_common(fixed, true);
  fixed->add_option("-g,--generator", index, "Generator number (1-based)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*lattice) return cmd_lattice(o, r, what);
    if (*group) return cmd_group(o);
    if (*fixed) return cmd_fixed_locus(o, index);
  } catch (const Error& e) {
    return report_error(o, e);
  }
  return kExitInvalid;
}
