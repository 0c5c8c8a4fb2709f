#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "frattini/builtins.hpp"
#include "frattini/checks.hpp"
#include "frattini/group_io.hpp"
#include "frattini/suite.hpp"
#include "frattini/sylow.hpp"

namespace {

using namespace frattini;

Group resolve_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) return load_group(spec);
  return builtin_group(spec);
}

void apply_budget_flags(Budgets& b, std::uint64_t aut_budget, std::uint64_t lattice_budget) {
  if (aut_budget) b.aut = aut_budget;
  if (lattice_budget) {
    b.lattice.max_subgroups = lattice_budget;
    b.lattice.max_order = std::min<std::uint64_t>(lattice_budget, b.lattice.max_order);
  }
}

SuiteConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open config file");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  SuiteConfig cfg = default_suite();
  if (j.contains("groups")) {
    cfg.groups.clear();
    for (const auto& g : j["groups"]) {
      GroupSpec gs;
      if (g.is_string()) {
        gs.spec = g.get<std::string>();
      } else if (g.is_object()) {
        if (g.contains("builtin"))
          gs.spec = g["builtin"].get<std::string>();
        else if (g.contains("file")) {
          gs.spec = g["file"].get<std::string>();
          gs.from_file = true;
        } else {
          throw ValidationError(path + ": group entries need a 'builtin' or 'file' field");
        }
        if (g.contains("aut_budget")) gs.budgets.aut = g["aut_budget"].get<std::uint64_t>();
        if (g.contains("normal_budget"))
          gs.budgets.normal = g["normal_budget"].get<std::uint64_t>();
        if (g.contains("mingen_budget"))
          gs.budgets.mingen = g["mingen_budget"].get<std::uint64_t>();
        if (g.contains("lattice_budget"))
          gs.budgets.lattice.max_subgroups = g["lattice_budget"].get<std::uint64_t>();
      } else {
        throw ValidationError(path + ": group entries must be strings or objects");
      }
      cfg.groups.push_back(std::move(gs));
    }
  }
  if (j.contains("checks")) cfg.checks = j["checks"].get<std::vector<std::string>>();
  if (j.contains("max_order")) cfg.max_order = j["max_order"].get<std::uint64_t>();
  if (j.contains("vdovin_ns")) cfg.vdovin_ns = j["vdovin_ns"].get<std::vector<unsigned>>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  return cfg;
}

int run_verify(const std::vector<std::string>& group_flags, std::vector<std::string> checks,
               const std::string& config_path, std::uint64_t max_order,
               std::uint64_t aut_budget, std::uint64_t lattice_budget,
               const std::string& format, const std::string& out_path) {
  SuiteConfig cfg = config_path.empty() ? default_suite() : config_from_file(config_path);
  if (!group_flags.empty()) {
    cfg.groups.clear();
    for (const auto& spec : group_flags) {
      GroupSpec gs;
      gs.spec = spec;
      gs.from_file = std::filesystem::exists(spec);
      cfg.groups.push_back(std::move(gs));
    }
  }
  if (!checks.empty()) cfg.checks = std::move(checks);
  if (max_order) cfg.max_order = max_order;
  for (auto& gs : cfg.groups) apply_budget_flags(gs.budgets, aut_budget, lattice_budget);
  if (!format.empty()) cfg.format = format;
  if (!out_path.empty()) cfg.out = out_path;

  auto records = run_suite(cfg);
  std::string report = emit_report(records, cfg.format);
  if (cfg.out.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(cfg.out);
    if (!out) throw ValidationError(cfg.out + ": cannot open output path");
    out << report;
  }
  return count_status(records, CheckStatus::fail) == 0 ? 0 : 1;
}

int run_info(const std::string& spec) {
  Group g = resolve_group(spec);
  auto profile = invariant_profile(g);
  auto flags = structure_predicates(g);
  nlohmann::json j;
  j["name"] = g.name();
  j["degree"] = g.degree();
  j["order"] = g.order();
  auto dp = nlohmann::json::object();
  auto sylow_orders = nlohmann::json::object();
  for (const auto& [p, d] : profile.d_p) {
    dp[std::to_string(p)] = d;
    sylow_orders[std::to_string(p)] = profile.sylow.at(p).order();
  }
  j["d_p"] = dp;
  j["sylow_orders"] = sylow_orders;
  j["d_sigma"] = profile.d_sigma;
  j["d_max"] = profile.d_max;
  j["p_max"] = profile.p_max;
  j["nilpotent"] = flags.nilpotent;
  j["soluble"] = flags.soluble;
  j["simple"] = flags.simple;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group invariant computation and verification harness"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a check suite and emit a report");
  std::vector<std::string> group_flags, check_flags;
  std::string config_path, format, out_path;
  std::uint64_t max_order = 0, aut_budget = 0, lattice_budget = 0;
  verify->add_option("--group", group_flags, "group spec or file path (repeatable)");
  verify->add_option("--checks", check_flags, "checks to run (repeatable)")->delimiter(',');
  verify->add_option("--config", config_path, "suite config file (json)");
  verify->add_option("--max-order", max_order, "ceiling for per-normal-subgroup suites");
  verify->add_option("--aut-budget", aut_budget, "automorphism search budget");
  verify->add_option("--lattice-budget", lattice_budget, "subgroup lattice budget");
  verify->add_option("--format", format, "json or text");
  verify->add_option("--out", out_path, "output path (default stdout)");

  auto* info = app.add_subcommand("info", "print the invariant profile of one group");
  std::string info_group;
  info->add_option("--group", info_group, "group spec or file path")->required();

  auto* oracle = app.add_subcommand("oracle", "run a standalone oracle");
  auto* vdovin = oracle->add_subcommand("vdovin", "maximal nilpotent subgroup order in sym(n)");
  unsigned vdovin_n = 0;
  vdovin->add_option("n", vdovin_n, "symmetric group degree")->required();
  oracle->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed())
      return run_verify(group_flags, check_flags, config_path, max_order, aut_budget,
                        lattice_budget, format, out_path);
    if (info->parsed()) return run_info(info_group);
    if (oracle->parsed() && vdovin->parsed()) {
      auto record = frattini::vdovin_check(vdovin_n);
      std::cout << record.to_json().dump(2) << "\n";
      return record.status == frattini::CheckStatus::fail ? 1 : 0;
    }
  } catch (const frattini::ValidationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
