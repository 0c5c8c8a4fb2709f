#include "frattini/suite.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "frattini/builtins.hpp"
#include "frattini/group_io.hpp"
#include "frattini/numeric.hpp"
#include "frattini/scan.hpp"
#include "frattini/theorem_a.hpp"
#include "frattini/theorem_b.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frattini {

std::vector<std::string> check_registry() {
  return {"tate", "cor23", "thmA", "thmB", "thmC", "comporb", "wolf", "bgp", "vdovin", "gl"};
}

SuiteConfig default_suite() {
  SuiteConfig cfg;
  auto add = [&](const std::string& spec) {
    GroupSpec gs;
    gs.spec = spec;
    return &(cfg.groups.emplace_back(std::move(gs)));
  };
  add("cyclic(4)");
  add("cyclic(30)");
  add("elem_abelian(2,3)");
  add("elem_abelian(3,2)");
  add("dihedral(4)");
  add("dihedral(5)");
  add("dihedral(6)");
  add("q8");
  add("sym(3)");
  add("sym(4)");
  add("sym(5)");
  add("alt(4)");
  add("alt(5)");
  add("alt(6)");
  add("sl23");
  add("gl2_3");
  add("sl2(4)");
  add("sl2(5)");
  add("sl2(7)");
  add("sl2(8)");
  add("sl2(9)");
  add("paper_example(2,1)");
  add("direct_product(sym(3),cyclic(4))");
  {
    GroupSpec gs;
    gs.spec = "direct_product(alt(5),alt(5))";
    gs.budgets.aut = 4000;
    gs.budgets.normal = 8000;
    gs.budgets.mingen = 8000;
    cfg.groups.push_back(std::move(gs));
  }
  {
    GroupSpec gs;
    gs.spec = "swap_product(alt(5))";
    gs.budgets.aut = 8000;
    gs.budgets.normal = 8000;
    gs.budgets.mingen = 8000;
    cfg.groups.push_back(std::move(gs));
  }
  for (auto& gs : cfg.groups)
    if (gs.spec == "sl2(8)") gs.budgets.aut = 600;
  cfg.checks = check_registry();
  return cfg;
}

namespace {

std::vector<CheckRecord> checks_for_group(const Group& g, const GroupSpec& gs,
                                          const SuiteConfig& cfg,
                                          const std::vector<std::string>& checks) {
  std::vector<CheckRecord> out;
  const Budgets& b = gs.budgets;
  auto guarded = [&](const std::string& check, auto&& fn) {
    try {
      fn();
    } catch (const BudgetError& e) {
      out.push_back(CheckRecord::skip(g.name(), check, std::string("budget: ") + e.what()));
    } catch (const std::exception& e) {
      out.push_back(CheckRecord::fail(g.name(), check,
                                      nlohmann::json{{"error", e.what()}}));
    }
  };
  auto primes = prime_factors(g.order());
  for (const auto& check : checks) {
    if (check == "vdovin") continue;  // handled at suite level, not per group
    if (check == "tate" || check == "cor23") {
      if (g.order() > cfg.max_order) {
        out.push_back(CheckRecord::skip(g.name(), check,
                                        "order above per-normal-subgroup ceiling " +
                                            std::to_string(cfg.max_order)));
        continue;
      }
      guarded(check, [&] {
        auto rows = check == "tate" ? tate_check(g, b) : fitting_quotient_check(g, b);
        out.insert(out.end(), rows.begin(), rows.end());
      });
    } else if (check == "thmA") {
      guarded(check, [&] { out.push_back(theorem_a_record(g, b)); });
    } else if (check == "thmB") {
      guarded(check, [&] { out.push_back(theorem_b_record(g, b)); });
    } else if (check == "thmC") {
      if (primes.size() < 2) {
        out.push_back(
            CheckRecord::skip(g.name(), check, "needs two distinct prime divisors"));
        continue;
      }
      for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j)
          guarded(check, [&] { out.push_back(theorem_c_check(g, primes[i], primes[j], b)); });
    } else if (check == "comporb") {
      for (std::size_t i = 0; i < primes.size(); ++i) {
        guarded(check, [&] {
          auto rows = comporb_check(g, {primes[i]}, b);
          out.insert(out.end(), rows.begin(), rows.end());
        });
        for (std::size_t j = i + 1; j < primes.size(); ++j)
          guarded(check, [&] {
            auto rows = comporb_check(g, {primes[i], primes[j]}, b);
            out.insert(out.end(), rows.begin(), rows.end());
          });
      }
    } else if (check == "wolf") {
      if (g.name() == "gl2_3")
        guarded(check, [&] { out.push_back(wolf_check(g, 2, 1, 3, b)); });
      else
        out.push_back(CheckRecord::skip(g.name(), check,
                                        "no linear fixture parameters for this group"));
    } else if (check == "bgp") {
      guarded(check, [&] {
        auto rows = simple_group_checks(g, b);
        out.insert(out.end(), rows.begin(), rows.end());
      });
    } else if (check == "gl") {
      guarded(check, [&] { out.push_back(gl_check(g, b)); });
    } else {
      throw ValidationError("unknown check '" + check + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<CheckRecord> run_suite(const SuiteConfig& cfg) {
  if (cfg.groups.empty()) throw ValidationError("suite config: at least one group is required");
  if (cfg.checks.empty()) throw ValidationError("suite config: at least one check is required");
  auto registry = check_registry();
  for (const auto& c : cfg.checks)
    if (std::find(registry.begin(), registry.end(), c) == registry.end())
      throw ValidationError("suite config: unknown check '" + c + "'");
  if (cfg.format != "json" && cfg.format != "text")
    throw ValidationError("suite config: format must be 'json' or 'text'");

  // Construct all groups up front (configuration errors surface here).
  std::vector<Group> groups;
  groups.reserve(cfg.groups.size());
  for (const auto& gs : cfg.groups)
    groups.push_back(gs.from_file ? load_group(gs.spec) : builtin_group(gs.spec));

  // Deterministic group order: by (order, name), independent of the
  // parallel completion order below.
  std::vector<std::size_t> order(groups.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (groups[a].order() != groups[b].order()) return groups[a].order() < groups[b].order();
    return groups[a].name() < groups[b].name();
  });

  std::vector<std::vector<CheckRecord>> per_group(groups.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(scan::thread_limit())
#endif
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(order.size()); ++k) {
    std::size_t i = order[static_cast<std::size_t>(k)];
    per_group[i] = checks_for_group(groups[i], cfg.groups[i], cfg, cfg.checks);
  }

  std::vector<CheckRecord> records;
  for (std::size_t k : order) {
    auto& rows = per_group[k];
    // Within a group: stable by check name, preserving emission order.
    std::stable_sort(rows.begin(), rows.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.check < b.check; });
    records.insert(records.end(), rows.begin(), rows.end());
  }

  if (std::find(cfg.checks.begin(), cfg.checks.end(), "vdovin") != cfg.checks.end())
    for (unsigned n : cfg.vdovin_ns) records.push_back(vdovin_check(n));
  return records;
}

unsigned count_status(const std::vector<CheckRecord>& records, CheckStatus s) {
  unsigned c = 0;
  for (const auto& r : records)
    if (r.status == s) ++c;
  return c;
}

std::string emit_report(const std::vector<CheckRecord>& records, const std::string& format) {
  if (format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(r.to_json());
    return arr.dump(2) + "\n";
  }
  if (format != "text") throw ValidationError("emit_report: format must be 'json' or 'text'");
  std::size_t wg = 5, wc = 5;
  for (const auto& r : records) {
    wg = std::max(wg, r.group.size());
    wc = std::max(wc, r.check.size());
  }
  std::ostringstream os;
  for (const auto& r : records) {
    os << r.group << std::string(wg - r.group.size() + 2, ' ') << r.check
       << std::string(wc - r.check.size() + 2, ' ') << to_string(r.status);
    if (r.status == CheckStatus::skipped && r.detail.contains("reason"))
      os << "  (" << r.detail["reason"].get<std::string>() << ")";
    os << "\n";
  }
  os << count_status(records, CheckStatus::pass) << " pass / "
     << count_status(records, CheckStatus::fail) << " fail / "
     << count_status(records, CheckStatus::skipped) << " skipped\n";
  return os.str();
}

}  // namespace frattini
