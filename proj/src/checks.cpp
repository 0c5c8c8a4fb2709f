#include "frattini/checks.hpp"

#include <algorithm>
#include <cmath>

#include "frattini/automorphism.hpp"
#include "frattini/bounds.hpp"
#include "frattini/builtins.hpp"
#include "frattini/lattice.hpp"
#include "frattini/numeric.hpp"
#include "frattini/quotient.hpp"
#include "frattini/scan.hpp"
#include "frattini/subgroup_ops.hpp"

namespace frattini {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    default:
      return "skipped";
  }
}

nlohmann::json CheckRecord::to_json() const {
  return {{"group", group}, {"check", check}, {"status", to_string(status)}, {"detail", detail}};
}

namespace {

std::string pi_label(const std::set<std::uint64_t>& pi) {
  std::string s = "{";
  for (auto p : pi) {
    if (s.size() > 1) s += ",";
    s += std::to_string(p);
  }
  return s + "}";
}

}  // namespace

std::vector<CheckRecord> tate_check(const Group& g, const Budgets& b) {
  std::vector<CheckRecord> out;
  auto profile = invariant_profile(g);
  auto ns = normal_subgroups(g, b.normal);
  for (std::size_t i = 0; i < ns.all.size(); ++i) {
    const Group& n = ns.all[i];
    bool all_hyp = true;
    for (const auto& [p, sp] : profile.sylow) {
      nlohmann::json detail{{"normal_order", n.order()}, {"normal_rank", i}, {"p", p}};
      Group inter = meet(n, sp, b.elements);
      bool hyp = subgroup_le(inter, profile.sylow_frattini.at(p));
      if (!hyp) {
        all_hyp = false;
        detail["intersection_order"] = inter.order();
        out.push_back(
            CheckRecord::skip(g.name(), "tate", "hypothesis fails at p (negative control)",
                              std::move(detail)));
        continue;
      }
      Group opn = o_upper_pi(n, {p});
      detail["o_upper_p_order"] = opn.order();
      bool coprime = opn.order() % p != 0;
      out.push_back(coprime ? CheckRecord::pass(g.name(), "tate", std::move(detail))
                            : CheckRecord::fail(g.name(), "tate", std::move(detail)));
    }
    if (all_hyp) {
      nlohmann::json detail{
          {"normal_order", n.order()}, {"normal_rank", i}, {"claim", "nilpotent"}};
      out.push_back(is_nilpotent(n) ? CheckRecord::pass(g.name(), "tate", std::move(detail))
                                    : CheckRecord::fail(g.name(), "tate", std::move(detail)));
    }
  }
  return out;
}

std::vector<CheckRecord> fitting_quotient_check(const Group& g, const Budgets& b) {
  std::vector<CheckRecord> out;
  auto profile = invariant_profile(g);
  auto ns = normal_subgroups(g, b.normal);
  Group fg = fitting(g);
  for (std::size_t i = 0; i < ns.all.size(); ++i) {
    const Group& n = ns.all[i];
    bool all_hyp = true;
    for (const auto& [p, sp] : profile.sylow) {
      Group inter = meet(n, sp, b.elements);
      all_hyp = all_hyp && subgroup_le(inter, profile.sylow_frattini.at(p));
    }
    nlohmann::json detail{{"normal_order", n.order()}, {"normal_rank", i}};
    if (!all_hyp) {
      out.push_back(CheckRecord::skip(g.name(), "cor23",
                                      "hypothesis fails (negative control)", std::move(detail)));
      continue;
    }
    Quotient q(g, n);
    Group lhs = fitting(q.group());
    Group rhs = q.project_subgroup(fg);
    detail["fitting_of_quotient"] = lhs.order();
    detail["projected_fitting"] = rhs.order();
    bool equal = same_group(lhs, rhs);
    out.push_back(equal ? CheckRecord::pass(g.name(), "cor23", std::move(detail))
                        : CheckRecord::fail(g.name(), "cor23", std::move(detail)));
  }
  return out;
}

namespace {

// Orbit sizes of a Sylow subgroup acting by conjugation on a list of
// subgroups (identified by their element sets).
std::vector<std::uint64_t> conjugation_orbit_sizes(const Group& sp,
                                                   const std::vector<Group>& comps,
                                                   std::uint64_t budget) {
  std::vector<std::vector<Perm>> elems;
  elems.reserve(comps.size());
  for (const auto& c : comps) {
    auto e = c.elements(budget);
    std::sort(e.begin(), e.end());
    elems.push_back(std::move(e));
  }
  auto find = [&](const std::vector<Perm>& e) -> std::size_t {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == e) return i;
    return elems.size();
  };
  std::vector<std::size_t> orbit_id(comps.size(), comps.size());
  std::vector<std::uint64_t> sizes;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (orbit_id[i] != comps.size()) continue;
    std::vector<std::size_t> frontier{i};
    orbit_id[i] = sizes.size();
    std::uint64_t size = 1;
    while (!frontier.empty()) {
      std::size_t cur = frontier.back();
      frontier.pop_back();
      for (const auto& x : sp.generators()) {
        std::vector<Perm> image;
        image.reserve(elems[cur].size());
        for (const auto& e : elems[cur]) image.push_back(e.conjugated_by(x));
        std::sort(image.begin(), image.end());
        std::size_t j = find(image);
        if (j < comps.size() && orbit_id[j] == comps.size()) {
          orbit_id[j] = sizes.size();
          ++size;
          frontier.push_back(j);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

}  // namespace

std::vector<CheckRecord> comporb_check(const Group& g, const std::set<std::uint64_t>& pi,
                                       const Budgets& b) {
  std::vector<CheckRecord> out;
  const std::string check = "comporb" + pi_label(pi);
  auto profile = invariant_profile(g);
  auto comps = simple_subnormals(g, pi, b.normal);
  if (!comps.has_value()) {
    out.push_back(CheckRecord::skip(g.name(), check, comps.skip_reason));
    return out;
  }
  for (auto p : pi) {
    if (g.order() % p != 0) continue;
    auto sizes = conjugation_orbit_sizes(profile.sylow.at(p), comps->comp_pi, b.elements);
    nlohmann::json detail{{"p", p},
                          {"orbit_count", sizes.size()},
                          {"orbit_sizes", sizes},
                          {"d_p", profile.d_p.at(p)},
                          {"component_count", comps->comp_pi.size()}};
    bool ok = sizes.size() <= profile.d_p.at(p);
    for (auto s : sizes) ok = ok && p_part(s, p) == s;
    out.push_back(ok ? CheckRecord::pass(g.name(), check, std::move(detail))
                     : CheckRecord::fail(g.name(), check, std::move(detail)));
  }
  return out;
}

CheckRecord theorem_c_check(const Group& g, std::uint64_t p, std::uint64_t q, const Budgets& b) {
  const std::string check = "thmC(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (p == q) throw DomainError("theorem_c_check: primes must be distinct");
  auto profile = invariant_profile(g);
  auto comps = simple_subnormals(g, {p, q}, b.normal);
  if (!comps.has_value()) return CheckRecord::skip(g.name(), check, comps.skip_reason);
  const std::uint64_t x = comps->comp_pi.size();
  unsigned dp = profile.d_p.count(p) ? profile.d_p.at(p) : 0;
  unsigned dq = profile.d_p.count(q) ? profile.d_p.at(q) : 0;
  auto cf = composition_factors(g);
  unsigned pq_factors = 0;
  for (auto f : cf.factor_orders)
    if (f % (p * q) == 0) ++pq_factors;
  nlohmann::json detail{{"x", x},
                        {"s_p_x", digit_sum(x, p)},
                        {"s_q_x", digit_sum(x, q)},
                        {"d_p", dp},
                        {"d_q", dq},
                        {"composition_factors_div_pq", pq_factors}};
  bool ok = digit_sum(x, p) <= dp && digit_sum(x, q) <= dq;
  return ok ? CheckRecord::pass(g.name(), check, std::move(detail))
            : CheckRecord::fail(g.name(), check, std::move(detail));
}

std::vector<CheckRecord> simple_group_checks(const Group& q, const Budgets& b) {
  std::vector<CheckRecord> out;
  auto flags = structure_predicates(q);
  if (!flags.simple || is_abelian(q)) {
    out.push_back(CheckRecord::skip(q.name(), "bgp", "not a non-abelian simple group"));
    return out;
  }
  auto primes = prime_factors(q.order());
  const std::uint64_t k = primes.back();
  {
    SatLog order_bound =
        SatLog::from_log2(static_cast<double>(k) * k * std::log2(static_cast<double>(k)));
    nlohmann::json detail{{"fact", "order_bound"}, {"k", k}, {"order", q.order()}};
    bool ok = std::log2(static_cast<double>(q.order())) < order_bound.log2() ||
              order_bound.is_saturated();
    out.push_back(ok ? CheckRecord::pass(q.name(), "bgp", std::move(detail))
                     : CheckRecord::fail(q.name(), "bgp", std::move(detail)));
  }
  {
    nlohmann::json detail{{"fact", "divisibility"}, {"order", q.order()}};
    bool ok = q.order() % 6 == 0 || q.order() % 10 == 0;
    out.push_back(ok ? CheckRecord::pass(q.name(), "bgp", std::move(detail))
                     : CheckRecord::fail(q.name(), "bgp", std::move(detail)));
  }
  {
    auto auts = automorphisms(q, b.aut);
    nlohmann::json detail{{"fact", "aut_bound"}, {"order", q.order()}};
    if (!auts.complete) {
      out.push_back(CheckRecord::skip(q.name(), "bgp", auts.skip_reason, std::move(detail)));
    } else {
      detail["aut_order"] = auts.count;
      bool ok = auts.count < q.order() * q.order();
      out.push_back(ok ? CheckRecord::pass(q.name(), "bgp", std::move(detail))
                       : CheckRecord::fail(q.name(), "bgp", std::move(detail)));
    }
  }
  return out;
}

namespace {

// Max order over nilpotent subgroups with support in the given primes,
// inside the subgroup spanned by `elems`.  Works down the prime list:
// fix the p-part (a subgroup of one fixed Sylow p-subgroup), then recurse
// into its centralizer for the remaining primes.
std::uint64_t max_nilpotent_rec(std::size_t degree, const std::vector<Perm>& elems,
                                const std::vector<std::uint64_t>& primes, std::size_t pi,
                                std::size_t lattice_cap) {
  if (pi >= primes.size() || elems.size() == 1) return 1;
  const std::uint64_t p = primes[pi];
  Group host = span_of(degree, elems);
  if (host.order() % p != 0)
    return max_nilpotent_rec(degree, elems, primes, pi + 1, lattice_cap);

  // Largest possible contribution of the remaining primes (for pruning).
  std::uint64_t rest_cap = 1;
  for (std::size_t j = pi + 1; j < primes.size(); ++j) rest_cap *= p_part(host.order(), primes[j]);

  Group sp = sylow_subgroup(host, p);
  auto table = small_table(sp, sp.order());
  auto subs = all_subgroups(table, lattice_cap);
  std::uint64_t best = max_nilpotent_rec(degree, elems, primes, pi + 1, lattice_cap);
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    const auto& ps = *it;
    if (static_cast<std::uint64_t>(ps.count) * rest_cap <= best) continue;
    Group pg = group_from_set(sp, table, ps);
    auto idx = scan::filter_indices(elems.size(), [&](std::size_t i) {
      for (const auto& gen : pg.generators())
        if (elems[i] * gen != gen * elems[i]) return false;
      return true;
    });
    std::vector<Perm> cent;
    cent.reserve(idx.size());
    for (auto i : idx) cent.push_back(elems[i]);
    std::uint64_t odd = max_nilpotent_rec(degree, cent, primes, pi + 1, lattice_cap);
    best = std::max(best, ps.count * odd);
  }
  return best;
}

std::uint64_t sym_sylow2_order(unsigned n) {
  std::uint64_t e = 0;
  for (unsigned m = 2; m <= n; m *= 2) e += n / m;
  return std::uint64_t{1} << e;
}

}  // namespace

std::uint64_t max_nilpotent_order(const Group& g, std::size_t lattice_cap) {
  auto primes = prime_factors(g.order());
  auto elems = g.elements(1'000'000);
  return max_nilpotent_rec(g.degree(), elems, primes, 0, lattice_cap);
}

CheckRecord vdovin_check(unsigned n) {
  const std::string name = "sym(" + std::to_string(n) + ")";
  if (n > 8) return CheckRecord::skip(name, "vdovin", "oracle budget: n > 8");
  Group g = builtin_sym(n);
  std::uint64_t max_order;
  std::string method;
  if (n <= 6) {
    // Exhaustive: the full subgroup lattice, filtered for nilpotency.
    auto table = small_table(g, 1000);
    auto subs = all_subgroups(table, 50000);
    max_order = 1;
    for (const auto& s : subs)
      if (nilpotent_in_table(table, s)) max_order = std::max<std::uint64_t>(max_order, s.count);
    method = "exhaustive lattice";
  } else {
    max_order = max_nilpotent_order(g);
    method = "sylow-sublattice descent";
  }
  // Structural description: Sylow-2 of Sym(n), except n = 2(2k+1)+1,
  // where a 3-cycle tops up the Sylow-2 of Sym(n-3).
  std::uint64_t expected;
  if (n >= 3 && n % 2 == 1 && ((n - 1) / 2) % 2 == 1)
    expected = 3 * sym_sylow2_order(n - 3);
  else
    expected = sym_sylow2_order(n);
  nlohmann::json detail{{"n", n},
                        {"max_nilpotent_order", max_order},
                        {"expected", expected},
                        {"bound", n < 64 ? (std::uint64_t{1} << n) : 0},
                        {"method", method}};
  bool ok = max_order == expected && max_order <= (std::uint64_t{1} << n);
  return ok ? CheckRecord::pass(name, "vdovin", std::move(detail))
            : CheckRecord::fail(name, "vdovin", std::move(detail));
}

CheckRecord gl_check(const Group& g, const Budgets& b) {
  auto profile = invariant_profile(g);
  auto d = min_generators(g, b.mingen);
  if (!d.has_value()) return CheckRecord::skip(g.name(), "gl", d.skip_reason);
  nlohmann::json detail{{"d", *d}, {"d_max", profile.d_max}};
  bool ok = *d <= profile.d_max + 1;
  return ok ? CheckRecord::pass(g.name(), "gl", std::move(detail))
            : CheckRecord::fail(g.name(), "gl", std::move(detail));
}

CheckRecord wolf_check(const Group& host, unsigned n, unsigned e, std::uint64_t p,
                       const Budgets& b) {
  auto table = small_table(host, b.lattice.max_order);
  auto subs = all_subgroups(table, b.lattice.max_subgroups);
  std::uint64_t max_order = 1;
  for (const auto& s : subs) {
    if (s.count % p == 0) continue;
    if (nilpotent_in_table(table, s)) max_order = std::max<std::uint64_t>(max_order, s.count);
  }
  SatLog bound = wolf_bound(n, e, p);
  nlohmann::json detail{{"n", n},
                        {"e", e},
                        {"p", p},
                        {"max_nilpotent_coprime_order", max_order},
                        {"bound_log2", bound.log2()}};
  bool ok = SatLog::le(SatLog::from_integer(max_order), bound, 1e-9);
  return ok ? CheckRecord::pass(host.name(), "wolf", std::move(detail))
            : CheckRecord::fail(host.name(), "wolf", std::move(detail));
}

}  // namespace frattini
