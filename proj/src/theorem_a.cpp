#include "frattini/theorem_a.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "frattini/bounds.hpp"
#include "frattini/lattice.hpp"
#include "frattini/numeric.hpp"
#include "frattini/quotient.hpp"
#include "frattini/subgroup_ops.hpp"

namespace frattini {

namespace {

std::vector<Perm> sorted_elements(const Group& g, std::uint64_t budget) {
  auto e = g.elements(budget);
  std::sort(e.begin(), e.end());
  return e;
}

// Minimal non-trivial characteristic subgroup: characteristic and
// containing no smaller non-trivial characteristic subgroup.
Group minimal_characteristic(const Group& g, const AutSet& auts, const Budgets& b) {
  auto ns = normal_subgroups(g, b.normal);
  std::vector<const Group*> chars;
  for (const auto& n : ns.all) {
    if (n.is_trivial() || n.order() == g.order()) continue;
    auto c = is_characteristic(g, n, auts);
    if (c && *c) chars.push_back(&n);
  }
  if (chars.empty()) {
    // g itself is the only non-trivial characteristic subgroup.
    return g;
  }
  std::vector<const Group*> minimal;
  for (const Group* n : chars) {
    bool min = true;
    for (const Group* m : chars)
      if (m != n && m->order() < n->order() && subgroup_le(*m, *n)) {
        min = false;
        break;
      }
    if (min) minimal.push_back(n);
  }
  // Deterministic pick: smallest order, then smallest element set.
  const Group* best = minimal.front();
  auto best_elems = sorted_elements(*best, b.elements);
  for (std::size_t i = 1; i < minimal.size(); ++i) {
    const Group* n = minimal[i];
    if (n->order() > best->order()) continue;
    auto e = sorted_elements(*n, b.elements);
    if (n->order() < best->order() || e < best_elems) {
      best = n;
      best_elems = std::move(e);
    }
  }
  return *best;
}

bool is_elementary_abelian(const Group& g, std::uint64_t p, std::uint64_t budget) {
  if (!is_abelian(g)) return false;
  for (const auto& e : g.elements(budget))
    if (e.order() != 1 && e.order() != p) return false;
  return true;
}

}  // namespace

Budgeted<Group> max_char_nonnilpotent_kernel(const Group& g, const AutSet& auts,
                                             const Budgets& b) {
  if (is_nilpotent(g)) throw DomainError("max_char_nonnilpotent_kernel: nilpotent input");
  if (!auts.complete)
    return Budgeted<Group>::skipped("automorphism set incomplete: " + auts.skip_reason);

  auto ns = normal_subgroups(g, b.normal);
  const Group* best = nullptr;
  std::vector<Perm> best_elems;
  for (const auto& n : ns.all) {
    if (n.order() == g.order()) continue;  // quotient would be trivial (nilpotent)
    auto c = is_characteristic(g, n, auts);
    if (!c || !*c) continue;
    Quotient q(g, n);
    if (is_nilpotent(q.group())) continue;
    if (!best || n.order() > best->order()) {
      best = &n;
      best_elems.clear();
    } else if (n.order() == best->order()) {
      if (best_elems.empty()) best_elems = sorted_elements(*best, b.elements);
      auto e = sorted_elements(n, b.elements);
      if (e < best_elems) {
        best = &n;
        best_elems = std::move(e);
      }
    }
  }
  // The trivial subgroup always qualifies (g itself is non-nilpotent),
  // so a winner exists.
  return Budgeted<Group>::ok(*best);
}

bool TheoremAReport::all_ok() const {
  if (!applicable) return false;
  if (case_tag == "i")
    return s_elem_abelian && phi_s_trivial && h_found && h_nilpotent && o_p_prime_trivial &&
           faithful && bound_ok;
  if (case_tag == "ii") {
    bool orb = true;
    for (const auto& o : orbits)
      orb = orb && o.sizes_equal && o.size_is_p_power && o.x_le_dmax;
    return direct_product_ok && orb && omega_le_dmax_sq && g_mod_r_le && centralizer_trivial;
  }
  return false;
}

nlohmann::json TheoremAReport::to_json() const {
  nlohmann::json j;
  j["kernel_order"] = kernel_order;
  j["quotient_order"] = quotient_order;
  j["case"] = case_tag;
  if (case_tag == "i") {
    j["p"] = p;
    j["s_order"] = s_order;
    j["h_order"] = h_order;
    j["s_elementary_abelian"] = s_elem_abelian;
    j["phi_s_trivial"] = phi_s_trivial;
    j["h_nilpotent"] = h_nilpotent;
    j["o_p_prime_trivial"] = o_p_prime_trivial;
    j["faithful_action"] = faithful;
    j["bound"] = bound_value;
    j["bound_ok"] = bound_ok;
  } else if (case_tag == "ii") {
    j["m_order"] = m_order;
    j["omega"] = omega;
    j["component_order"] = component_order;
    j["direct_product_ok"] = direct_product_ok;
    auto arr = nlohmann::json::array();
    for (const auto& o : orbits)
      arr.push_back({{"p", o.p},
                     {"orbit_count", o.orbit_count},
                     {"orbit_size", o.orbit_size},
                     {"sizes_equal", o.sizes_equal},
                     {"size_is_p_power", o.size_is_p_power},
                     {"x_le_dmax", o.x_le_dmax}});
    j["orbits"] = arr;
    j["omega_le_dmax_sq"] = omega_le_dmax_sq;
    j["quotient_by_component_normalizers"] = g_mod_r;
    j["g_mod_r_le_2_pow_omega"] = g_mod_r_le;
    j["centralizer_of_m_trivial"] = centralizer_trivial;
  }
  return j;
}

TheoremAReport theorem_a_classify(const Group& g, const Budgets& b) {
  TheoremAReport rep;
  if (is_nilpotent(g)) {
    rep.skip_reason = "nilpotent group: hypothesis absent";
    return rep;
  }
  auto profile = invariant_profile(g);
  const unsigned d_max = profile.d_max;

  auto auts = automorphisms(g, b.aut);
  if (!auts.complete) {
    rep.skip_reason = "automorphism set incomplete: " + auts.skip_reason;
    return rep;
  }
  auto kernel = max_char_nonnilpotent_kernel(g, auts, b);
  if (!kernel.has_value()) {
    rep.skip_reason = kernel.skip_reason;
    return rep;
  }
  rep.kernel_order = kernel->order();

  Quotient qt(g, *kernel);
  const Group& bar = qt.group();
  rep.quotient_order = bar.order();

  AutSet bar_auts = qt.identity_projection() ? auts : automorphisms(bar, b.aut);
  if (!bar_auts.complete) {
    rep.skip_reason = "quotient automorphism set incomplete: " + bar_auts.skip_reason;
    return rep;
  }
  Group m = minimal_characteristic(bar, bar_auts, b);
  rep.m_order = m.order();

  rep.applicable = true;
  if (is_soluble(m)) {
    rep.case_tag = "i";
    rep.p = prime_factors(m.order()).front();
    rep.s_elem_abelian = is_elementary_abelian(m, rep.p, b.elements);
    Group s = sylow_subgroup(bar, rep.p);
    rep.s_order = s.order();
    rep.phi_s_trivial = pgroup_frattini(s, rep.p).is_trivial();
    // The p-complement: scan the full lattice for a subgroup of
    // complementary coprime order.
    const std::uint64_t h_order = bar.order() / s.order();
    rep.h_order = h_order;
    auto table = small_table(bar, b.lattice.max_order);
    auto lattice = all_subgroups(table, b.lattice.max_subgroups);
    for (const auto& hs : lattice) {
      if (hs.count != h_order) continue;
      Group h = group_from_set(bar, table, hs);
      if (h.order() % rep.p == 0) continue;
      rep.h_found = true;
      rep.h_nilpotent = is_nilpotent(h);
      // Faithful action: no non-trivial element of H centralizes S.
      bool faithful = true;
      for (const auto& x : h.elements(b.elements)) {
        if (x.is_identity()) continue;
        bool central = true;
        for (const auto& sg : s.generators())
          if (x * sg != sg * x) {
            central = false;
            break;
          }
        if (central) {
          faithful = false;
          break;
        }
      }
      rep.faithful = faithful;
      break;
    }
    std::set<std::uint64_t> p_prime;
    for (auto q : prime_factors(bar.order()))
      if (q != rep.p) p_prime.insert(q);
    rep.o_p_prime_trivial =
        p_prime.empty() || largest_normal_pi(bar, p_prime, b.normal).is_trivial();
    // |bar| <= p^(c*d_max)/2, with slack on the bound side.
    SatLog bound =
        SatLog::from_log2(BoundConstants::c_wolf() * d_max * std::log2(static_cast<double>(rep.p)))
            .divided_by_integer(2);
    rep.bound_value = bound.value();
    rep.bound_ok = SatLog::le(SatLog::from_integer(bar.order()), bound, 1e-12);
    return rep;
  }

  rep.case_tag = "ii";
  auto comps = simple_subnormal_list(m, b.normal);
  if (!comps.has_value()) {
    rep.applicable = false;
    rep.skip_reason = "component search over budget: " + comps.skip_reason;
    return rep;
  }
  const auto& qs = *comps;
  rep.omega = static_cast<unsigned>(qs.size());
  rep.component_order = qs.empty() ? 0 : qs.front().order();
  std::uint64_t prod = 1;
  bool same_order = true;
  for (const auto& q : qs) {
    prod *= q.order();
    same_order = same_order && q.order() == rep.component_order;
  }
  rep.direct_product_ok = same_order && prod == m.order();

  // Identify components by sorted element sets for the conjugation action.
  std::vector<std::vector<Perm>> comp_elems;
  comp_elems.reserve(qs.size());
  for (const auto& q : qs) comp_elems.push_back(sorted_elements(q, b.elements));
  auto component_index = [&](const std::vector<Perm>& elems) -> std::size_t {
    for (std::size_t i = 0; i < comp_elems.size(); ++i)
      if (comp_elems[i] == elems) return i;
    return comp_elems.size();
  };

  for (auto p : prime_factors(rep.component_order)) {
    Group sp = sylow_subgroup(bar, p);
    // Orbit partition of the components under conjugation by S_p.
    std::vector<std::size_t> orbit_id(qs.size(), qs.size());
    std::size_t next_orbit = 0;
    std::vector<std::uint64_t> orbit_sizes;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (orbit_id[i] != qs.size()) continue;
      std::vector<std::size_t> frontier{i};
      orbit_id[i] = next_orbit;
      std::uint64_t size = 1;
      while (!frontier.empty()) {
        std::size_t cur = frontier.back();
        frontier.pop_back();
        for (const auto& x : sp.generators()) {
          std::vector<Perm> image;
          image.reserve(comp_elems[cur].size());
          for (const auto& e : comp_elems[cur]) image.push_back(e.conjugated_by(x));
          std::sort(image.begin(), image.end());
          std::size_t j = component_index(image);
          if (j < qs.size() && orbit_id[j] == qs.size()) {
            orbit_id[j] = next_orbit;
            ++size;
            frontier.push_back(j);
          }
        }
      }
      orbit_sizes.push_back(size);
      ++next_orbit;
    }
    OrbitDatum d;
    d.p = p;
    d.orbit_count = static_cast<unsigned>(next_orbit);
    d.orbit_size = orbit_sizes.empty() ? 0 : orbit_sizes.front();
    d.sizes_equal = std::all_of(orbit_sizes.begin(), orbit_sizes.end(),
                                [&](std::uint64_t s) { return s == d.orbit_size; });
    d.size_is_p_power = d.orbit_size != 0 && p_part(d.orbit_size, p) == d.orbit_size;
    d.x_le_dmax = d.orbit_count <= d_max;
    rep.orbits.push_back(d);
  }

  rep.omega_le_dmax_sq = rep.omega <= d_max * d_max;

  // R = intersection of the component normalizers.
  Group r = bar;
  for (const auto& q : qs) {
    Group nq = normalizer(bar, q, b.elements);
    r = meet(r, nq, b.elements);
  }
  rep.g_mod_r = bar.order() / r.order();
  rep.g_mod_r_le = rep.omega < 64 && rep.g_mod_r <= (std::uint64_t{1} << rep.omega);

  rep.centralizer_trivial = centralizer(bar, m, b.elements).is_trivial();
  return rep;
}

CheckRecord theorem_a_record(const Group& g, const Budgets& b) {
  TheoremAReport rep = theorem_a_classify(g, b);
  if (!rep.applicable) return CheckRecord::skip(g.name(), "thmA", rep.skip_reason);
  auto detail = rep.to_json();
  if (rep.all_ok()) return CheckRecord::pass(g.name(), "thmA", detail);
  return CheckRecord::fail(g.name(), "thmA", detail);
}

}  // namespace frattini
