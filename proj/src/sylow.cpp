#include "frattini/sylow.hpp"

#include <algorithm>

#include "frattini/lattice.hpp"
#include "frattini/scan.hpp"
#include "frattini/subgroup_ops.hpp"
#include "frattini/quotient.hpp"

namespace frattini {

Group sylow_subgroup(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("sylow_subgroup: p must be prime");
  const std::uint64_t target = p_part(g.order(), p);
  Group part = Group::trivial(g.degree());
  if (target == 1) return part;

  std::vector<Perm> elems = g.elements(g.order());
  while (part.order() < target) {
    // p-elements of the normalizer that fall outside the current group.
    bool grown = false;
    for (const Perm& x : elems) {
      bool normalizes = true;
      for (const Perm& h : part.generators())
        if (!part.contains(h.conjugated_by(x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      Perm z = perm_power(x, x.order() / p_part(x.order(), p));  // p-part of x
      if (z.is_identity() || part.contains(z)) continue;
      std::vector<Perm> gens = part.generators();
      gens.push_back(z);
      part = Group(g.degree(), std::move(gens));
      grown = true;
      break;
    }
    if (!grown) throw DomainError("sylow_subgroup: normalizer ascent stalled");  // unreachable
  }
  return part;
}

Group pgroup_frattini(const Group& s, std::uint64_t p) {
  if (p_part(s.order(), p) != s.order())
    throw DomainError("pgroup_frattini: input is not a p-group");
  return join(verbal_subgroup(s, VerbalKind::derived),
              verbal_subgroup(s, VerbalKind::p_power, p));
}

InvariantProfile invariant_profile(const Group& g) {
  InvariantProfile prof;
  std::vector<std::uint64_t> primes = prime_factors(g.order());
  for (std::uint64_t p : primes) {
    Group sp = sylow_subgroup(g, p);
    Group phi = pgroup_frattini(sp, p);
    unsigned dp = exact_log(sp.order() / phi.order(), p);
    prof.d_p[p] = dp;
    prof.d_sigma += dp;
    prof.d_max = std::max(prof.d_max, dp);
    prof.sylow.emplace(p, std::move(sp));
    prof.sylow_frattini.emplace(p, std::move(phi));
  }
  prof.p_max = primes.empty() ? 2 : primes.back();
  return prof;
}

namespace {

bool tuple_search(const Group& g, const ConjugacyClasses& cc, const Group& span,
                  std::vector<Perm>& chosen, unsigned slots) {
  if (span.order() == g.order()) return true;
  if (slots == 0) return false;
  if (chosen.empty()) {
    // First slot: class representatives suffice (tuples conjugate together).
    for (std::uint32_t cls = 0; cls < cc.rep.size(); ++cls) {
      const Perm& e = cc.table.elems[cc.rep[cls]];
      if (e.is_identity()) continue;
      chosen.push_back(e);
      Group next(g.degree(), chosen);
      if (tuple_search(g, cc, next, chosen, slots - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
  for (const Perm& e : cc.table.elems) {
    if (span.contains(e)) continue;
    chosen.push_back(e);
    Group next(g.degree(), chosen);
    if (tuple_search(g, cc, next, chosen, slots - 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Budgeted<unsigned> min_generators(const Group& g, std::uint64_t budget) {
  if (g.order() > budget) return Budgeted<unsigned>::skipped("min_generators budget exceeded");
  if (g.order() == 1) return Budgeted<unsigned>::ok(0);

  unsigned lower = 1;
  std::vector<std::uint64_t> primes = prime_factors(g.order());
  if (primes.size() == 1) {
    // Burnside basis: the Frattini quotient rank is exact for p-groups,
    // but the search below still produces a witness tuple of that size.
    std::uint64_t p = primes[0];
    lower = exact_log(g.order() / pgroup_frattini(g, p).order(), p);
  }

  ConjugacyClasses cc = conjugacy_classes(g, g.order());
  for (unsigned k = lower;; ++k) {
    std::vector<Perm> chosen;
    if (tuple_search(g, cc, Group::trivial(g.degree()), chosen, k))
      return Budgeted<unsigned>::ok(k);
  }
}

bool is_abelian(const Group& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

bool is_nilpotent(const Group& g) {
  for (std::uint64_t p : prime_factors(g.order()))
    if (!is_normal_in(sylow_subgroup(g, p), g)) return false;
  return true;
}

bool is_soluble(const Group& g) {
  Group d = g;
  for (;;) {
    Group next = verbal_subgroup(d, VerbalKind::derived);
    if (next.order() == 1) return true;
    if (next.order() == d.order()) return false;
    d = next;
  }
}

StructureFlags structure_predicates(const Group& g) {
  StructureFlags f;
  f.nilpotent = is_nilpotent(g);
  f.soluble = is_soluble(g);
  f.simple = g.order() > 1 && normal_subgroups(g, g.order()).all.size() == 2;
  return f;
}

Group o_upper_pi(const Group& g, const std::set<std::uint64_t>& pi) {
  std::vector<Perm> seed;
  for (std::uint64_t q : prime_factors(g.order())) {
    if (pi.contains(q)) continue;
    Group sq = sylow_subgroup(g, q);
    for (const Perm& x : sq.generators()) seed.push_back(x);
  }
  Group o = normal_closure(g, seed);
  // The quotient must be a pi-group.
  for (std::uint64_t q : prime_factors(g.order() / o.order()))
    if (!pi.contains(q)) throw DomainError("o_upper_pi: quotient is not a pi-group");
  return o;
}

Group o_p_core(const Group& g, std::uint64_t p) {
  Group core = sylow_subgroup(g, p);
  while (!is_normal_in(core, g)) {
    for (const Perm& x : g.generators())
      core = meet(core, conjugate_subgroup(core, x), core.order());
  }
  return core;
}

Group largest_normal_pi(const Group& g, const std::set<std::uint64_t>& pi, std::uint64_t budget) {
  NormalSubgroups ns = normal_subgroups(g, budget);
  Group big = Group::trivial(g.degree());
  for (const Group& n : ns.all) {
    bool pi_group = true;
    for (std::uint64_t q : prime_factors(n.order()))
      if (!pi.contains(q)) {
        pi_group = false;
        break;
      }
    if (pi_group && n.order() > big.order()) big = n;
  }
  return big;
}

Group fitting(const Group& g) {
  Group f = Group::trivial(g.degree());
  for (std::uint64_t p : prime_factors(g.order())) f = join(f, o_p_core(g, p));
  if (!is_nilpotent(f) || !is_normal_in(f, g))
    throw DomainError("fitting: verification failed");  // internal consistency check
  return f;
}

Budgeted<Group> frattini(const Group& g, const LatticeBudget& budget) {
  if (g.order() == 1) return Budgeted<Group>::ok(Group::trivial(g.degree()));
  if (is_nilpotent(g)) {
    Group phi = Group::trivial(g.degree());
    for (std::uint64_t p : prime_factors(g.order()))
      phi = join(phi, pgroup_frattini(sylow_subgroup(g, p), p));
    return Budgeted<Group>::ok(std::move(phi));
  }
  if (g.order() > budget.max_order)
    return Budgeted<Group>::skipped("frattini lattice order budget exceeded");
  try {
    SmallGroupTable table = small_table(g, budget.max_order);
    std::vector<ElemSet> lattice = all_subgroups(table, budget.max_subgroups);
    std::vector<ElemSet> maximals = maximal_subgroups(table, lattice);
    ElemSet inter(table.size());
    for (std::uint32_t i = 0; i < table.size(); ++i) inter.set(i);
    for (const ElemSet& m : maximals) {
      ElemSet next(table.size());
      for (std::uint32_t i = 0; i < table.size(); ++i)
        if (inter.test(i) && m.test(i)) next.set(i);
      inter = next;
    }
    return Budgeted<Group>::ok(group_from_set(g, table, inter));
  } catch (const BudgetError& e) {
    return Budgeted<Group>::skipped(e.what());
  }
}

namespace {

// Splits a minimal normal subgroup into its simple factors and appends
// their orders.
void split_minimal_normal(const Group& m, CompositionData& out) {
  if (is_abelian(m)) {
    std::vector<std::uint64_t> primes = prime_factors(m.order());
    if (primes.size() != 1)
      throw DomainError("minimal normal abelian subgroup is not a p-group");
    unsigned k = exact_log(m.order(), primes[0]);
    for (unsigned i = 0; i < k; ++i) out.factor_orders.push_back(primes[0]);
    return;
  }
  NormalSubgroups ns = normal_subgroups(m, m.order());
  const Group* q = nullptr;
  for (std::size_t i = 0; i < ns.all.size(); ++i)
    if (ns.minimal[i]) {
      q = &ns.all[i];
      break;
    }
  if (q == nullptr) throw DomainError("composition: no minimal normal subgroup found");
  // m is a direct product of copies of the simple group q.
  std::uint64_t qo = q->order();
  std::uint64_t rest = m.order();
  unsigned copies = 0;
  while (rest > 1) {
    if (rest % qo != 0)
      throw DomainError("composition: minimal normal subgroup is not a power of a simple order");
    rest /= qo;
    ++copies;
  }
  if (normal_subgroups(*q, qo).all.size() != 2)
    throw DomainError("composition: factor is not simple");
  for (unsigned i = 0; i < copies; ++i) out.factor_orders.push_back(qo);
  out.nonabelian_count += copies;
}

void composition_rec(const Group& g, bool reverse_tiebreak, CompositionData& out) {
  if (g.order() == 1) return;
  NormalSubgroups ns = normal_subgroups(g, g.order());
  const Group* m = nullptr;
  if (reverse_tiebreak) {
    for (std::size_t i = ns.all.size(); i-- > 0;)
      if (ns.minimal[i]) {
        m = &ns.all[i];
        break;
      }
  } else {
    for (std::size_t i = 0; i < ns.all.size(); ++i)
      if (ns.minimal[i]) {
        m = &ns.all[i];
        break;
      }
  }
  if (m == nullptr) throw DomainError("composition: non-trivial group without minimal normal subgroup");
  split_minimal_normal(*m, out);
  Quotient q(g, *m);
  composition_rec(q.group(), reverse_tiebreak, out);
}

}  // namespace

CompositionData composition_factors(const Group& g, bool reverse_tiebreak) {
  CompositionData out;
  composition_rec(g, reverse_tiebreak, out);
  return out;
}

namespace {

void collect_simple_subnormals(const Group& g, std::vector<Group>& found,
                               std::vector<Group>& visited) {
  for (const Group& v : visited)
    if (same_group(v, g)) return;
  visited.push_back(g);

  NormalSubgroups ns = normal_subgroups(g, g.order());
  if (ns.all.size() == 2 && !is_abelian(g)) {
    bool known = false;
    for (const Group& f : found)
      if (same_group(f, g)) known = true;
    if (!known) found.push_back(g);
    return;  // simple groups have no proper non-trivial normal subgroups
  }
  for (const Group& n : ns.all) {
    if (n.is_trivial() || n.order() == g.order()) continue;
    collect_simple_subnormals(n, found, visited);
  }
}

}  // namespace

Budgeted<std::vector<Group>> simple_subnormal_list(const Group& g, std::uint64_t budget) {
  if (g.order() > budget)
    return Budgeted<std::vector<Group>>::skipped("simple subnormal budget exceeded");
  std::vector<Group> found;
  std::vector<Group> visited;
  collect_simple_subnormals(g, found, visited);
  std::stable_sort(found.begin(), found.end(),
                   [](const Group& a, const Group& b) { return a.order() < b.order(); });
  return Budgeted<std::vector<Group>>::ok(std::move(found));
}

Budgeted<SimpleSubnormals> simple_subnormals(const Group& g, const std::set<std::uint64_t>& pi,
                                             std::uint64_t budget) {
  auto comp = simple_subnormal_list(g, budget);
  if (!comp) return Budgeted<SimpleSubnormals>::skipped(comp.skip_reason);
  SimpleSubnormals out{.comp_pi = {}, .e_pi = Group::trivial(g.degree())};
  for (const Group& q : *comp) {
    bool all_divide = true;
    for (std::uint64_t p : pi)
      if (q.order() % p != 0) {
        all_divide = false;
        break;
      }
    if (all_divide) out.comp_pi.push_back(q);
  }
  std::uint64_t expected = 1;
  for (const Group& q : out.comp_pi) {
    out.e_pi = join(out.e_pi, q);
    expected *= q.order();
  }
  if (out.e_pi.order() != expected)
    throw DomainError("simple_subnormals: components do not form a direct product");
  for (std::size_t i = 0; i < out.comp_pi.size(); ++i)
    for (std::size_t j = i + 1; j < out.comp_pi.size(); ++j)
      if (meet(out.comp_pi[i], out.comp_pi[j], budget).order() != 1)
        throw DomainError("simple_subnormals: components intersect non-trivially");
  return Budgeted<SimpleSubnormals>::ok(std::move(out));
}

}  // namespace frattini
