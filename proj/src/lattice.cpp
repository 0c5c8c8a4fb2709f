#include "frattini/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "frattini/subgroup_ops.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif
#include "frattini/scan.hpp"

namespace frattini {

SmallGroupTable small_table(const Group& g, std::uint64_t budget) {
  if (g.order() > budget) throw BudgetError("multiplication table budget exceeded");
  SmallGroupTable t;
  t.degree = g.degree();
  ElementTable et = element_table(g, budget);
  t.elems = std::move(et.elems);
  const std::size_t n = t.elems.size();
  t.mul.resize(n * n);
  t.inv.resize(n);
  t.elem_order.resize(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(scan::thread_limit())
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    for (std::size_t j = 0; j < n; ++j)
      t.mul[static_cast<std::size_t>(i) * n + j] =
          et.index.at(t.elems[static_cast<std::size_t>(i)] * t.elems[j]);
    t.inv[static_cast<std::size_t>(i)] = et.index.at(t.elems[static_cast<std::size_t>(i)].inverse());
    t.elem_order[static_cast<std::size_t>(i)] = t.elems[static_cast<std::size_t>(i)].order();
  }
  return t;
}

ElemSet closure_of(const SmallGroupTable& t, const std::vector<std::uint32_t>& seed) {
  ElemSet s(t.size());
  std::vector<std::uint32_t> members{0};
  s.set(0);
  for (std::uint32_t x : seed)
    if (!s.test(x)) {
      s.set(x);
      members.push_back(x);
    }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::uint32_t gen : seed) {
      std::uint32_t p = t.product(members[i], gen);
      if (!s.test(p)) {
        s.set(p);
        members.push_back(p);
      }
    }
  }
  return s;
}

namespace {

struct SubgroupNode {
  ElemSet set;
  std::vector<std::uint32_t> gens;
};

bool set_less(const ElemSet& a, const ElemSet& b) {
  if (a.count != b.count) return a.count < b.count;
  return a.bits < b.bits;
}

}  // namespace

std::vector<ElemSet> all_subgroups(const SmallGroupTable& t, std::size_t max_subgroups) {
  std::unordered_map<ElemSet, std::uint32_t, ElemSetHash> seen;
  std::vector<SubgroupNode> nodes;
  {
    SubgroupNode triv;
    triv.set = ElemSet(t.size());
    triv.set.set(0);
    seen.emplace(triv.set, 0u);
    nodes.push_back(std::move(triv));
  }

  const std::size_t n = t.size();
  std::size_t wave_begin = 0;
  while (wave_begin < nodes.size()) {
    std::size_t wave_end = nodes.size();
    // One extension wave; closures are independent and run in parallel.
    std::vector<std::vector<SubgroupNode>> produced;
#ifdef _OPENMP
    int nthreads = std::min<int>(scan::thread_limit(), omp_get_max_threads());
#else
    int nthreads = 1;
#endif
    produced.resize(static_cast<std::size_t>(nthreads));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#endif
    for (std::int64_t ni = static_cast<std::int64_t>(wave_begin);
         ni < static_cast<std::int64_t>(wave_end); ++ni) {
#ifdef _OPENMP
      auto& local = produced[static_cast<std::size_t>(omp_get_thread_num())];
#else
      auto& local = produced[0];
#endif
      const SubgroupNode& node = nodes[static_cast<std::size_t>(ni)];
      for (std::uint32_t e = 1; e < n; ++e) {
        if (node.set.test(e)) continue;
        SubgroupNode next;
        next.gens = node.gens;
        next.gens.push_back(e);
        next.set = closure_of(t, next.gens);
        local.push_back(std::move(next));
      }
    }
    for (auto& bucket : produced)
      for (auto& cand : bucket) {
        if (seen.contains(cand.set)) continue;
        if (nodes.size() >= max_subgroups)
          throw BudgetError("subgroup lattice budget exceeded");
        seen.emplace(cand.set, static_cast<std::uint32_t>(nodes.size()));
        nodes.push_back(std::move(cand));
      }
    wave_begin = wave_end;
  }

  std::vector<ElemSet> out;
  out.reserve(nodes.size());
  for (auto& nd : nodes) out.push_back(std::move(nd.set));
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

std::vector<ElemSet> maximal_subgroups(const SmallGroupTable& t,
                                       const std::vector<ElemSet>& lattice) {
  const std::uint32_t full = static_cast<std::uint32_t>(t.size());
  std::vector<ElemSet> out;
  for (const ElemSet& s : lattice) {
    if (s.count == full) continue;
    bool maximal = true;
    for (const ElemSet& u : lattice) {
      if (u.count <= s.count || u.count == full) continue;
      if (u.count % s.count == 0 && s.subset_of(u)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

bool nilpotent_in_table(const SmallGroupTable& t, const ElemSet& h) {
  // Nilpotent iff, for each prime, the p-elements fill exactly one Sylow
  // subgroup, i.e. their number equals the p-part of |H|.
  std::uint64_t order = h.count;
  std::vector<std::uint64_t> primes;
  std::uint64_t m = order;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);
  for (std::uint64_t p : primes) {
    std::uint64_t ppart = 1;
    std::uint64_t o = order;
    while (o % p == 0) {
      ppart *= p;
      o /= p;
    }
    std::uint64_t count = 0;
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      if (!h.test(i)) continue;
      std::uint64_t eo = t.elem_order[i];
      while (eo % p == 0) eo /= p;
      if (eo == 1) ++count;
    }
    if (count != ppart) return false;
  }
  return true;
}

Group group_from_set(const Group& parent, const SmallGroupTable& t, const ElemSet& s) {
  std::vector<Perm> members;
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (s.test(i)) members.push_back(t.elems[i]);
  return span_of(parent.degree(), members);
}

}  // namespace frattini
