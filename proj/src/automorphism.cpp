#include "frattini/automorphism.hpp"

#include <algorithm>
#include <cstddef>

#include "frattini/subgroup_ops.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif
#include "frattini/scan.hpp"

namespace frattini {

namespace {

// Smallest generating tuple we can find cheaply: one element for cyclic
// groups, a class-representative pair otherwise, greedy fallback.
std::vector<Perm> small_generating_tuple(const Group& g, const ConjugacyClasses& cc) {
  if (g.order() == 1) return {};
  const auto& elems = cc.table.elems;
  for (const Perm& e : elems)
    if (e.order() == g.order()) return {e};
  for (std::uint32_t cls = 0; cls < cc.rep.size(); ++cls) {
    const Perm& a = elems[cc.rep[cls]];
    if (a.is_identity()) continue;
    for (const Perm& b : elems) {
      if (b.is_identity()) continue;
      StabChain chain({a, b}, g.degree());
      if (chain.order() == g.order()) return {a, b};
    }
  }
  // d(G) >= 3: greedy closure over the element table.
  std::vector<Perm> tuple;
  Group span = Group::trivial(g.degree());
  for (const Perm& e : elems) {
    if (!span.contains(e)) {
      tuple.push_back(e);
      std::vector<Perm> gens = tuple;
      span = Group(g.degree(), std::move(gens));
      if (span.order() == g.order()) break;
    }
  }
  return tuple;
}

struct SearchContext {
  const Group* g;
  const ConjugacyClasses* cc;
  const ElementTable* words;                       // BFS tree over the tuple
  std::vector<Perm> tuple;
  std::vector<std::vector<std::uint32_t>> cands;   // per position, cc-table indices
  std::vector<std::vector<std::uint64_t>> pair_orders;  // ord(a_j * a_i) for j < i
};

// Verifies that mapping the tuple to `b` extends to an automorphism:
// the BFS-tree map must be multiplicative everywhere and the images must
// generate the whole group.
bool full_check(const SearchContext& ctx, const std::vector<Perm>& b) {
  const ElementTable& w = *ctx.words;
  const std::size_t n = w.elems.size();
  std::vector<Perm> phi(n);
  phi[0] = Perm(ctx.g->degree());
  for (std::size_t i = 1; i < n; ++i)
    phi[i] = phi[static_cast<std::size_t>(w.parent[i])] * b[w.via_gen[i]];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ctx.tuple.size(); ++j) {
      std::uint32_t m = w.find(w.elems[i] * ctx.tuple[j]);
      if (!(phi[m] == phi[i] * b[j])) return false;
    }
  }
  StabChain image(b, ctx.g->degree());
  return image.order() == ctx.g->order();
}

void search(const SearchContext& ctx, std::vector<Perm>& b, std::size_t pos,
            std::vector<std::vector<Perm>>& out) {
  if (pos == ctx.tuple.size()) {
    if (full_check(ctx, b)) out.push_back(b);
    return;
  }
  for (std::uint32_t idx : ctx.cands[pos]) {
    const Perm& cand = ctx.cc->table.elems[idx];
    bool ok = true;
    for (std::size_t j = 0; j < pos && ok; ++j)
      ok = (b[j] * cand).order() == ctx.pair_orders[pos][j];
    if (!ok) continue;
    b[pos] = cand;
    search(ctx, b, pos + 1, out);
  }
}

}  // namespace

AutSet automorphisms(const Group& g, std::uint64_t budget, bool parallel) {
  AutSet out;
  if (g.order() > budget) {
    out.skip_reason = "aut budget exceeded";
    return out;
  }

  ConjugacyClasses cc = conjugacy_classes(g, g.order());
  SearchContext ctx;
  ctx.g = &g;
  ctx.cc = &cc;
  ctx.tuple = small_generating_tuple(g, cc);

  if (ctx.tuple.empty()) {  // trivial group
    out.complete = true;
    out.count = 1;
    out.images.push_back({});
    out.words = std::make_shared<ElementTable>(
        element_table(g.degree(), std::vector<Perm>{}, 1));
    return out;
  }

  ElementTable words = element_table(g.degree(), ctx.tuple, g.order());
  ctx.words = &words;

  // Candidate images share the (order, class size) fingerprint.
  std::vector<std::uint64_t> elem_order(cc.table.elems.size());
  for (std::size_t i = 0; i < cc.table.elems.size(); ++i)
    elem_order[i] = cc.table.elems[i].order();
  ctx.cands.resize(ctx.tuple.size());
  for (std::size_t p = 0; p < ctx.tuple.size(); ++p) {
    std::uint32_t a = cc.table.find(ctx.tuple[p]);
    for (std::uint32_t i = 0; i < cc.table.elems.size(); ++i)
      if (elem_order[i] == elem_order[a] && cc.size[cc.class_of[i]] == cc.size[cc.class_of[a]])
        ctx.cands[p].push_back(i);
  }
  // Assign the most constrained position first.
  {
    std::vector<std::size_t> perm_idx(ctx.tuple.size());
    for (std::size_t i = 0; i < perm_idx.size(); ++i) perm_idx[i] = i;
    std::stable_sort(perm_idx.begin(), perm_idx.end(), [&](std::size_t x, std::size_t y) {
      return ctx.cands[x].size() < ctx.cands[y].size();
    });
    std::vector<Perm> tuple;
    std::vector<std::vector<std::uint32_t>> cands;
    for (std::size_t i : perm_idx) {
      tuple.push_back(ctx.tuple[i]);
      cands.push_back(std::move(ctx.cands[i]));
    }
    ctx.tuple = std::move(tuple);
    ctx.cands = std::move(cands);
    words = element_table(g.degree(), ctx.tuple, g.order());
  }
  ctx.pair_orders.resize(ctx.tuple.size());
  for (std::size_t p = 0; p < ctx.tuple.size(); ++p)
    for (std::size_t j = 0; j < p; ++j)
      ctx.pair_orders[p].push_back((ctx.tuple[j] * ctx.tuple[p]).order());

  std::vector<std::vector<Perm>> results;
  const auto& first = ctx.cands[0];
#ifdef _OPENMP
  if (parallel && g.order() >= 512) {
    int nthreads = std::min(scan::thread_limit(), omp_get_max_threads());
#pragma omp parallel num_threads(nthreads)
    {
      std::vector<std::vector<Perm>> local;
      std::vector<Perm> b(ctx.tuple.size(), Perm(g.degree()));
#pragma omp for schedule(dynamic)
      for (std::int64_t f = 0; f < static_cast<std::int64_t>(first.size()); ++f) {
        b[0] = cc.table.elems[first[static_cast<std::size_t>(f)]];
        search(ctx, b, 1, local);
      }
#pragma omp critical
      results.insert(results.end(), local.begin(), local.end());
    }
  } else
#endif
  {
    (void)parallel;
    std::vector<Perm> b(ctx.tuple.size(), Perm(g.degree()));
    search(ctx, b, 0, results);
  }

  std::sort(results.begin(), results.end());
  out.complete = true;
  out.count = results.size();
  out.base_tuple = ctx.tuple;
  out.images = std::move(results);
  out.words = std::make_shared<ElementTable>(std::move(words));
  return out;
}

Perm AutSet::apply(std::size_t k, const Perm& x) const {
  if (base_tuple.empty()) return x;  // trivial group
  std::uint32_t idx = words->find(x);
  if (idx == ElementTable::npos) throw DomainError("automorphism applied outside the group");
  std::vector<std::uint16_t> path;
  for (std::int64_t cur = idx; words->parent[static_cast<std::size_t>(cur)] >= 0;
       cur = words->parent[static_cast<std::size_t>(cur)])
    path.push_back(words->via_gen[static_cast<std::size_t>(cur)]);
  Perm r(x.degree());
  const std::vector<Perm>& b = images[k];
  for (auto it = path.rbegin(); it != path.rend(); ++it) r = r * b[*it];
  return r;
}

std::optional<bool> is_characteristic(const Group& g, const Group& n, const AutSet& auts) {
  if (!subgroup_le(n, g) || !is_normal_in(n, g))
    throw DomainError("is_characteristic requires a normal subgroup");
  if (!auts.complete) return std::nullopt;
  for (std::size_t k = 0; k < auts.images.size(); ++k)
    for (const Perm& h : n.generators())
      if (!n.contains(auts.apply(k, h))) return false;
  return true;
}

}  // namespace frattini
