#include "frattini/subgroup_ops.hpp"

#include <algorithm>
#include <deque>

#include "frattini/scan.hpp"

namespace frattini {

ConjugacyClasses conjugacy_classes(const Group& g, std::uint64_t budget) {
  if (g.order() > budget) throw BudgetError("conjugacy class budget exceeded");
  ConjugacyClasses cc;
  cc.table = element_table(g, budget);
  const std::size_t n = cc.table.elems.size();
  cc.class_of.assign(n, ElementTable::npos);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (cc.class_of[i] != ElementTable::npos) continue;
    std::uint32_t cls = static_cast<std::uint32_t>(cc.rep.size());
    cc.rep.push_back(i);
    std::uint64_t count = 0;
    std::deque<std::uint32_t> queue{i};
    cc.class_of[i] = cls;
    while (!queue.empty()) {
      std::uint32_t cur = queue.front();
      queue.pop_front();
      ++count;
      for (const Perm& x : g.generators()) {
        std::uint32_t j = cc.table.find(cc.table.elems[cur].conjugated_by(x));
        if (cc.class_of[j] == ElementTable::npos) {
          cc.class_of[j] = cls;
          queue.push_back(j);
        }
      }
    }
    cc.size.push_back(count);
  }
  return cc;
}

Group span_of(std::size_t degree, const std::vector<Perm>& elems) {
  std::vector<Perm> gens{Perm(degree)};
  Group g = Group::trivial(degree);
  for (const Perm& e : elems) {
    if (!g.contains(e)) {
      gens.push_back(e);
      g = Group(degree, gens);
    }
  }
  return g;
}

Group normal_closure(const Group& g, const std::vector<Perm>& seed) {
  std::vector<Perm> gens;
  for (const Perm& s : seed) {
    if (!s.is_identity()) gens.push_back(s);
  }
  if (gens.empty()) return Group::trivial(g.degree());
  Group k(g.degree(), gens);
  for (;;) {
    std::vector<Perm> fresh;
    for (const Perm& h : k.generators())
      for (const Perm& x : g.generators()) {
        Perm c = h.conjugated_by(x);
        if (!k.contains(c)) fresh.push_back(std::move(c));
      }
    if (fresh.empty()) return k;
    gens.insert(gens.end(), fresh.begin(), fresh.end());
    k = Group(g.degree(), gens);
  }
}

Group normal_closure(const Group& g, const Group& s) {
  if (!subgroup_le(s, g)) throw DomainError("normal closure: seed is not a subgroup of the parent");
  return normal_closure(g, s.generators());
}

Group verbal_subgroup(const Group& g, VerbalKind kind, std::uint64_t p) {
  std::vector<Perm> seed;
  if (kind == VerbalKind::derived) {
    for (const Perm& a : g.generators())
      for (const Perm& b : g.generators()) seed.push_back(commutator(a, b));
  } else {
    if (p < 2) throw DomainError("p_power verbal subgroup requires a prime");
    std::uint64_t n = g.order();
    while (n % p == 0) n /= p;
    if (n != 1) throw DomainError("p_power verbal subgroup requires a p-group");
    for (const Perm& a : g.generators()) seed.push_back(perm_power(a, p));
  }
  return normal_closure(g, seed);
}

namespace {

Group scan_subgroup(const Group& g, const std::vector<Perm>& elems,
                    const std::vector<std::uint32_t>& hits) {
  std::vector<Perm> chosen;
  chosen.reserve(hits.size());
  for (std::uint32_t i : hits) chosen.push_back(elems[i]);
  return span_of(g.degree(), chosen);
}

}  // namespace

StabilizerPair subgroup_stabilizers(const Group& g, const Group& h, std::uint64_t budget) {
  if (!subgroup_le(h, g)) throw DomainError("stabilizers: h is not a subgroup of g");
  std::vector<Perm> elems = g.elements(budget);
  const std::vector<Perm>& hg = h.generators();
  auto cent = scan::filter_indices(elems.size(), [&](std::size_t i) {
    Perm xi = elems[i].inverse();
    for (const Perm& k : hg)
      if (!(xi * k * elems[i] == k)) return false;
    return true;
  });
  auto norm = scan::filter_indices(elems.size(), [&](std::size_t i) {
    for (const Perm& k : hg)
      if (!h.contains(k.conjugated_by(elems[i]))) return false;
    return true;
  });
  return {scan_subgroup(g, elems, cent), scan_subgroup(g, elems, norm)};
}

Group centralizer(const Group& g, const Group& h, std::uint64_t budget) {
  return subgroup_stabilizers(g, h, budget).centralizer;
}

Group normalizer(const Group& g, const Group& h, std::uint64_t budget) {
  return subgroup_stabilizers(g, h, budget).normalizer;
}

Group join(const Group& a, const Group& b) {
  if (a.degree() != b.degree()) throw DomainError("join: degree mismatch");
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Group(a.degree(), std::move(gens));
}

Group meet(const Group& a, const Group& b, std::uint64_t budget) {
  if (a.degree() != b.degree()) throw DomainError("meet: degree mismatch");
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& other = a.order() <= b.order() ? b : a;
  std::vector<Perm> elems = small.elements(budget);
  auto hits = scan::filter_indices(elems.size(),
                                   [&](std::size_t i) { return other.contains(elems[i]); });
  return scan_subgroup(small, elems, hits);
}

NormalSubgroups normal_subgroups(const Group& g, std::uint64_t budget) {
  if (g.order() > budget) throw BudgetError("normal subgroup budget exceeded");
  ConjugacyClasses cc = conjugacy_classes(g, budget);

  std::vector<Group> found;
  auto add_unique = [&](Group n) {
    for (const Group& m : found)
      if (same_group(m, n)) return false;
    found.push_back(std::move(n));
    return true;
  };
  add_unique(Group::trivial(g.degree()));
  for (std::uint32_t cls = 0; cls < cc.rep.size(); ++cls) {
    const Perm& rep = cc.table.elems[cc.rep[cls]];
    if (rep.is_identity()) continue;
    add_unique(normal_closure(g, {rep}));
  }
  // Join-closure: normal subgroups are exactly the joins of class closures.
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < found.size(); ++i)
      for (std::size_t j = i + 1; j < found.size(); ++j) {
        if (subgroup_le(found[i], found[j]) || subgroup_le(found[j], found[i])) continue;
        if (add_unique(join(found[i], found[j]))) grew = true;
      }
  }

  NormalSubgroups out;
  std::stable_sort(found.begin(), found.end(),
                   [](const Group& x, const Group& y) { return x.order() < y.order(); });
  out.all = std::move(found);
  out.minimal.assign(out.all.size(), false);
  for (std::size_t i = 0; i < out.all.size(); ++i) {
    if (out.all[i].is_trivial()) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < out.all.size(); ++j) {
      if (j == i || out.all[j].is_trivial()) continue;
      if (out.all[j].order() < out.all[i].order() && subgroup_le(out.all[j], out.all[i])) {
        minimal = false;
        break;
      }
    }
    out.minimal[i] = minimal;
  }
  return out;
}

}  // namespace frattini
