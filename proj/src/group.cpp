#include "frattini/group.hpp"

#include <algorithm>

namespace frattini {

Group::Group(std::size_t degree, std::vector<Perm> gens, std::string name)
    : degree_(degree), gens_(std::move(gens)), name_(std::move(name)) {
  if (gens_.empty()) throw ValidationError("group requires at least one generator");
  chain_ = StabChain(gens_, degree_);
}

Group Group::trivial(std::size_t degree, std::string name) {
  return Group(degree, {Perm(degree)}, std::move(name));
}

Group Group::with_name(std::string name) const {
  Group g = *this;
  g.name_ = std::move(name);
  return g;
}

std::vector<Perm> Group::elements(std::uint64_t budget) const {
  if (order() > budget) throw BudgetError("element enumeration budget exceeded");
  const auto& levels = chain_.levels();
  std::vector<Perm> out{Perm(degree_)};
  // Transversal-product order: level-0 coset index varies slowest.
  for (std::size_t li = levels.size(); li-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels[li].transversal.size());
    for (const Perm& t : levels[li].transversal)
      for (const Perm& h : out) next.push_back(h * t);
    out = std::move(next);
  }
  return out;
}

OrbitResult orbit(const std::vector<Perm>& gens, Point start, std::size_t degree) {
  if (start >= degree) throw DomainError("orbit seed point out of range");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw ValidationError("orbit generator degree mismatch");
  OrbitResult r;
  std::vector<std::int32_t> pos(degree, -1);
  r.points.push_back(start);
  r.witnesses.push_back(Perm(degree));
  pos[start] = 0;
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    for (const Perm& g : gens) {
      Point q = g(r.points[i]);
      if (pos[q] < 0) {
        pos[q] = static_cast<std::int32_t>(r.points.size());
        r.points.push_back(q);
        r.witnesses.push_back(r.witnesses[i] * g);
      }
    }
  }
  return r;
}

Group subgroup_of(const Group& parent, std::vector<Perm> gens, std::string name) {
  if (gens.empty()) gens.push_back(Perm(parent.degree()));
  for (const Perm& g : gens) {
    if (g.degree() != parent.degree())
      throw DomainError("subgroup generator degree mismatch");
    if (!parent.contains(g))
      throw DomainError("subgroup generator is not contained in the parent group");
  }
  Group sub(parent.degree(), std::move(gens), std::move(name));
  if (parent.order() % sub.order() != 0)
    throw DomainError("subgroup order does not divide parent order");  // unreachable if containment holds
  return sub;
}

bool subgroup_le(const Group& sub, const Group& sup) {
  for (const Perm& g : sub.generators())
    if (!sup.contains(g)) return false;
  return true;
}

bool same_group(const Group& a, const Group& b) {
  return a.order() == b.order() && subgroup_le(a, b);
}

bool is_normal_in(const Group& n, const Group& g) {
  for (const Perm& x : g.generators())
    for (const Perm& h : n.generators())
      if (!n.contains(h.conjugated_by(x))) return false;
  return true;
}

Group conjugate_subgroup(const Group& h, const Perm& x) {
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm& g : h.generators()) gens.push_back(g.conjugated_by(x));
  return Group(h.degree(), std::move(gens));
}

std::uint32_t ElementTable::find(const Perm& p) const {
  auto it = index.find(p);
  return it == index.end() ? npos : it->second;
}

ElementTable element_table(std::size_t degree, std::vector<Perm> gens, std::uint64_t budget) {
  ElementTable t;
  t.gens = std::move(gens);
  t.elems.push_back(Perm(degree));
  t.index.emplace(t.elems[0], 0u);
  t.parent.push_back(-1);
  t.via_gen.push_back(0);
  for (std::size_t i = 0; i < t.elems.size(); ++i) {
    for (std::size_t gi = 0; gi < t.gens.size(); ++gi) {
      Perm next = t.elems[i] * t.gens[gi];
      if (t.index.contains(next)) continue;
      if (t.elems.size() >= budget) throw BudgetError("element table budget exceeded");
      t.index.emplace(next, static_cast<std::uint32_t>(t.elems.size()));
      t.elems.push_back(std::move(next));
      t.parent.push_back(static_cast<std::int32_t>(i));
      t.via_gen.push_back(static_cast<std::uint16_t>(gi));
    }
  }
  return t;
}

ElementTable element_table(const Group& g, std::uint64_t budget) {
  if (g.order() > budget) throw BudgetError("element table budget exceeded");
  return element_table(g.degree(), g.generators(), g.order());
}

}  // namespace frattini
