#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "frattini/stab_chain.hpp"

namespace frattini {

// A finite permutation group given by generators.  Immutable after
// construction and safe to share across threads.
class Group {
 public:
  Group(std::size_t degree, std::vector<Perm> gens, std::string name = {});

  static Group trivial(std::size_t degree, std::string name = {});

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return chain_.order(); }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const { return chain_; }

  bool contains(const Perm& x) const { return chain_.contains(x); }
  bool is_trivial() const { return order() == 1; }

  // Every element exactly once, in transversal-product lexicographic
  // order.  Refuses (never truncates) if the order exceeds the budget.
  std::vector<Perm> elements(std::uint64_t budget) const;

  Group with_name(std::string name) const;

 private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  StabChain chain_;
  std::string name_;
};

struct OrbitResult {
  std::vector<Point> points;     // discovery order; points[0] is the seed
  std::vector<Perm> witnesses;   // witnesses[i] maps the seed to points[i]
};

// Smallest generator-closed set of points containing `start`.
OrbitResult orbit(const std::vector<Perm>& gens, Point start, std::size_t degree);

// Subgroup constructor: validates that every generator lies in `parent`.
Group subgroup_of(const Group& parent, std::vector<Perm> gens, std::string name = {});

bool subgroup_le(const Group& sub, const Group& sup);   // sub <= sup (generator test)
bool same_group(const Group& a, const Group& b);        // equal as element sets
bool is_normal_in(const Group& n, const Group& g);      // n fixed by conjugation with g's gens

// Conjugate subgroup h^x = x^-1 h x.
Group conjugate_subgroup(const Group& h, const Perm& x);

// Breadth-first element table over a fixed generating tuple.  Keeps the
// BFS tree so words for elements can be reconstructed cheaply.
struct ElementTable {
  std::vector<Perm> elems;  // elems[0] is the identity
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  std::vector<std::int32_t> parent;    // -1 for the identity
  std::vector<std::uint16_t> via_gen;  // elems[i] = elems[parent[i]] * gens[via_gen[i]]
  std::vector<Perm> gens;

  static constexpr std::uint32_t npos = 0xffffffffu;
  std::uint32_t find(const Perm& p) const;
};

ElementTable element_table(const Group& g, std::uint64_t budget);
ElementTable element_table(std::size_t degree, std::vector<Perm> gens, std::uint64_t budget);

}  // namespace frattini
