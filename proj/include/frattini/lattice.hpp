#pragma once

#include <cstdint>
#include <vector>

#include "frattini/errors.hpp"
#include "frattini/group.hpp"

namespace frattini {

// Dense multiplication table for a small group; the workhorse behind
// exhaustive subgroup enumeration.
struct SmallGroupTable {
  std::size_t degree = 0;
  std::vector<Perm> elems;                  // BFS order, elems[0] = identity
  std::vector<std::uint32_t> mul;           // mul[i * n + j] = index of elems[i] * elems[j]
  std::vector<std::uint32_t> inv;
  std::vector<std::uint64_t> elem_order;

  std::size_t size() const { return elems.size(); }
  std::uint32_t product(std::uint32_t i, std::uint32_t j) const {
    return mul[static_cast<std::size_t>(i) * elems.size() + j];
  }
};

SmallGroupTable small_table(const Group& g, std::uint64_t budget);

// Element subset of a SmallGroupTable as a bitset.
struct ElemSet {
  std::vector<std::uint64_t> bits;
  std::uint32_t count = 0;

  explicit ElemSet(std::size_t n = 0) : bits((n + 63) / 64, 0) {}
  bool test(std::uint32_t i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint32_t i) {
    if (!test(i)) {
      bits[i >> 6] |= (std::uint64_t{1} << (i & 63));
      ++count;
    }
  }
  bool subset_of(const ElemSet& o) const {
    for (std::size_t w = 0; w < bits.size(); ++w)
      if (bits[w] & ~o.bits[w]) return false;
    return true;
  }
  friend bool operator==(const ElemSet&, const ElemSet&) = default;
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : s.bits) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }
};

// Closure of a seed set under the group multiplication.
ElemSet closure_of(const SmallGroupTable& t, const std::vector<std::uint32_t>& seed);

// All subgroups, as element sets, by breadth-first single-element
// extensions; sorted by (order, bits).  Refuses past max_subgroups.
std::vector<ElemSet> all_subgroups(const SmallGroupTable& t, std::size_t max_subgroups);

// Subgroups maximal in the full lattice (proper, with no proper
// intermediate overgroup).
std::vector<ElemSet> maximal_subgroups(const SmallGroupTable& t,
                                       const std::vector<ElemSet>& lattice);

// Nilpotency from the table: every pair of elements of coprime
// prime-power orders must commute.
bool nilpotent_in_table(const SmallGroupTable& t, const ElemSet& h);

// Lift an element set back to a Group on the original domain.
Group group_from_set(const Group& parent, const SmallGroupTable& t, const ElemSet& s);

}  // namespace frattini
