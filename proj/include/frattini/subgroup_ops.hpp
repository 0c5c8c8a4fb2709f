#pragma once

#include <cstdint>
#include <vector>

#include "frattini/group.hpp"

namespace frattini {

struct ConjugacyClasses {
  ElementTable table;
  std::vector<std::uint32_t> class_of;  // element index -> class id
  std::vector<std::uint32_t> rep;       // class id -> smallest element index
  std::vector<std::uint64_t> size;      // class id -> class size
};

ConjugacyClasses conjugacy_classes(const Group& g, std::uint64_t budget);

// Greedy generating set for the listed elements (in the given order).
Group span_of(std::size_t degree, const std::vector<Perm>& elems);

// Smallest normal subgroup of g containing the seed elements.
Group normal_closure(const Group& g, const std::vector<Perm>& seed);
Group normal_closure(const Group& g, const Group& s);

enum class VerbalKind { derived, p_power };

// derived: normal closure of generator commutators.
// p_power: normal closure of generator p-th powers (g must be a p-group).
Group verbal_subgroup(const Group& g, VerbalKind kind, std::uint64_t p = 0);

struct StabilizerPair {
  Group centralizer;
  Group normalizer;
};

// Exact element-scan centralizer and normalizer of h in g.
StabilizerPair subgroup_stabilizers(const Group& g, const Group& h, std::uint64_t budget);
Group centralizer(const Group& g, const Group& h, std::uint64_t budget);
Group normalizer(const Group& g, const Group& h, std::uint64_t budget);

Group join(const Group& a, const Group& b);
Group meet(const Group& a, const Group& b, std::uint64_t budget);

struct NormalSubgroups {
  std::vector<Group> all;        // sorted by order; includes trivial and g
  std::vector<bool> minimal;     // minimal non-trivial normal subgroups
};

// Join-closure of normal closures of single conjugacy-class representatives.
NormalSubgroups normal_subgroups(const Group& g, std::uint64_t budget);

}  // namespace frattini
