#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "frattini/errors.hpp"
#include "frattini/group.hpp"
#include "frattini/numeric.hpp"

namespace frattini {

// Sylow p-subgroup by normalizer ascent: seed with a p-element, grow
// inside successive normalizers until the full p-part is reached.
Group sylow_subgroup(const Group& g, std::uint64_t p);

// Frattini subgroup of a p-group: derived subgroup joined with p-th powers.
Group pgroup_frattini(const Group& s, std::uint64_t p);

struct InvariantProfile {
  std::map<std::uint64_t, unsigned> d_p;
  unsigned d_sigma = 0;
  unsigned d_max = 0;
  std::uint64_t p_max = 2;  // 2 for the trivial group
  std::map<std::uint64_t, Group> sylow;
  std::map<std::uint64_t, Group> sylow_frattini;
};

InvariantProfile invariant_profile(const Group& g);

// Minimum size of a generating set (exhaustive tuple search with a
// quotient-rank prune for p-groups).
Budgeted<unsigned> min_generators(const Group& g, std::uint64_t budget);

struct StructureFlags {
  bool nilpotent = false;
  bool soluble = false;
  bool simple = false;
};

StructureFlags structure_predicates(const Group& g);

bool is_nilpotent(const Group& g);
bool is_soluble(const Group& g);
bool is_abelian(const Group& g);

// O^pi(G): smallest normal subgroup with pi-group quotient.
Group o_upper_pi(const Group& g, const std::set<std::uint64_t>& pi);

// O_p(G): intersection of the conjugates of a Sylow p-subgroup.
Group o_p_core(const Group& g, std::uint64_t p);

// O_pi(G) for a prime set, via the normal-subgroup list.
Group largest_normal_pi(const Group& g, const std::set<std::uint64_t>& pi, std::uint64_t budget);

// Fitting subgroup: join of the p-cores.
Group fitting(const Group& g);

struct LatticeBudget {
  std::size_t max_subgroups = 20000;
  std::uint64_t max_order = 2000;
};

// Frattini subgroup.  Nilpotent groups take the Sylow-product shortcut;
// otherwise the full subgroup lattice is intersected over its maximal
// members, under the lattice budget.
Budgeted<Group> frattini(const Group& g, const LatticeBudget& budget = {});

struct CompositionData {
  std::vector<std::uint64_t> factor_orders;  // multiset, in refinement order
  unsigned nonabelian_count = 0;
};

CompositionData composition_factors(const Group& g, bool reverse_tiebreak = false);

struct SimpleSubnormals {
  std::vector<Group> comp_pi;  // simple subnormal subgroups, pi-filtered
  Group e_pi;                  // their join (an internal direct product)
};

Budgeted<SimpleSubnormals> simple_subnormals(const Group& g, const std::set<std::uint64_t>& pi,
                                             std::uint64_t budget);

// All simple non-abelian subnormal subgroups (Comp with no prime filter).
Budgeted<std::vector<Group>> simple_subnormal_list(const Group& g, std::uint64_t budget);

}  // namespace frattini
