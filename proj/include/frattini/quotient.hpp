#pragma once

#include <cstdint>
#include <vector>

#include "frattini/group.hpp"

namespace frattini {

// Quotient g/n as a permutation group on the right cosets of n.
// The kernel must be normal (checked).  A trivial kernel short-circuits
// to a copy of the source group with the identity projection.
class Quotient {
 public:
  Quotient(const Group& g, const Group& n);

  const Group& group() const { return quotient_; }
  const Group& kernel() const { return kernel_; }
  std::uint64_t index() const { return quotient_.order(); }
  bool identity_projection() const { return trivial_kernel_; }

  // Image of a source element in the quotient.
  Perm project(const Perm& x) const;

  // Image of a subgroup of the source (projected generators).
  Group project_subgroup(const Group& h) const;

  // A source-group representative of the given coset point.
  const Perm& coset_rep(Point c) const { return reps_[c]; }

 private:
  std::uint32_t coset_of(const Perm& x) const;

  bool trivial_kernel_ = false;
  Group kernel_;
  Group quotient_;
  std::vector<Perm> reps_;
};

}  // namespace frattini
