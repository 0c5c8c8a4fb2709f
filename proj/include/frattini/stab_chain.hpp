#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frattini/perm.hpp"

namespace frattini {

// One level of a stabilizer chain: the fundamental orbit of the base
// point under the level generators, with an explicit transversal.
struct ChainLevel {
  Point base = 0;
  std::vector<Point> orbit;       // discovery order; orbit[0] == base
  std::vector<std::int32_t> pos;  // point -> index into orbit, -1 if absent
  std::vector<Perm> transversal;  // transversal[i] maps base to orbit[i]
  std::vector<Perm> gens;         // all fix the base points of earlier levels
};

// Deterministic (non-randomized) Schreier-Sims chain.  Base points are
// chosen as the smallest moved point at each level, so the chain and the
// element enumeration order are reproducible across runs.
class StabChain {
 public:
  StabChain() = default;
  StabChain(std::vector<Perm> gens, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }

  bool contains(const Perm& g) const;

  // Sifts g; returns the level at which sifting stopped and the residue.
  // Membership means the residue is the identity after all levels.
  std::pair<std::size_t, Perm> sift(const Perm& g) const;

  std::vector<Perm> strong_generators() const;

 private:
  void insert_generator(std::size_t level, const Perm& g);
  void rebuild_orbit(std::size_t level);
  void close_level(std::size_t level);

  std::size_t degree_ = 0;
  std::uint64_t order_ = 1;
  std::vector<ChainLevel> levels_;
};

}  // namespace frattini
