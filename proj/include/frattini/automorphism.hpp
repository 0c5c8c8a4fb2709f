#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frattini/group.hpp"

namespace frattini {

// The full automorphism group of a small group, represented by the images
// of a fixed generating tuple.  `complete` is false when the search was
// refused for budget reasons; consumers must then treat characteristic
// tests as skipped, never guessed.
struct AutSet {
  bool complete = false;
  std::string skip_reason;
  std::uint64_t count = 0;                 // |Aut(G)| when complete
  std::vector<Perm> base_tuple;            // generating tuple of G
  std::vector<std::vector<Perm>> images;   // one image tuple per automorphism
  std::shared_ptr<const ElementTable> words;  // BFS tree over base_tuple

  // Image of x in G under automorphism #k.
  Perm apply(std::size_t k, const Perm& x) const;
};

// Backtracking over images of a small generating tuple, pruned by
// (element order, conjugacy class size) fingerprints.  Refuses when
// |g| exceeds the budget.
AutSet automorphisms(const Group& g, std::uint64_t budget, bool parallel = true);

// True iff every automorphism fixes n setwise.  nullopt when the
// automorphism set is incomplete.  n must be normal in g.
std::optional<bool> is_characteristic(const Group& g, const Group& n, const AutSet& auts);

}  // namespace frattini
