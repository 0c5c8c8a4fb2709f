#pragma once

#include <cstdint>
#include <vector>

#include "frattini/satlog.hpp"

namespace frattini {

struct BoundConstants {
  // c = log 288 / log 9: the exact exponent that simultaneously realises
  // 9^c = 288 and 3^c = sqrt(288).
  static double c_wolf();
  // Slope of the nilpotent-length style bound log_p(2|H|) <= e*n*log32/log9.
  static double wolf_slope();
};

// g_0 = 1, g_{i+1} = p_max^(c * d_max * g_i), computed for i = 0..d_sigma.
// Returned vector has d_sigma + 1 entries.  d_max = 0 gives all ones.
std::vector<SatLog> g_sequence(unsigned d_max, std::uint64_t p_max, unsigned d_sigma);

// Schreier generator bound: a subgroup of index n in a d-generated group
// needs at most n*(d-1) + 1 generators.
std::uint64_t schreier_bound(unsigned d, std::uint64_t index);

// Largest |H| permitted by log_p(2|H|) <= e * n * log32/log9, as a SatLog.
SatLog wolf_bound(unsigned n, unsigned e, std::uint64_t p);

}  // namespace frattini
