#include "frattini/bounds.hpp"

#include <cmath>

#include "frattini/errors.hpp"

namespace frattini {

double BoundConstants::c_wolf() { return std::log(288.0) / std::log(9.0); }

double BoundConstants::wolf_slope() { return std::log(32.0) / std::log(9.0); }

std::vector<SatLog> g_sequence(unsigned d_max, std::uint64_t p_max, unsigned d_sigma) {
  std::vector<SatLog> g;
  g.reserve(d_sigma + 1);
  g.push_back(SatLog::from_integer(1));
  double log2p = std::log2(static_cast<double>(p_max));
  double c = BoundConstants::c_wolf();
  for (unsigned i = 0; i < d_sigma; ++i) {
    if (d_max == 0) {
      g.push_back(SatLog::from_integer(1));
      continue;
    }
    // log2 g_{i+1} = c * d_max * g_i * log2(p_max)
    double gi = g.back().value();
    if (!std::isfinite(gi)) {
      g.push_back(SatLog::saturated());
      continue;
    }
    g.push_back(SatLog::from_log2(c * d_max * gi * log2p));
  }
  return g;
}

std::uint64_t schreier_bound(unsigned d, std::uint64_t index) {
  if (d == 0) return 1;
  return index * (d - 1) + 1;
}

SatLog wolf_bound(unsigned n, unsigned e, std::uint64_t p) {
  if (p < 2) throw DomainError("wolf_bound: p must be a prime");
  // log_p(2|H|) <= e*n*slope  =>  log2 |H| <= e*n*slope*log2(p) - 1.
  double slope = BoundConstants::wolf_slope();
  double log2p = std::log2(static_cast<double>(p));
  return SatLog::from_log2(static_cast<double>(e) * n * slope * log2p - 1.0);
}

}  // namespace frattini
