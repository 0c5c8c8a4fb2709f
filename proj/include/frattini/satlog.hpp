#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace frattini {

// Saturating base-2 logarithm.  The g-sequence of Theorem-B-style bounds
// grows as an exponential tower; once a quantity is beyond any desk-scale
// group order we only need to remember "astronomically large".
class SatLog {
 public:
  SatLog() = default;

  static SatLog from_integer(std::uint64_t n) {
    SatLog s;
    s.log2_ = n == 0 ? -std::numeric_limits<double>::infinity() : std::log2(static_cast<double>(n));
    return s;
  }
  static SatLog from_log2(double l) {
    SatLog s;
    if (!std::isfinite(l) || l > kSaturation) {
      s.sat_ = true;
      s.log2_ = kSaturation;
    } else {
      s.log2_ = l;
    }
    return s;
  }
  static SatLog saturated() { return from_log2(std::numeric_limits<double>::infinity()); }

  bool is_saturated() const { return sat_; }
  double log2() const { return log2_; }

  // The represented value as a double; +inf when it does not fit.
  double value() const {
    if (sat_ || log2_ > 1000.0) return std::numeric_limits<double>::infinity();
    return std::exp2(log2_);
  }

  SatLog times(const SatLog& o) const {
    if (sat_ || o.sat_) return saturated();
    return from_log2(log2_ + o.log2_);
  }
  SatLog divided_by_integer(std::uint64_t n) const {
    if (sat_) return saturated();
    return from_log2(log2_ - std::log2(static_cast<double>(n)));
  }
  // base^exponent where the exponent itself is a SatLog value.
  static SatLog power(double base, const SatLog& exponent) {
    double e = exponent.value();
    if (!std::isfinite(e)) return saturated();
    return from_log2(e * std::log2(base));
  }

  // a <= b with slack on the bound side, so irrational-constant rounding
  // can never produce a spurious fail.
  static bool le(const SatLog& a, const SatLog& b, double rel_slack = 1e-9) {
    if (b.sat_) return true;
    if (a.sat_) return false;
    return a.log2_ <= b.log2_ + rel_slack * std::max(1.0, std::fabs(b.log2_));
  }

  std::string describe() const;

 private:
  static constexpr double kSaturation = 1e15;
  double log2_ = 0.0;  // value 1 by default
  bool sat_ = false;
};

}  // namespace frattini
