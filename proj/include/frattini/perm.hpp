#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "frattini/errors.hpp"

namespace frattini {

// 0-based point label.  Serialized formats use 1-based labels; the
// conversion happens at the I/O boundary only.
using Point = std::uint16_t;

// A permutation of {0, ..., degree-1}, stored as its image vector.
class Perm {
 public:
  Perm() = default;

  // Identity of the given degree.
  explicit Perm(std::size_t degree);

  // Validates that images is a bijection.
  explicit Perm(std::vector<Point> images);

  // Single cycle on the listed points, identity elsewhere.
  static Perm cycle(std::size_t degree, std::initializer_list<Point> pts);
  static Perm cycle(std::size_t degree, const std::vector<Point>& pts);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;

  // Product applies *this first, then rhs: (a*b)(x) = b(a(x)).
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g^-1 * (*this) * g

  std::uint64_t order() const;

  // Smallest point moved, or degree() for the identity.
  Point smallest_moved() const;

  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ p.degree();
    for (Point x : p.images()) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

Perm commutator(const Perm& a, const Perm& b);  // a^-1 b^-1 a b
Perm perm_power(const Perm& a, std::uint64_t n);

}  // namespace frattini
