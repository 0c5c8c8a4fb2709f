#include "frattini/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace frattini {

Perm::Perm(std::size_t degree) : img_(degree) {
  if (degree == 0) throw ValidationError("permutation degree must be >= 1");
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  if (img_.empty()) throw ValidationError("permutation degree must be >= 1");
  std::vector<bool> seen(img_.size(), false);
  for (Point x : img_) {
    if (x >= img_.size() || seen[x])
      throw ValidationError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Perm Perm::cycle(std::size_t degree, std::initializer_list<Point> pts) {
  return cycle(degree, std::vector<Point>(pts));
}

Perm Perm::cycle(std::size_t degree, const std::vector<Point>& pts) {
  Perm p(degree);
  if (pts.empty()) return p;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) p.img_[pts[i]] = pts[i + 1];
  p.img_[pts.back()] = pts.front();
  // Re-validate: repeated points in the cycle would break bijectivity.
  return Perm(std::move(p.img_));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = rhs.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.inverse() * (*this) * g; }

std::uint64_t Perm::order() const {
  // lcm of cycle lengths
  std::uint64_t ord = 1;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Point Perm::smallest_moved() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(img_.size());
}

std::string Perm::to_cycle_string() const {
  if (is_identity()) return "()";
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << (j + 1);  // 1-based for display
      first = false;
    }
    os << ')';
  }
  return os.str();
}

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

Perm perm_power(const Perm& a, std::uint64_t n) {
  Perm r(a.degree());
  Perm base = a;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

}  // namespace frattini
