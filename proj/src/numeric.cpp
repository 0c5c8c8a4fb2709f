#include "frattini/numeric.hpp"

#include "frattini/errors.hpp"

namespace frattini {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  return part;
}

unsigned exact_log(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) throw DomainError("exact_log: argument is not a power of the base");
  return k;
}

unsigned digit_sum(std::uint64_t x, std::uint64_t p) {
  if (p < 2) throw DomainError("digit_sum: base must be at least 2");
  unsigned s = 0;
  while (x > 0) {
    s += static_cast<unsigned>(x % p);
    x /= p;
  }
  return s;
}

}  // namespace frattini
