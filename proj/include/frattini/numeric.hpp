#pragma once

#include <cstdint>
#include <vector>

namespace frattini {

// Trial division is fine at desk scale (orders well below 10^7).
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// log_p(n) for exact powers; throws DomainError otherwise.
unsigned exact_log(std::uint64_t n, std::uint64_t p);

// Digit sum of x in base p.
unsigned digit_sum(std::uint64_t x, std::uint64_t p);

}  // namespace frattini
