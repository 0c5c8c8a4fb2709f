#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "frattini/group.hpp"
#include "frattini/sylow.hpp"

namespace frattini {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string group;
  std::string check;
  CheckStatus status = CheckStatus::skipped;
  nlohmann::json detail;  // skipped rows carry a "reason"; fails carry a witness

  static CheckRecord pass(std::string group, std::string check, nlohmann::json detail) {
    return {std::move(group), std::move(check), CheckStatus::pass, std::move(detail)};
  }
  static CheckRecord fail(std::string group, std::string check, nlohmann::json detail) {
    return {std::move(group), std::move(check), CheckStatus::fail, std::move(detail)};
  }
  static CheckRecord skip(std::string group, std::string check, const std::string& reason,
                          nlohmann::json detail = nlohmann::json::object()) {
    detail["reason"] = reason;
    return {std::move(group), std::move(check), CheckStatus::skipped, std::move(detail)};
  }

  nlohmann::json to_json() const;
};

// Per-group budget knobs; defaults are sized for groups of order a few
// thousand.  Larger corpus members carry overrides in their GroupSpec.
struct Budgets {
  std::uint64_t elements = 20000;  // generic element-scan ceiling
  std::uint64_t normal = 5000;     // conjugacy/normal-subgroup machinery
  std::uint64_t aut = 500;         // automorphism backtracking ceiling (|G|)
  std::uint64_t mingen = 5000;     // min_generators tuple search ceiling
  LatticeBudget lattice;           // exhaustive-lattice ceiling
};

// Tate: every normal N meeting each Sylow inside its Frattini subgroup has
// p-coprime O^p(N); when the hypothesis holds at every prime, N is
// nilpotent.  Rows with a failed hypothesis are negative controls.
std::vector<CheckRecord> tate_check(const Group& g, const Budgets& b);

// Fitting-quotient identity F(G/N) = F(G)/N under the same hypothesis.
std::vector<CheckRecord> fitting_quotient_check(const Group& g, const Budgets& b);

// Orbits of a Sylow p-subgroup on the pi-components: at most d_p of them,
// each of p-power size.
std::vector<CheckRecord> comporb_check(const Group& g, const std::set<std::uint64_t>& pi,
                                       const Budgets& b);

// Digit-sum bound: x = #components divisible by both p and q satisfies
// s_p(x) <= d_p and s_q(x) <= d_q; composition factors divisible by pq
// are counted alongside.
CheckRecord theorem_c_check(const Group& g, std::uint64_t p, std::uint64_t q, const Budgets& b);

// Simple-group facts: |Q| < k^(k^2) for k the largest prime divisor;
// |Q| divisible by 6 or 10; |Aut(Q)| < |Q|^2.
std::vector<CheckRecord> simple_group_checks(const Group& q, const Budgets& b);

// Maximal nilpotent subgroup order in Sym(n): computed exactly, compared
// against 2^n and the structural description.  Refused for n > 8.
CheckRecord vdovin_check(unsigned n);

// Exact maximal nilpotent subgroup order of g (Sylow-sublattice descent).
std::uint64_t max_nilpotent_order(const Group& g, std::size_t lattice_cap = 20000);

// d(G) <= d_max(G) + 1.
CheckRecord gl_check(const Group& g, const Budgets& b);

// Nilpotent p'-subgroup order bound for a linear fixture: the host group
// acts on an elementary abelian p-group of rank n with exponent-e scaling.
CheckRecord wolf_check(const Group& host, unsigned n, unsigned e, std::uint64_t p,
                       const Budgets& b);

}  // namespace frattini
