#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "frattini/automorphism.hpp"
#include "frattini/checks.hpp"
#include "frattini/group.hpp"
#include "frattini/satlog.hpp"

namespace frattini {

// Among characteristic subgroups N with g/N non-nilpotent, one of maximal
// order; ties broken by the lexicographically smallest element set.
// Throws DomainError for nilpotent input; skipped when auts incomplete.
Budgeted<Group> max_char_nonnilpotent_kernel(const Group& g, const AutSet& auts,
                                             const Budgets& b);

struct OrbitDatum {
  std::uint64_t p = 0;
  unsigned orbit_count = 0;      // x in |Omega| = x * p^m
  std::uint64_t orbit_size = 0;  // p^m
  bool sizes_equal = false;
  bool size_is_p_power = false;
  bool x_le_dmax = false;
};

struct TheoremAReport {
  bool applicable = false;  // false: skipped (reason below) or nilpotent input
  std::string skip_reason;

  std::uint64_t kernel_order = 0;
  std::uint64_t quotient_order = 0;
  std::string case_tag;  // "i" or "ii"

  // case i
  std::uint64_t p = 0;
  std::uint64_t s_order = 0;
  std::uint64_t h_order = 0;
  bool s_elem_abelian = false;
  bool phi_s_trivial = false;
  bool h_found = false;
  bool h_nilpotent = false;
  bool o_p_prime_trivial = false;
  bool faithful = false;
  double bound_value = 0;  // p^(c*d_max)/2
  bool bound_ok = false;

  // case ii
  std::uint64_t m_order = 0;
  unsigned omega = 0;
  std::uint64_t component_order = 0;
  bool direct_product_ok = false;
  std::vector<OrbitDatum> orbits;
  bool omega_le_dmax_sq = false;
  std::uint64_t g_mod_r = 0;
  bool g_mod_r_le = false;  // <= 2^omega
  bool centralizer_trivial = false;

  bool all_ok() const;
  nlohmann::json to_json() const;
};

TheoremAReport theorem_a_classify(const Group& g, const Budgets& b);

CheckRecord theorem_a_record(const Group& g, const Budgets& b);

}  // namespace frattini
