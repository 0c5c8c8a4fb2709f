#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "frattini/checks.hpp"
#include "frattini/group.hpp"
#include "frattini/satlog.hpp"

namespace frattini {

struct TheoremBReport {
  bool applicable = false;
  std::string skip_reason;

  std::vector<std::uint64_t> chain_orders;  // |G_0|, ..., |G_t|
  unsigned t = 0;
  std::vector<unsigned> r;  // r_0 .. r_t
  bool chain_characteristic = false;
  bool r_strictly_decreasing = false;
  bool r0_is_d_sigma = false;
  bool t_le_d_sigma = false;
  bool tail_nilpotent = false;

  bool frattini_known = false;
  std::uint64_t frattini_index = 0;
  std::string frattini_skip_reason;

  bool soluble = false;
  std::vector<double> g_ledger_log2;  // log2 of each g_i (saturates)
  bool bound_checked = false;         // soluble and frattini known
  bool bound_ok = false;              // |G:Phi(G)| <= g_ds * p_max^(ds*g_ds)

  bool all_ok() const;
  nlohmann::json to_json() const;
};

TheoremBReport theorem_b_verify(const Group& g, const Budgets& b);

CheckRecord theorem_b_record(const Group& g, const Budgets& b);

}  // namespace frattini
