#include "frattini/theorem_b.hpp"

#include <cmath>

#include "frattini/automorphism.hpp"
#include "frattini/bounds.hpp"
#include "frattini/numeric.hpp"
#include "frattini/subgroup_ops.hpp"
#include "frattini/theorem_a.hpp"

namespace frattini {

bool TheoremBReport::all_ok() const {
  if (!applicable) return false;
  bool ok = chain_characteristic && r_strictly_decreasing && r0_is_d_sigma && t_le_d_sigma &&
            tail_nilpotent;
  if (bound_checked) ok = ok && bound_ok;
  return ok;
}

nlohmann::json TheoremBReport::to_json() const {
  nlohmann::json j;
  j["chain_orders"] = chain_orders;
  j["t"] = t;
  j["r"] = r;
  j["chain_characteristic"] = chain_characteristic;
  j["r_strictly_decreasing"] = r_strictly_decreasing;
  j["r0_is_d_sigma"] = r0_is_d_sigma;
  j["t_le_d_sigma"] = t_le_d_sigma;
  j["tail_nilpotent"] = tail_nilpotent;
  if (frattini_known)
    j["frattini_index"] = frattini_index;
  else
    j["frattini"] = "skipped: " + frattini_skip_reason;
  j["soluble"] = soluble;
  if (bound_checked) {
    j["g_ledger_log2"] = g_ledger_log2;
    j["bound_ok"] = bound_ok;
  }
  // The exponent base in the published form of the soluble-case bound is
  // written with an undefined symbol; the derivation uses the largest
  // prime divisor, and so does this checker.
  j["conventions"] = {{"bound_base", "largest prime divisor (p_max)"}};
  return j;
}

TheoremBReport theorem_b_verify(const Group& g, const Budgets& b) {
  TheoremBReport rep;
  auto profile = invariant_profile(g);

  // r(K) = sum over p of log_p |(K n S_p) Phi(S_p) / Phi(S_p)|, against
  // the fixed Sylow system of g.
  auto r_of = [&](const Group& k) {
    unsigned r = 0;
    for (const auto& [p, sp] : profile.sylow) {
      const Group& phi = profile.sylow_frattini.at(p);
      Group inter = meet(k, sp, b.elements);
      Group lifted = join(inter, phi);
      r += exact_log(lifted.order() / phi.order(), p);
    }
    return r;
  };

  std::vector<Group> chain{g};
  rep.chain_characteristic = true;
  while (!is_nilpotent(chain.back())) {
    const Group& gi = chain.back();
    auto auts = automorphisms(gi, b.aut);
    if (!auts.complete) {
      rep.skip_reason = "automorphism set incomplete: " + auts.skip_reason;
      return rep;
    }
    auto next = max_char_nonnilpotent_kernel(gi, auts, b);
    if (!next.has_value()) {
      rep.skip_reason = next.skip_reason;
      return rep;
    }
    // Re-verify the kernel is characteristic in its predecessor.
    auto chr = is_characteristic(gi, *next, auts);
    rep.chain_characteristic = rep.chain_characteristic && chr && *chr;
    chain.push_back(*next);
  }
  rep.applicable = true;
  rep.t = static_cast<unsigned>(chain.size() - 1);
  for (const auto& gi : chain) {
    rep.chain_orders.push_back(gi.order());
    rep.r.push_back(r_of(gi));
  }
  rep.tail_nilpotent = is_nilpotent(chain.back());
  rep.r_strictly_decreasing = true;
  for (std::size_t i = 0; i + 1 < rep.r.size(); ++i)
    rep.r_strictly_decreasing = rep.r_strictly_decreasing && rep.r[i] > rep.r[i + 1];
  rep.r0_is_d_sigma = rep.r.front() == profile.d_sigma;
  rep.t_le_d_sigma = rep.t <= profile.d_sigma;

  auto phi = frattini(g, b.lattice);
  if (phi.has_value()) {
    rep.frattini_known = true;
    rep.frattini_index = g.order() / phi->order();
  } else {
    rep.frattini_skip_reason = phi.skip_reason;
  }

  rep.soluble = is_soluble(g);
  if (rep.soluble && rep.frattini_known) {
    auto ledger = g_sequence(profile.d_max, profile.p_max, profile.d_sigma);
    for (const auto& gi : ledger) rep.g_ledger_log2.push_back(gi.log2());
    const SatLog& g_ds = ledger.back();
    double log2p = std::log2(static_cast<double>(profile.p_max));
    SatLog bound = g_ds.is_saturated() || !std::isfinite(g_ds.value())
                       ? SatLog::saturated()
                       : g_ds.times(SatLog::from_log2(profile.d_sigma * g_ds.value() * log2p));
    rep.bound_checked = true;
    rep.bound_ok = SatLog::le(SatLog::from_integer(rep.frattini_index), bound, 1e-12);
  }
  return rep;
}

CheckRecord theorem_b_record(const Group& g, const Budgets& b) {
  TheoremBReport rep = theorem_b_verify(g, b);
  if (!rep.applicable) return CheckRecord::skip(g.name(), "thmB", rep.skip_reason);
  auto detail = rep.to_json();
  if (rep.all_ok()) return CheckRecord::pass(g.name(), "thmB", detail);
  return CheckRecord::fail(g.name(), "thmB", detail);
}

}  // namespace frattini
