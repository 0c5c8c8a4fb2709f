#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "frattini/builtins.hpp"
#include "frattini/numeric.hpp"
#include "frattini/subgroup_ops.hpp"
#include "frattini/sylow.hpp"

#include "support/oracles.hpp"

using namespace frattini;

namespace {

const std::vector<std::string>& small_corpus() {
  static const std::vector<std::string> c = {
      "cyclic(12)", "dihedral(6)", "sym(3)",  "sym(4)",  "sym(5)",  "alt(4)",
      "alt(5)",     "q8",          "sl23",    "gl2_3",   "sl2(4)",  "sl2(5)",
      "sl2(7)",     "sl2(9)",      "elem_abelian(2,3)",  "paper_example(2,1)"};
  return c;
}

}  // namespace

TEST_CASE("numeric helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(p_part(360, 2) == 8);
  CHECK(p_part(360, 7) == 1);
  CHECK(exact_log(243, 3) == 5);
  CHECK_THROWS_AS(exact_log(10, 3), DomainError);
  CHECK(digit_sum(5, 2) == 2);
  CHECK(digit_sum(9, 3) == 1);
  CHECK(digit_sum(0, 5) == 0);
}

TEST_CASE("sylow subgroups have the exact p-part order") {
  CHECK(sylow_subgroup(builtin_sym(4), 2).order() == 8);
  CHECK(sylow_subgroup(builtin_sym(5), 5).order() == 5);
  CHECK(sylow_subgroup(builtin_sym(4), 7).order() == 1);
  for (const auto& spec : small_corpus()) {
    Group g = builtin_group(spec);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      CAPTURE(spec);
      CAPTURE(p);
      CHECK(sylow_subgroup(g, p).order() == p_part(g.order(), p));
    }
  }
}

TEST_CASE("p-group frattini subgroup") {
  Group d8 = builtin_dihedral(4);
  CHECK(pgroup_frattini(d8, 2).order() == 2);
  CHECK(pgroup_frattini(builtin_q8(), 2).order() == 2);
  CHECK(pgroup_frattini(builtin_elem_abelian(3, 2), 3).order() == 1);
  CHECK_THROWS_AS(pgroup_frattini(builtin_sym(3), 2), DomainError);
}

TEST_CASE("invariant profiles on documented examples") {
  auto pe = invariant_profile(builtin_group("paper_example(2,1)"));
  CHECK(pe.d_p.at(2) == 2);
  CHECK(pe.d_p.at(3) == 1);
  CHECK(pe.d_p.at(5) == 1);
  CHECK(pe.d_sigma == 4);
  CHECK(pe.d_max == 2);
  CHECK(pe.p_max == 5);

  auto ea = invariant_profile(builtin_elem_abelian(2, 3));
  CHECK(ea.d_p.at(2) == 3);
  CHECK(ea.p_max == 2);

  auto s4 = invariant_profile(builtin_sym(4));
  CHECK(s4.d_p.at(2) == 2);
  CHECK(s4.d_p.at(3) == 1);
  CHECK(s4.d_sigma == 3);
  CHECK(s4.d_max == 2);
  CHECK(s4.p_max == 3);

  auto triv = invariant_profile(Group::trivial(3));
  CHECK(triv.d_sigma == 0);
  CHECK(triv.d_max == 0);
  CHECK(triv.p_max == 2);
}

TEST_CASE("min generators") {
  CHECK(*min_generators(builtin_sym(5), 1000) == 2);
  CHECK(*min_generators(builtin_elem_abelian(2, 3), 1000) == 3);
  CHECK(*min_generators(Group::trivial(2), 1000) == 0);
  CHECK(*min_generators(builtin_cyclic(30), 1000) == 1);
  CHECK_FALSE(min_generators(builtin_sym(5), 10).has_value());
}

TEST_CASE("burnside basis: d_p equals d(S_p) and log_p of the frattini index") {
  for (const auto& spec : small_corpus()) {
    Group g = builtin_group(spec);
    auto profile = invariant_profile(g);
    for (const auto& [p, sp] : profile.sylow) {
      if (sp.order() > 256) continue;
      CAPTURE(spec);
      CAPTURE(p);
      std::uint64_t index = sp.order() / profile.sylow_frattini.at(p).order();
      CHECK(exact_log(index, p) == profile.d_p.at(p));
      CHECK(*min_generators(sp, 1000) == profile.d_p.at(p));
    }
  }
}

TEST_CASE("structure predicates") {
  auto s4 = structure_predicates(builtin_sym(4));
  CHECK(s4.soluble);
  CHECK_FALSE(s4.nilpotent);
  CHECK_FALSE(s4.simple);
  auto a5 = structure_predicates(builtin_alt(5));
  CHECK(a5.simple);
  CHECK_FALSE(a5.soluble);
  CHECK(structure_predicates(builtin_q8()).nilpotent);
}

TEST_CASE("pi-residual O^pi") {
  Group s4 = builtin_sym(4);
  CHECK(o_upper_pi(s4, {2}).order() == 12);
  CHECK(o_upper_pi(s4, {2, 3}).order() == 1);
  CHECK(o_upper_pi(s4, {3}).order() == 24);
}

TEST_CASE("p-cores and fitting subgroup") {
  Group s4 = builtin_sym(4);
  CHECK(o_p_core(s4, 2).order() == 4);
  CHECK(o_p_core(s4, 3).order() == 1);
  Group q8 = builtin_q8();
  CHECK(same_group(o_p_core(q8, 2), q8));
  CHECK(fitting(s4).order() == 4);
  CHECK(fitting(builtin_sym(3)).order() == 3);
  CHECK(same_group(fitting(q8), q8));

  // Fitting subgroup is nilpotent, normal, and contains Phi(G).
  for (const auto& spec : small_corpus()) {
    Group g = builtin_group(spec);
    Group f = fitting(g);
    CAPTURE(spec);
    CHECK(is_nilpotent(f));
    CHECK(is_normal_in(f, g));
    auto phi = frattini::frattini(g);
    if (phi.has_value()) CHECK(subgroup_le(*phi, f));
  }
}

TEST_CASE("nilpotency cross-check: all sylows normal iff fitting is everything") {
  for (const auto& spec : small_corpus()) {
    Group g = builtin_group(spec);
    bool all_sylow_normal = true;
    for (std::uint64_t p : prime_factors(g.order()))
      all_sylow_normal = all_sylow_normal && is_normal_in(sylow_subgroup(g, p), g);
    CAPTURE(spec);
    CHECK(is_nilpotent(g) == all_sylow_normal);
    CHECK(is_nilpotent(g) == (fitting(g).order() == g.order()));
  }
}

TEST_CASE("frattini subgroup") {
  CHECK(frattini::frattini(builtin_sym(4))->order() == 1);
  CHECK(frattini::frattini(builtin_q8())->order() == 2);
  CHECK(frattini::frattini(builtin_cyclic(4))->order() == 2);
  LatticeBudget tight{5, 2000};
  CHECK_FALSE(frattini::frattini(builtin_sym(4), tight).has_value());
}

TEST_CASE("frattini matches the maximal-subgroup oracle") {
  for (std::string spec : {"sym(4)", "q8", "sl23", "dihedral(6)", "cyclic(12)"}) {
    Group g = builtin_group(spec);
    auto phi = frattini::frattini(g);
    REQUIRE(phi.has_value());
    auto got = phi->elements(1000);
    std::sort(got.begin(), got.end());
    CAPTURE(spec);
    CHECK(got == oracle::frattini_brute(g.elements(1000)));
  }
}

TEST_CASE("composition factors") {
  auto s4 = composition_factors(builtin_sym(4));
  CHECK(std::multiset<std::uint64_t>(s4.factor_orders.begin(), s4.factor_orders.end()) ==
        std::multiset<std::uint64_t>{2, 2, 2, 3});
  CHECK(s4.nonabelian_count == 0);
  auto a5 = composition_factors(builtin_alt(5));
  CHECK(a5.factor_orders == std::vector<std::uint64_t>{60});
  CHECK(a5.nonabelian_count == 1);
  auto c6 = composition_factors(builtin_cyclic(6));
  CHECK(std::multiset<std::uint64_t>(c6.factor_orders.begin(), c6.factor_orders.end()) ==
        std::multiset<std::uint64_t>{2, 3});
}

TEST_CASE("jordan-holder: factor multiset is tie-break independent, product is |G|") {
  for (const auto& spec : small_corpus()) {
    Group g = builtin_group(spec);
    auto a = composition_factors(g);
    auto b = composition_factors(g, /*reverse_tiebreak=*/true);
    CAPTURE(spec);
    CHECK(std::multiset<std::uint64_t>(a.factor_orders.begin(), a.factor_orders.end()) ==
          std::multiset<std::uint64_t>(b.factor_orders.begin(), b.factor_orders.end()));
    std::uint64_t prod = 1;
    for (auto f : a.factor_orders) prod *= f;
    CHECK(prod == g.order());
    // Every non-abelian simple factor order is divisible by 6 or by 10.
    for (auto f : a.factor_orders)
      if (!is_prime(f)) CHECK((f % 6 == 0 || f % 10 == 0));
  }
}

TEST_CASE("simple subnormal subgroups") {
  auto swap = simple_subnormals(builtin_group("swap_product(alt(5))"), {2, 3}, 20000);
  REQUIRE(swap.has_value());
  CHECK(swap->comp_pi.size() == 2);
  for (const auto& c : swap->comp_pi) CHECK(c.order() == 60);
  CHECK(swap->e_pi.order() == 3600);

  auto s4 = simple_subnormals(builtin_sym(4), {2}, 10000);
  REQUIRE(s4.has_value());
  CHECK(s4->comp_pi.empty());

  auto a5 = simple_subnormals(builtin_alt(5), {2, 3, 5}, 10000);
  REQUIRE(a5.has_value());
  CHECK(a5->comp_pi.size() == 1);
  CHECK(a5->comp_pi[0].order() == 60);

  // The pi filter requires divisibility by every member of pi.
  auto a5_7 = simple_subnormals(builtin_alt(5), {2, 7}, 10000);
  REQUIRE(a5_7.has_value());
  CHECK(a5_7->comp_pi.empty());
}
