#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "frattini/builtins.hpp"
#include "frattini/group.hpp"
#include "frattini/numeric.hpp"

#include "support/oracles.hpp"

using namespace frattini;

TEST_CASE("permutation validation and basic algebra") {
  CHECK_THROWS_AS(Perm({0, 0, 2}), ValidationError);
  CHECK_THROWS_AS(Perm({1, 2, 3}), ValidationError);  // 3 out of range for degree 3
  CHECK(Perm(std::vector<Point>{1, 0, 2}).degree() == 3);

  Perm a = Perm::cycle(4, {0, 1});
  Perm b = Perm::cycle(4, {0, 1, 2, 3});
  // (a*b)(x) = b(a(x)): apply left factor first.
  CHECK((a * b)(0) == b(a(0)));
  CHECK((a * b)(2) == b(a(2)));
  CHECK((a * a).is_identity());
  CHECK(b.order() == 4);
  CHECK(a.inverse() == a);
  CHECK((b * b.inverse()).is_identity());
  CHECK(b.conjugated_by(a) == a.inverse() * b * a);
  CHECK(Perm(5).is_identity());
  CHECK(Perm(5).smallest_moved() == 5);
  CHECK(a.smallest_moved() == 0);
}

TEST_CASE("cycle notation round trip") {
  Perm b = Perm::cycle(4, {0, 1, 2, 3});
  CHECK(b.to_cycle_string() == "(1 2 3 4)");
  CHECK(Perm(3).to_cycle_string() == "()");
}

TEST_CASE("chain order on documented examples") {
  Group s4(4, {Perm::cycle(4, {0, 1}), Perm::cycle(4, {0, 1, 2, 3})});
  CHECK(s4.order() == 24);

  Group triv(3, {Perm(3)});
  CHECK(triv.order() == 1);

  // SL(2,4) on the projective line has order 60; the oracle enumerates all
  // determinant-1 matrices over the 4-element field directly.
  CHECK(oracle::sl2_gf4_matrices().size() == 60);
  CHECK(builtin_sl2(4).order() == 60);
}

TEST_CASE("orders of the whole builtin corpus against exhaustive closure") {
  for (std::string spec :
       {"sym(3)", "sym(4)", "sym(5)", "alt(4)", "alt(5)", "cyclic(12)", "dihedral(6)", "q8",
        "sl23", "gl2_3", "sl2(4)", "sl2(5)", "elem_abelian(3,2)", "paper_example(2,1)",
        "direct_product(sym(3),cyclic(4))"}) {
    Group g = builtin_group(spec);
    CAPTURE(spec);
    CHECK(g.order() == oracle::closure(g.generators()).size());
  }
}

TEST_CASE("membership") {
  Group klein(4, {Perm::cycle(4, {0, 1}) * Perm::cycle(4, {2, 3}),
                  Perm::cycle(4, {0, 2}) * Perm::cycle(4, {1, 3})});
  CHECK(klein.order() == 4);
  CHECK(klein.contains(Perm::cycle(4, {0, 2}) * Perm::cycle(4, {1, 3})));
  CHECK_FALSE(builtin_alt(4).contains(Perm::cycle(4, {0, 1})));
  CHECK(builtin_sym(4).contains(Perm(4)));
  CHECK_THROWS_AS(builtin_sym(4).contains(Perm(5)), DomainError);
}

TEST_CASE("membership is closed under products (sampled pairs)") {
  Group g = builtin_group("sl2(5)");
  auto elems = g.elements(100);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const Perm& a = elems[pick(rng)];
    const Perm& b = elems[pick(rng)];
    CHECK(g.contains(a * b));
  }
}

TEST_CASE("orbits") {
  auto o1 = orbit({Perm::cycle(3, {0, 1, 2})}, 0, 3);
  CHECK(o1.points.size() == 3);
  CHECK(o1.points[0] == 0);
  auto o2 = orbit({Perm::cycle(3, {0, 1})}, 2, 3);
  CHECK(o2.points == std::vector<Point>{2});
  CHECK_THROWS_AS(orbit({Perm(3)}, 7, 3), DomainError);

  // Witnesses map the seed to each orbit point.
  Group g = builtin_sym(5);
  auto o3 = orbit(g.generators(), 1, 5);
  for (std::size_t i = 0; i < o3.points.size(); ++i) CHECK(o3.witnesses[i](1) == o3.points[i]);
}

TEST_CASE("orbit sizes divide group order") {
  for (std::string spec : {"sym(4)", "alt(5)", "dihedral(7)", "sl2(7)", "q8"}) {
    Group g = builtin_group(spec);
    for (Point s = 0; s < g.degree(); ++s) {
      auto o = orbit(g.generators(), s, g.degree());
      CAPTURE(spec);
      CHECK(g.order() % o.points.size() == 0);
    }
  }
}

TEST_CASE("element enumeration") {
  Group s3 = builtin_sym(3);
  auto e = s3.elements(10);
  CHECK(e.size() == 6);
  CHECK(std::set<Perm>(e.begin(), e.end()).size() == 6);

  CHECK(Group::trivial(4).elements(1).size() == 1);

  // Refusal, never truncation.
  CHECK_THROWS_AS(builtin_sym(5).elements(100), BudgetError);

  // Deterministic order across calls.
  CHECK(builtin_sym(4).elements(100) == builtin_sym(4).elements(100));
}

TEST_CASE("q8 regular representation matches its multiplication table") {
  Group q8 = builtin_q8();
  CHECK(q8.order() == 8);
  std::multiset<std::uint64_t> got;
  for (const Perm& x : q8.elements(8)) got.insert(x.order());
  auto oracle_orders = oracle::table_orders(oracle::q8_table());
  std::multiset<std::uint64_t> want(oracle_orders.begin(), oracle_orders.end());
  CHECK(got == want);
  CHECK(want == std::multiset<std::uint64_t>{1, 2, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("chain invariants") {
  for (std::string spec : {"sym(4)", "alt(5)", "q8", "paper_example(2,1)"}) {
    Group g = builtin_group(spec);
    // Sifting any strong generator yields identity (= membership).
    for (const Perm& s : g.chain().strong_generators()) CHECK(g.contains(s));
    // Order = product of fundamental orbit lengths.
    std::uint64_t prod = 1;
    for (const auto& l : g.chain().levels()) prod *= l.orbit.size();
    CHECK(prod == g.order());
    // Level-i members fix all earlier base points.
    const auto& levels = g.chain().levels();
    for (std::size_t i = 1; i < levels.size(); ++i)
      for (const Perm& x : levels[i].gens)
        for (std::size_t j = 0; j < i; ++j) CHECK(x(levels[j].base) == levels[j].base);
  }
}

TEST_CASE("group construction errors") {
  CHECK_THROWS_AS(Group(3, {}), ValidationError);
  CHECK_THROWS_AS(Group(3, {Perm(4)}), ValidationError);
  CHECK_THROWS_AS(Group(0, {Perm(0)}), ValidationError);
  CHECK_THROWS_AS(subgroup_of(builtin_alt(4), {Perm::cycle(4, {0, 1})}), DomainError);
}
