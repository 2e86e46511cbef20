#include <doctest.h>

#include "commnil/corpus.hpp"
#include "commnil/errors.hpp"
#include "commnil/words.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace commnil;
using testing_helpers::builtin;
using testing_helpers::cyc;

TEST_CASE("delta values equal the tuple brute force on small groups") {
  for (const auto &d : builtin_corpus()) {
    if (!d.expected_order || *d.expected_order > 24)
      continue;
    CAPTURE(d.id);
    PermGroup g = load_group(d).group;
    oracle::RawSet all = oracle::elements(g);
    for (std::size_t k = 0; k <= 2; ++k) {
      CAPTURE(k);
      DeltaValueSet v = delta_values(g, k);
      CHECK(oracle::to_set(v.values) == oracle::delta_values_bruteforce(all, k));
      CHECK(v.method == ValueMethod::full_closure);
      CHECK(v.k == k);
    }
  }
}

TEST_CASE("gamma values equal the tuple brute force") {
  for (const char *id : {"S4", "D16", "Q8", "SL(2,3)", "A5", "E27"}) {
    CAPTURE(id);
    PermGroup g = builtin(id);
    oracle::RawSet all = oracle::elements(g);
    for (std::size_t k = 1; k <= 4; ++k)
      CHECK(oracle::to_set(gamma_values(g, k).values) == oracle::gamma_values_bruteforce(all, k));
  }
  CHECK_THROWS_AS(gamma_values(builtin("S3"), 0), GroupError);
}

TEST_CASE("sampled word values lie in the value set") {
  Rng rng(2024);
  for (const auto &d : builtin_corpus()) {
    CAPTURE(d.id);
    PermGroup g = load_group(d).group;
    for (std::size_t k = 1; k <= 3; ++k) {
      DeltaValueSet v = delta_values(g, k);
      std::vector<Permutation> args(std::size_t{1} << k);
      for (int trial = 0; trial < 100; ++trial) {
        for (auto &a : args)
          a = testing_helpers::random_element(rng, g);
        CHECK(v.values.contains(delta_word(args)));
      }
    }
  }
}

TEST_CASE("value sets are symmetric, normal and commutator-closed") {
  for (const char *id : {"S4", "SL(2,3)", "S4xC3", "A5", "C3wrC2"}) {
    CAPTURE(id);
    PermGroup g = builtin(id);
    for (std::size_t k = 0; k <= 3; ++k) {
      DeltaValueSet v = delta_values(g, k);
      CHECK(v.values.symmetric);
      CHECK(v.values.conj_closed);
      CHECK(v.values.comm_closed);
      CHECK(verify_flags(v.values, g.generators()));
      CHECK(v.values.contains(g.identity()));
    }
    DeltaValueSet c = gamma_values(g, 2);
    CHECK(verify_flags(c.values, g.generators()));
  }
}

TEST_CASE("verbal subgroups are the derived terms") {
  for (const char *id : {"S4", "SL(2,3)", "S4xC3", "A5", "C7:C3", "F20"}) {
    CAPTURE(id);
    PermGroup g = builtin(id);
    oracle::RawSet all = oracle::elements(g);
    for (std::size_t k = 0; k <= 3; ++k)
      CHECK(oracle::to_set(verbal_subgroup(delta_values(g, k))) == oracle::derived_term(all, k));
  }
}

TEST_CASE("stabilization") {
  DeltaValueSet a5 = delta_values(builtin("A5"), 3);
  CHECK(a5.stabilized);
  CHECK(a5.stable_depth == 0);
  CHECK(a5.values.size() == 60);

  DeltaValueSet s4 = delta_values(builtin("S4"), 1);
  CHECK_FALSE(s4.stabilized);
  CHECK(s4.values.size() == 12);
  CHECK(s4.stable_depth == 3);
  DeltaValueSet s4deep = delta_values(builtin("S4"), 5);
  CHECK(s4deep.stabilized);
  CHECK(s4deep.values.size() == 1);
}

TEST_CASE("delta words") {
  Permutation a = cyc("(1 2 3)", 4);
  Permutation b = cyc("(3 4)", 4);
  Permutation c = cyc("(1 4)", 4);
  Permutation d = cyc("(2 4 3)", 4);
  std::vector<Permutation> one{a};
  CHECK(delta_word(one) == a);
  std::vector<Permutation> four{a, b, c, d};
  CHECK(delta_word(four) == commutator(commutator(a, b), commutator(c, d)));
  std::vector<Permutation> three{a, b, c};
  CHECK_THROWS_AS(delta_word(three), GroupError);
}

TEST_CASE("xclo on S4") {
  XcloTrace t = construct_xclo(builtin("S4"));
  CHECK(t.height == 3);
  CHECK(t.normalizer_orders() == std::vector<std::uint64_t>{2, 3, 4});
  CHECK(t.chain_orders() == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(t.invariants_hold());
  CHECK(t.level_sets.size() == 3);
}

TEST_CASE("xclo invariants hold on every soluble builtin, checked independently") {
  for (const auto &d : select_builtins("soluble")) {
    CAPTURE(d.id);
    PermGroup g = load_group(d).group;
    for (std::uint64_t seed : {0ULL, 5ULL}) {
      XcloTrace t = construct_xclo(g, kDefaultCap, seed);
      CHECK(t.invariants_hold());
      CHECK(t.seed == seed);
      oracle::RawSet x = oracle::to_set(t.x);
      for (const auto &a : x) {
        CHECK(oracle::prime_divisors(oracle::order(a)).size() <= 1);
        for (const auto &b : x)
          CHECK(x.count(oracle::comm(a, b)));
      }
      CHECK(oracle::closure(g.degree(), x).size() == g.order());
      ElementSet product = ElementSet({g.identity()});
      for (const auto &tn : t.normalizers)
        product = product_set(product, tn.elements());
      CHECK(product.size() == g.order());
    }
  }
  CHECK_THROWS_AS(construct_xclo(builtin("A5")), NotSoluble);
}

TEST_CASE("commutators of a closed generating set give the derived subgroup") {
  Rng rng(1);
  for (const auto &d : select_builtins("soluble")) {
    CAPTURE(d.id);
    PermGroup g = load_group(d).group;
    oracle::RawSet derived = oracle::commutator_subgroup(oracle::elements(g), oracle::elements(g));
    XcloTrace t = construct_xclo(g);
    CHECK(oracle::to_set(derived_from_closed_set(g, t.x)) == derived);
    for (int s = 0; s < 5; ++s) {
      ElementSet x = random_commutator_closed_generating_set(g, rng);
      CHECK(is_commutator_closed(x));
      CHECK(subgroup_generated(g.degree(), x).order() == g.order());
      CHECK(oracle::to_set(derived_from_closed_set(g, x)) == derived);
    }
  }
}

TEST_CASE("closed-set preconditions") {
  PermGroup s3 = builtin("S3");
  ElementSet transpositions({cyc("(1 2)", 3), cyc("(1 3)", 3)});
  CHECK_THROWS_AS(derived_from_closed_set(s3, transpositions), NotCommutatorClosed);
  ElementSet small({Permutation::identity(3), cyc("(1 2)", 3)});
  CHECK_THROWS_AS(derived_from_closed_set(s3, small), NotGenerating);
}

TEST_CASE("random closed sets are reproducible") {
  PermGroup g = builtin("S4xC3");
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 5; ++i)
    CHECK(random_commutator_closed_generating_set(g, a) == random_commutator_closed_generating_set(g, b));
}
