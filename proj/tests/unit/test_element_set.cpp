#include <doctest.h>

#include "commnil/element_set.hpp"
#include "commnil/errors.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace commnil;
using testing_helpers::builtin;
using testing_helpers::cyc;

TEST_CASE("construction sorts and deduplicates") {
  ElementSet s({cyc("(1 2)", 3), Permutation::identity(3), cyc("(1 2)", 3)});
  CHECK(s.size() == 2);
  CHECK(s[0].is_identity());
  CHECK(s.contains(cyc("(1 2)", 3)));
  CHECK_FALSE(s.contains(cyc("(1 3)", 3)));
  CHECK(s.index_of(cyc("(1 3)", 3)) == s.size());
  CHECK_THROWS_AS(ElementSet({cyc("(1 2)", 3), cyc("(1 2)", 4)}), DegreeMismatch);
}

TEST_CASE("set algebra") {
  ElementSet a({cyc("(1 2)", 3), cyc("(2 3)", 3)});
  ElementSet b({cyc("(2 3)", 3), cyc("(1 3)", 3)});
  CHECK(a.set_union(b).size() == 3);
  CHECK(a.set_intersection(b) == ElementSet({cyc("(2 3)", 3)}));
  CHECK(a.set_intersection(b).is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.filter([](const Permutation &p) { return p[0] == 0; }).size() == 1);
}

TEST_CASE("closure predicates") {
  PermGroup s3 = builtin("S3");
  const ElementSet &all = s3.elements();
  CHECK(all.symmetric);
  CHECK(all.conj_closed);
  CHECK(all.comm_closed);
  CHECK(verify_flags(all, s3.generators()));

  ElementSet transpositions = all.filter([](const Permutation &p) { return p.order() == 2; });
  CHECK(is_symmetric(transpositions));
  CHECK(is_conjugation_closed(transpositions, s3.generators()));
  CHECK_FALSE(is_commutator_closed(transpositions));

  ElementSet closed = commutator_closure(transpositions);
  CHECK(is_commutator_closed(closed));
  CHECK(transpositions.is_subset_of(closed));

  ElementSet lone({cyc("(1 2 3)", 3)});
  CHECK_FALSE(is_symmetric(lone));
  lone.symmetric = true;
  CHECK_FALSE(verify_flags(lone, s3.generators()));
}

TEST_CASE("product set") {
  ElementSet a({Permutation::identity(3), cyc("(1 2)", 3)});
  ElementSet b({Permutation::identity(3), cyc("(1 2 3)", 3), cyc("(1 3 2)", 3)});
  CHECK(product_set(a, b) == builtin("S3").elements());
}

TEST_CASE("commutator closure agrees with brute force") {
  PermGroup s4 = builtin("S4");
  ElementSet seed({cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)});
  ElementSet closed = commutator_closure(seed);
  oracle::RawSet ref = oracle::to_set(seed);
  while (true) {
    oracle::RawSet next = ref;
    for (const auto &a : ref)
      for (const auto &b : ref)
        next.insert(oracle::comm(a, b));
    if (next == ref)
      break;
    ref = next;
  }
  CHECK(oracle::to_set(closed) == ref);
}
