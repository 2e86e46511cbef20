#include <doctest.h>

#include "commnil/corpus.hpp"
#include "commnil/errors.hpp"
#include "commnil/perm_group.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace commnil;
using testing_helpers::builtin;
using testing_helpers::cyc;
using testing_helpers::random_permutation;

TEST_CASE("every builtin has the order found by closure") {
  for (const auto &d : builtin_corpus()) {
    CAPTURE(d.id);
    PermGroup g = load_group(d).group;
    oracle::RawSet ref = oracle::elements(g);
    CHECK(g.order() == ref.size());
    REQUIRE(d.expected_order);
    CHECK(*d.expected_order == ref.size());
    CHECK(oracle::to_set(g) == ref);
  }
}

TEST_CASE("elements come in canonical order with the identity first") {
  PermGroup g = builtin("S4xC3");
  const ElementSet &all = g.elements();
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all[0].is_identity());
  CHECK(&enumerate_elements(g) == &all);
}

TEST_CASE("enumeration respects the cap") {
  PermGroup a6 = builtin("A6");
  CHECK_THROWS_AS(a6.elements(100), OrderCapExceeded);
  try {
    a6.elements(100);
  } catch (const OrderCapExceeded &e) {
    CHECK(e.order() == 360);
    CHECK(e.cap() == 100);
  }
  CHECK(a6.order() == 360);
  CHECK(a6.elements(360).size() == 360);
}

TEST_CASE("membership agrees with the closure") {
  Rng rng(3);
  for (const char *id : {"S4", "A5", "F20", "C3wrC2", "PSL(2,7)"}) {
    PermGroup g = builtin(id);
    oracle::RawSet ref = oracle::elements(g);
    for (int i = 0; i < 300; ++i) {
      Permutation p = random_permutation(rng, g.degree());
      CHECK(g.contains(p) == (ref.count(p.images()) > 0));
      CHECK(contains(g, p) == g.contains(p));
    }
    CHECK_FALSE(g.contains(Permutation::identity(g.degree() + 1)));
  }
}

TEST_CASE("stabilizer chain base starts at the smallest moved point") {
  PermGroup g(6, {cyc("(3 4 5)", 6), cyc("(4 6)", 6)});
  auto base = g.chain().base();
  REQUIRE_FALSE(base.empty());
  CHECK(base.front() == 2);
  std::uint64_t product = 1;
  for (auto s : g.chain().orbit_sizes())
    product *= s;
  CHECK(product == g.order());
  CHECK(g.chain().all_elements().size() == g.order());
}

TEST_CASE("trivial groups") {
  PermGroup t = PermGroup::trivial(4);
  CHECK(t.order() == 1);
  CHECK(t.is_trivial());
  CHECK(t.elements().size() == 1);
  CHECK(PermGroup(3, {Permutation::identity(3)}).is_trivial());
  CHECK(group_order(builtin("trivial")) == 1);
}

TEST_CASE("subgroup generation drops redundant generators") {
  PermGroup s4 = builtin("S4");
  PermGroup g = subgroup_generated(4, s4.elements());
  CHECK(g.order() == 24);
  CHECK(g.generators().size() <= 3);
  CHECK_THROWS_AS(subgroup_generated(5, s4.elements()), DegreeMismatch);
}

TEST_CASE("group_from_elements recovers a subgroup") {
  PermGroup s4 = builtin("S4");
  ElementSet even = s4.elements().filter([](const Permutation &p) {
    std::size_t transpositions = 0;
    for (const auto &c : p.cycles())
      transpositions += c.size() - 1;
    return transpositions % 2 == 0;
  });
  PermGroup h = group_from_elements(4, even);
  CHECK(h.order() == 12);
  CHECK(h.elements() == even);
}

TEST_CASE("subgroup relations") {
  PermGroup s4 = builtin("S4");
  PermGroup a4(4, {cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
  PermGroup v4(4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)});
  PermGroup c2(4, {cyc("(1 2)", 4)});
  CHECK(is_subgroup(a4, s4));
  CHECK(is_subgroup(v4, a4));
  CHECK_FALSE(is_subgroup(c2, a4));
  CHECK(is_normal(s4, a4));
  CHECK(is_normal(s4, v4));
  CHECK_FALSE(is_normal(s4, c2));
  CHECK(same_group(join(v4, PermGroup(4, {cyc("(1 2 3)", 4)})), a4));
  CHECK(intersection(a4, PermGroup(4, {cyc("(1 2)", 4), cyc("(3 4)", 4)})).order() == 2);
  CHECK(normalizes(cyc("(1 2)", 4), v4));
  PermGroup moved = conjugate_subgroup(c2, cyc("(2 3)", 4));
  CHECK(moved.contains(cyc("(1 3)", 4)));
  auto x = conjugating_element(s4, c2, moved);
  REQUIRE(x);
  CHECK(same_group(conjugate_subgroup(c2, *x), moved));
  CHECK_FALSE(conjugating_element(s4, c2, PermGroup(4, {cyc("(1 2)(3 4)", 4)})));
}

TEST_CASE("conjugacy classes match the brute-force partition") {
  for (const char *id : {"S4", "Q8", "D10", "A5", "SL(2,3)", "C7:C3"}) {
    CAPTURE(id);
    PermGroup g = builtin(id);
    auto classes = conjugacy_classes(g);
    auto ref = oracle::conjugacy_classes(oracle::elements(g));
    std::set<oracle::RawSet> mine;
    for (const auto &c : classes)
      mine.insert(oracle::to_set(c));
    CHECK(mine == std::set<oracle::RawSet>(ref.begin(), ref.end()));
    CHECK(classes.front().size() == 1);
    CHECK(classes.front()[0].is_identity());
    for (std::size_t i = 1; i < classes.size(); ++i)
      CHECK(classes[i - 1][0] < classes[i][0]);
    for (const auto &c : classes)
      CHECK(conjugacy_class(g, c[c.size() - 1]) == c);
  }
}

TEST_CASE("normal subgroups match the exhaustive scan") {
  for (const char *id : {"S4", "D8", "Q8", "A4", "D12", "F20", "SL(2,3)", "S3xS3", "C3wrC2", "A5"}) {
    CAPTURE(id);
    PermGroup g = builtin(id);
    auto mine = normal_subgroups(g);
    auto ref = oracle::normal_subgroups(oracle::elements(g));
    std::set<oracle::RawSet> a, b(ref.begin(), ref.end());
    for (const auto &n : mine) {
      CHECK(is_normal(g, n));
      a.insert(oracle::to_set(n));
    }
    CHECK(a == b);
    for (std::size_t i = 1; i < mine.size(); ++i)
      CHECK(mine[i - 1].order() <= mine[i].order());
  }
}

TEST_CASE("normal closure, centralizer and normalizer against scans") {
  PermGroup s4 = builtin("S4");
  oracle::RawSet all = oracle::elements(s4);
  Permutation t = cyc("(1 2)", 4);
  CHECK(normal_closure(s4, std::vector<Permutation>{t}).order() == 24);
  CHECK(normal_closure(s4, ElementSet({cyc("(1 2)(3 4)", 4)})).order() == 4);

  PermGroup c = centralizer(s4, t);
  oracle::RawSet ref;
  for (const auto &x : all)
    if (oracle::mul(x, t.images()) == oracle::mul(t.images(), x))
      ref.insert(x);
  CHECK(oracle::to_set(c) == ref);

  PermGroup h(4, {cyc("(1 2 3)", 4)});
  PermGroup n = normalizer(s4, h);
  CHECK(n.order() == 6);
  for (const auto &x : n.elements())
    CHECK(normalizes(x, h));
}

TEST_CASE("quotients") {
  PermGroup s4 = builtin("S4");
  PermGroup v4(4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)});
  Quotient q = quotient(s4, v4);
  CHECK(q.index() == 6);
  CHECK(q.group().order() == 6);
  CHECK(q.kernel().order() == 4);
  CHECK(q.coset_of(cyc("(1 2)(3 4)", 4)) == 0);
  CHECK(q.image(cyc("(1 2)(3 4)", 4)).is_identity());
  // The coset action is a homomorphism.
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Permutation a = testing_helpers::random_element(rng, s4);
    Permutation b = testing_helpers::random_element(rng, s4);
    CHECK(q.image(a * b) == q.image(a) * q.image(b));
  }
  CHECK(q.image(PermGroup(4, {cyc("(1 2 3)", 4)})).order() == 3);
  CHECK(q.image(s4.elements()).size() == 6);
  CHECK_THROWS_AS(quotient(s4, PermGroup(4, {cyc("(1 2)", 4)})), NotNormal);
  CHECK_THROWS_AS(q.coset_of(Permutation::identity(5)), GroupError);
}

TEST_CASE("quotient of A5 by itself and by the trivial group") {
  PermGroup a5 = builtin("A5");
  CHECK(quotient(a5, a5).group().order() == 1);
  CHECK(quotient(a5, PermGroup::trivial(5)).group().order() == 60);
}
