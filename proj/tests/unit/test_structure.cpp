#include <doctest.h>

#include "commnil/corpus.hpp"
#include "commnil/errors.hpp"
#include "commnil/structure.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace commnil;
using testing_helpers::builtin;
using testing_helpers::cyc;

namespace {

std::vector<std::uint64_t> sizes(const std::vector<oracle::RawSet> &series) {
  std::vector<std::uint64_t> out;
  for (const auto &s : series)
    out.push_back(s.size());
  return out;
}

// Largest normal subgroup satisfying pred, by exhaustive scan.
template <typename Pred> oracle::RawSet largest_normal(const oracle::RawSet &g, Pred pred) {
  oracle::RawSet best{oracle::identity(oracle::degree_of(g))};
  for (const auto &n : oracle::normal_subgroups(g))
    if (n.size() > best.size() && pred(n))
      best = n;
  return best;
}

} // namespace

TEST_CASE("S4 known values") {
  PermGroup s4 = builtin("S4");
  SeriesReport d = derived_series(s4);
  CHECK(d.orders == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(d.reaches_trivial);
  CHECK(d.term(10).is_trivial());
  CHECK(lower_central_series(s4).orders == std::vector<std::uint64_t>{24, 12, 12});
  PermGroup a4(4, {cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
  CHECK(same_group(gamma_infinity(s4), a4));
  PermGroup v4(4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)});
  CHECK(same_group(fitting_subgroup(s4), v4));
  CHECK(p_prime_core(s4, 2).is_trivial());
  CHECK(same_group(p_core(s4, 2), v4));
  CHECK(p_core(s4, 3).is_trivial());
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  SeriesReport f = lower_fitting_series(s4);
  CHECK(f.orders == std::vector<std::uint64_t>{24, 12, 4, 1});
  REQUIRE(f.fitting_height);
  CHECK(*f.fitting_height == 3);
  CHECK_FALSE(is_metanilpotent(s4));
  CHECK(is_metanilpotent(a4));
}

TEST_CASE("A5 is perfect") {
  PermGroup a5 = builtin("A5");
  SeriesReport d = derived_series(a5);
  CHECK(d.orders == std::vector<std::uint64_t>{60, 60});
  CHECK(d.stabilized);
  CHECK_FALSE(d.reaches_trivial);
  CHECK_FALSE(is_soluble(a5));
  CHECK_FALSE(lower_fitting_series(a5).fitting_height);
  CHECK(fitting_subgroup(a5).is_trivial());
}

TEST_CASE("trivial group has Fitting height 0") {
  SeriesReport f = lower_fitting_series(builtin("trivial"));
  REQUIRE(f.fitting_height);
  CHECK(*f.fitting_height == 0);
  CHECK(f.orders == std::vector<std::uint64_t>{1});
}

TEST_CASE("series agree with the brute-force commutator oracles") {
  for (const auto &d : builtin_corpus()) {
    if (d.expected_order && *d.expected_order > 200)
      continue;
    CAPTURE(d.id);
    PermGroup g = load_group(d).group;
    oracle::RawSet all = oracle::elements(g);
    auto ref_derived = oracle::derived_series(all);
    auto ref_lower = oracle::lower_central_series(all);
    SeriesReport mine = derived_series(g);
    CHECK(mine.orders == sizes(ref_derived));
    for (std::size_t i = 0; i < mine.terms.size(); ++i)
      CHECK(oracle::to_set(mine.terms[i]) == ref_derived[i]);
    CHECK(lower_central_series(g).orders == sizes(ref_lower));
    CHECK(oracle::to_set(gamma_infinity(g)) == ref_lower.back());
    CHECK(is_soluble(g) == oracle::is_soluble(all));
    CHECK(is_nilpotent(g) == oracle::is_nilpotent(all));
    CHECK(is_soluble(g) == d.has_tag("soluble"));
    CHECK(is_nilpotent(g) == d.has_tag("nilpotent"));
    CHECK(oracle::to_set(derived_subgroup(g)) == oracle::commutator_subgroup(all, all));
  }
}

TEST_CASE("Fitting subgroup and height against normal-series search") {
  for (const auto &id : testing_helpers::small_soluble_ids()) {
    CAPTURE(id);
    PermGroup g = builtin(id);
    oracle::RawSet all = oracle::elements(g);
    CHECK(oracle::to_set(fitting_subgroup(g)) == oracle::fitting_subgroup(all));
    SeriesReport f = lower_fitting_series(g);
    REQUIRE(f.fitting_height);
    CHECK(*f.fitting_height == oracle::fitting_height(all));
    CHECK(is_metanilpotent(g) == (oracle::fitting_height(all) <= 2));
  }
}

TEST_CASE("Sylow subgroups and cores") {
  for (const char *id : {"S4", "SL(2,3)", "F20", "S3xS3", "C7:C3", "D24", "A5", "S4xC3", "E27"}) {
    CAPTURE(id);
    PermGroup g = builtin(id);
    oracle::RawSet all = oracle::elements(g);
    for (std::uint64_t p : oracle::prime_divisors(g.order())) {
      CAPTURE(p);
      PermGroup s = sylow_subgroup(g, p);
      CHECK(s.order() == oracle::p_part(g.order(), p));
      CHECK(is_subgroup(s, g));
      CHECK(is_p_group(s, p));
      auto is_p = [&](const oracle::RawSet &n) { return oracle::is_p_power(n.size(), p); };
      auto is_pprime = [&](const oracle::RawSet &n) { return n.size() % p != 0; };
      CHECK(oracle::to_set(p_core(g, p)) == largest_normal(all, is_p));
      CHECK(oracle::to_set(p_prime_core(g, p)) == largest_normal(all, is_pprime));

      ElementSet pe = p_elements(g, p);
      std::size_t count = 0;
      for (const auto &x : all)
        if (oracle::is_p_power(oracle::order(x), p))
          ++count;
      CHECK(pe.size() == count);
      CHECK(pe.contains(g.identity()));
    }
    CHECK_THROWS_AS(sylow_subgroup(g, 11), NotPrimeDivisor);
    CHECK(p_core(g, 11).is_trivial());
  }
  CHECK_THROWS_AS(sylow_subgroup(builtin("S4"), 4), NotPrimeDivisor);
  PermGroup q8 = builtin("Q8");
  CHECK(same_group(sylow_subgroup(q8, 2), q8));
}

TEST_CASE("Sylow bases are pairwise permutable and cover G with gamma_infinity") {
  for (const auto &d : select_builtins("soluble")) {
    CAPTURE(d.id);
    PermGroup g = load_group(d).group;
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
      SylowBasisOptions opt;
      opt.seed = seed;
      SylowBasis b = sylow_basis(g, opt);
      CHECK(b.seed == seed);
      CHECK(b.basis.size() == prime_divisors(g.order()).size());
      for (const auto &[p, s] : b.basis)
        CHECK(s.order() == p_part(g.order(), p));
      CHECK_FALSE(find_non_permutable(b.basis));
      for (const auto &x : b.normalizer.elements())
        for (const auto &[p, s] : b.basis)
          CHECK(normalizes(x, s));
      PermGroup gi = gamma_infinity(g);
      CHECK(product_set(b.normalizer.elements(), gi.elements()).size() == g.order());
    }
  }
}

TEST_CASE("Sylow basis search is deterministic") {
  PermGroup g = builtin("S4xC3");
  SylowBasisOptions opt;
  opt.seed = 17;
  SylowBasis a = sylow_basis(g, opt);
  SylowBasis b = sylow_basis(g, opt);
  for (const auto &[p, s] : a.basis)
    CHECK(s.elements() == b.basis.at(p).elements());
}

TEST_CASE("Sylow basis needs a soluble group") {
  CHECK_THROWS_AS(sylow_basis(builtin("A5")), NotSoluble);
}

TEST_CASE("permutability") {
  PermGroup s3(3, {cyc("(1 2)", 3)});
  PermGroup t3(3, {cyc("(1 2 3)", 3)});
  PermGroup u3(3, {cyc("(1 3)", 3)});
  CHECK(are_permutable(s3, t3));
  CHECK_FALSE(are_permutable(s3, u3));
}

TEST_CASE("basis of a normal subgroup") {
  PermGroup s4 = builtin("S4");
  SylowBasis b = sylow_basis(s4);
  PermGroup a4 = gamma_infinity(s4);
  SylowBasis k = intersect_basis(s4, b, a4);
  CHECK(k.basis.at(2).order() == 4);
  CHECK(k.basis.at(3).order() == 3);
  CHECK(is_subgroup(k.normalizer, a4));
  CHECK(k.normalizer.order() == 3);
  CHECK_THROWS_AS(intersect_basis(s4, b, PermGroup(4, {cyc("(1 2)", 4)})), NotNormal);
}
