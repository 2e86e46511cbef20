#include <doctest.h>

#include "commnil/errors.hpp"
#include "commnil/permutation.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace commnil;
using testing_helpers::cyc;
using testing_helpers::random_permutation;

TEST_CASE("images are 1-based at the boundary") {
  std::vector<std::int64_t> images{2, 1, 3};
  Permutation t = Permutation::from_images(images);
  CHECK(t.to_string() == "(1 2)");
  CHECK(t.images_1based() == images);
  CHECK(t[0] == 1);
  CHECK(t.degree() == 3);
}

TEST_CASE("non-bijective images are rejected") {
  std::vector<std::int64_t> dup{1, 1, 3};
  CHECK_THROWS_AS(Permutation::from_images(dup), InvalidPermutation);
  std::vector<std::int64_t> range{1, 4, 2};
  CHECK_THROWS_AS(Permutation::from_images(range), InvalidPermutation);
  std::vector<std::int64_t> zero{0, 1};
  CHECK_THROWS_AS(Permutation::from_images(zero), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::from_images(std::vector<std::int64_t>{}), InvalidPermutation);
}

TEST_CASE("cycle notation") {
  Permutation p = cyc("(1 2)(3 4 5)", 6);
  CHECK(p.images_1based() == std::vector<std::int64_t>{2, 1, 4, 5, 3, 6});
  CHECK(p.to_string() == "(1 2)(3 4 5)");
  CHECK(cyc("()", 4).is_identity());
  CHECK(cyc("()", 4).to_string() == "()");
  CHECK(cyc("(1,3)", 3) == cyc("(1 3)", 3));
  CHECK_THROWS_AS(cyc("(1 7)", 6), InvalidPermutation);
  CHECK_THROWS_AS(cyc("(1 2", 6), InvalidPermutation);
  CHECK_THROWS_AS(cyc("(1 2 1)", 6), InvalidPermutation);
  CHECK_THROWS_AS(cyc("1 2", 6), InvalidPermutation);
}

TEST_CASE("products read left to right") {
  // 1 -> 2 -> 3, 2 -> 1, 3 -> 2
  CHECK(cyc("(1 2)", 3) * cyc("(2 3)", 3) == cyc("(1 3 2)", 3));
  CHECK_THROWS_AS(cyc("(1 2)", 3) * cyc("(1 2)", 4), DegreeMismatch);
}

TEST_CASE("commutator and conjugation conventions") {
  Permutation a = cyc("(1 2 3)", 4);
  Permutation b = cyc("(3 4)", 4);
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
  CHECK(conjugate(a, b) == b.inverse() * a * b);
  CHECK(conjugate(a, b) == a * commutator(a, b));
  std::vector<Permutation> terms{a, b, a};
  CHECK(commutator(terms) == commutator(commutator(a, b), a));
}

TEST_CASE("order and powers agree with repeated multiplication") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng.below(12);
    Permutation p = random_permutation(rng, n);
    std::uint64_t o = oracle::order(oracle::raw(p));
    CHECK(p.order() == o);
    CHECK(element_order(p) == o);
    CHECK(p.pow(static_cast<std::int64_t>(o)).is_identity());
    CHECK(p.pow(-1) == p.inverse());
    CHECK(p.pow(3) == p * p * p);
    CHECK(p.pow(-2) == p.inverse() * p.inverse());
    CHECK((p * p.inverse()).is_identity());
    CHECK(Permutation::from_cycles(p.to_string(), n) == p);
  }
}

TEST_CASE("products agree with the raw oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation a = random_permutation(rng, 9);
    Permutation b = random_permutation(rng, 9);
    CHECK(oracle::raw(a * b) == oracle::mul(oracle::raw(a), oracle::raw(b)));
    CHECK(oracle::raw(commutator(a, b)) == oracle::comm(oracle::raw(a), oracle::raw(b)));
    CHECK(oracle::raw(conjugate(a, b)) == oracle::conj(oracle::raw(a), oracle::raw(b)));
    // Hall-Witt style sanity: [a,b]^-1 = [b,a]
    CHECK(commutator(a, b).inverse() == commutator(b, a));
  }
}

TEST_CASE("smallest moved point and cycles") {
  Permutation p = cyc("(2 5)(3 4 6)", 7);
  CHECK(p.smallest_moved_point() == 1);
  CHECK(Permutation::identity(5).smallest_moved_point() == 5);
  auto cs = p.cycles();
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == std::vector<Point>{1, 4});
  CHECK(cs[1] == std::vector<Point>{2, 3, 5});
}

TEST_CASE("canonical order puts the identity first") {
  std::vector<Permutation> v{cyc("(1 2)", 3), Permutation::identity(3), cyc("(2 3)", 3)};
  std::sort(v.begin(), v.end());
  CHECK(v.front().is_identity());
}

TEST_CASE("number theory helpers") {
  CHECK(gcd_u64(12, 18) == 6);
  CHECK(lcm_u64(4, 6) == 12);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime_power(1));
  CHECK(is_prime_power(27));
  CHECK_FALSE(is_prime_power(12));
  CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_divisors(1).empty());
  CHECK(p_part(360, 2) == 8);
  CHECK(p_part(360, 7) == 1);
  CHECK(is_power_of(1, 3));
  CHECK(is_power_of(81, 3));
  CHECK_FALSE(is_power_of(18, 3));
  for (std::uint64_t n = 1; n < 500; ++n)
    CHECK(prime_divisors(n) == oracle::prime_divisors(n));
}

TEST_CASE("hash is consistent with equality") {
  PermutationHash h;
  CHECK(h(cyc("(1 2 3)", 4)) == h(cyc("(2 3 1)", 4)));
}
