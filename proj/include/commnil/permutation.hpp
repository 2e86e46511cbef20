#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace commnil {

using Point = std::uint32_t;

/**
 * A bijection of {0, ..., n-1}. Externally (I/O, cycle strings) points are
 * 1-based; `from_images` and `images_1based` do the translation.
 *
 * Products are read left to right: `(a * b)(x) = b(a(x))`. Conjugation is
 * `y^x = x^-1 y x` and the commutator is `[a, b] = a^-1 b^-1 a b`, so that
 * `y^x = y [y, x]` holds identically.
 */
class Permutation {
public:
  Permutation() : images_{0} {}

  static Permutation identity(std::size_t degree);

  /// Validating constructor from 0-based images.
  static Permutation from_images0(std::vector<Point> images);
  /// Validating constructor from 1-based images.
  static Permutation from_images(std::span<const std::int64_t> images);
  /// Cycle notation such as "(1 2)(3 4 5)" or "()" at the given degree.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  const std::vector<Point> &images() const noexcept { return images_; }
  std::vector<std::int64_t> images_1based() const;

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  std::uint64_t order() const;
  /// Smallest point moved, or degree() for the identity.
  Point smallest_moved_point() const noexcept;
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation with 1-based points; the identity prints as "()".
  std::string to_string() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend std::strong_ordering operator<=>(const Permutation &a,
                                          const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

Permutation compose(const Permutation &a, const Permutation &b);
Permutation inverse(const Permutation &a);
Permutation commutator(const Permutation &a, const Permutation &b);
/// Left-normed commutator [a, b, c, ...].
Permutation commutator(std::span<const Permutation> terms);
/// `y^x = x^-1 y x`.
Permutation conjugate(const Permutation &y, const Permutation &x);
std::uint64_t element_order(const Permutation &a);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);
/// p^e with e >= 1; false for 1.
bool is_prime_power(std::uint64_t n);
/// Prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
/// True if n is a power of p (including p^0 = 1).
bool is_power_of(std::uint64_t n, std::uint64_t p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace commnil
