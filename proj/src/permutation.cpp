#include "commnil/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "commnil/errors.hpp"

namespace commnil {

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0)
    throw InvalidPermutation("degree must be at least 1");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images0(std::vector<Point> images) {
  if (images.empty())
    throw InvalidPermutation("degree must be at least 1");
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size())
      throw InvalidPermutation("image " + std::to_string(x + 1) +
                               " out of range 1.." +
                               std::to_string(images.size()));
    if (seen[x])
      throw InvalidPermutation("duplicate image " + std::to_string(x + 1));
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::span<const std::int64_t> images) {
  std::vector<Point> zero_based;
  zero_based.reserve(images.size());
  for (std::int64_t x : images) {
    if (x < 1 || static_cast<std::size_t>(x) > images.size())
      throw InvalidPermutation("image " + std::to_string(x) +
                               " out of range 1.." +
                               std::to_string(images.size()));
    zero_based.push_back(static_cast<Point>(x - 1));
  }
  return from_images0(std::move(zero_based));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InvalidPermutation("expected '(' in cycle string \"" +
                               std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      while (i < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i >= text.size())
        throw InvalidPermutation("unterminated cycle in \"" + std::string(text) +
                                 "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidPermutation("unexpected character '" +
                                 std::string(1, text[i]) + "' in cycle string");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (value < 1 || value > degree)
        throw InvalidPermutation("point " + std::to_string(value) +
                                 " out of range 1.." + std::to_string(degree));
      if (used[value - 1])
        throw InvalidPermutation("point " + std::to_string(value) +
                                 " repeated in cycle string");
      used[value - 1] = true;
      cycle.push_back(static_cast<Point>(value - 1));
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_space();
  }
  return from_images0(std::move(images));
}

std::vector<std::int64_t> Permutation::images_1based() const {
  std::vector<std::int64_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = static_cast<std::int64_t>(images_[i]) + 1;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                          : static_cast<std::uint64_t>(e);
  Permutation result = identity(degree());
  while (n > 0) {
    if (n & 1U)
      result = result * base;
    base = base * base;
    n >>= 1U;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = lcm_u64(result, len);
  }
  return result;
}

Point Permutation::smallest_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string out;
  for (const auto &cycle : cs) {
    out += '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j)
        out += ' ';
      out += std::to_string(cycle[j] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch(a.degree(), b.degree());
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = b.images_[a.images_[i]];
  return Permutation(std::move(out));
}

Permutation compose(const Permutation &a, const Permutation &b) { return a * b; }

Permutation inverse(const Permutation &a) { return a.inverse(); }

Permutation commutator(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch(a.degree(), b.degree());
  return a.inverse() * b.inverse() * a * b;
}

Permutation commutator(std::span<const Permutation> terms) {
  if (terms.empty())
    throw GroupError("empty commutator");
  Permutation acc = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i)
    acc = commutator(acc, terms[i]);
  return acc;
}

Permutation conjugate(const Permutation &y, const Permutation &x) {
  return x.inverse() * y * x;
}

std::uint64_t element_order(const Permutation &a) { return a.order(); }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

bool is_prime_power(std::uint64_t n) { return prime_divisors(n).size() == 1; }

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  return n >= 1 && p_part(n, p) == n;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

} // namespace commnil
