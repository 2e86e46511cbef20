#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace commnil {

/// Seeded source of indices. Only the raw mt19937_64 stream is used (its
/// output is fixed by the standard), so results agree across standard
/// libraries, unlike std::uniform_int_distribution or std::shuffle.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Value in [0, n). Modulo bias is irrelevant at the sizes used here.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

  template <typename T> void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
  }

  /// 0..n-1 in shuffled order.
  std::vector<std::size_t> permuted_indices(std::size_t n) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i)
      out[i] = i;
    shuffle(out);
    return out;
  }

private:
  std::mt19937_64 engine_;
};

} // namespace commnil
