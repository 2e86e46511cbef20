#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "commnil/permutation.hpp"

namespace commnil {

/**
 * A duplicate-free set of permutations stored in canonical (lexicographic
 * image-array) order, with binary-search membership.
 *
 * The closure flags are caches: they are only ever set by code that has
 * just verified them, and `verify_flags` re-checks them by direct scan.
 */
class ElementSet {
public:
  ElementSet() = default;
  /// Sorts and deduplicates. All members must share a degree.
  explicit ElementSet(std::vector<Permutation> elements);

  static ElementSet from_sorted_unique(std::vector<Permutation> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  std::size_t degree() const noexcept {
    return elements_.empty() ? 0 : elements_.front().degree();
  }
  const std::vector<Permutation> &elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  const Permutation &operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const Permutation &p) const;
  /// Position in canonical order, or size() if absent.
  std::size_t index_of(const Permutation &p) const;

  ElementSet filter(const std::function<bool(const Permutation &)> &keep) const;
  ElementSet set_union(const ElementSet &other) const;
  ElementSet set_intersection(const ElementSet &other) const;
  bool is_subset_of(const ElementSet &other) const;

  bool symmetric = false;
  bool conj_closed = false;
  bool comm_closed = false;

  friend bool operator==(const ElementSet &a, const ElementSet &b) {
    return a.elements_ == b.elements_;
  }

private:
  std::vector<Permutation> elements_;
};

bool is_symmetric(const ElementSet &x);
bool is_commutator_closed(const ElementSet &x);
/// Closed under conjugation by every element of `by` (generators suffice).
bool is_conjugation_closed(const ElementSet &x, std::span<const Permutation> by);

/// Set product {a b : a in A, b in B}.
ElementSet product_set(const ElementSet &a, const ElementSet &b);

/// Smallest commutator-closed set containing `x`.
ElementSet commutator_closure(const ElementSet &x);

/// Re-checks every flag that is set; false if any flag is wrong.
bool verify_flags(const ElementSet &x, std::span<const Permutation> ambient_gens);

} // namespace commnil
