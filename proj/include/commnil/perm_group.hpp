#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "commnil/element_set.hpp"
#include "commnil/permutation.hpp"

namespace commnil {

/// Default cap on full element enumeration. Chain-based order and
/// membership are not capped.
inline constexpr std::uint64_t kDefaultCap = 200000;

/**
 * Stabilizer chain over the full base 0, 1, ..., n-1 (levels whose basic
 * orbit is trivial are skipped), built with Knuth's variant of the
 * Schreier-Sims algorithm. Because the base is scanned in increasing order
 * the first nontrivial base point is the smallest moved point of the group,
 * and each later one is the smallest point moved by the current stabilizer.
 */
class StabilizerChain {
public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return order_; }
  bool contains(const Permutation &g) const;
  /// Adds g as a generator unless it is already a member; true if added.
  bool add(const Permutation &g);

  /// Base points with nontrivial basic orbits, in chain order.
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;

  /// Every group element, in chain order (not canonical order).
  std::vector<Permutation> all_elements() const;

private:
  struct Level {
    std::vector<Permutation> generators;
    std::vector<std::int32_t> slot; // point -> index into transversal, -1 if absent
    std::vector<Permutation> transversal;
    std::vector<Point> orbit;
  };

  bool sifts_from(std::size_t level, Permutation g) const;
  void add_generator(std::size_t level, const Permutation &g);
  void extend(std::size_t level, const Permutation &g);
  Level &level_at(std::size_t level);
  void recount();

  std::size_t degree_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/**
 * A permutation group given by generators. The stabilizer chain and the
 * canonical element list are computed on first use and shared between
 * copies; a group is immutable once constructed, so concurrent readers are
 * safe.
 */
class PermGroup {
public:
  /// An empty generator list gives the trivial group.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation> &generators() const noexcept { return generators_; }

  const StabilizerChain &chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool contains(const Permutation &g) const;
  bool is_trivial() const { return order() == 1; }

  /// All elements in canonical order. Throws OrderCapExceeded when the
  /// order exceeds `cap`.
  const ElementSet &elements(std::uint64_t cap = kDefaultCap) const;

  Permutation identity() const { return Permutation::identity(degree_); }

private:
  struct Cache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

std::uint64_t group_order(const PermGroup &g);
bool contains(const PermGroup &g, const Permutation &a);
const ElementSet &enumerate_elements(const PermGroup &g, std::uint64_t cap = kDefaultCap);

PermGroup subgroup_generated(std::size_t degree, std::span<const Permutation> gens);
PermGroup subgroup_generated(std::size_t degree, const ElementSet &gens);

/// The subgroup whose elements are exactly `elements`, which must be
/// closed under products. Picks a short generating set greedily in
/// canonical order.
PermGroup group_from_elements(std::size_t degree, const ElementSet &elements);

bool is_subgroup(const PermGroup &h, const PermGroup &g);
bool same_group(const PermGroup &h, const PermGroup &k);
bool is_normal(const PermGroup &g, const PermGroup &n);
bool normalizes(const Permutation &x, const PermGroup &h);

PermGroup conjugate_subgroup(const PermGroup &h, const Permutation &x);
PermGroup join(const PermGroup &h, const PermGroup &k);
PermGroup intersection(const PermGroup &h, const PermGroup &k,
                       std::uint64_t cap = kDefaultCap);

/// Classes ordered by their canonical-first element (so the identity class
/// comes first); each class is in canonical order.
std::vector<ElementSet> conjugacy_classes(const PermGroup &g,
                                          std::uint64_t cap = kDefaultCap);
/// Conjugacy class of a within g.
ElementSet conjugacy_class(const PermGroup &g, const Permutation &a);
/// Union of the g-conjugacy classes of the members of s.
ElementSet conjugation_closure(const PermGroup &g, const ElementSet &s);

PermGroup normal_closure(const PermGroup &g, std::span<const Permutation> s);
PermGroup normal_closure(const PermGroup &g, const ElementSet &s);
PermGroup centralizer(const PermGroup &g, const Permutation &a,
                      std::uint64_t cap = kDefaultCap);
PermGroup normalizer(const PermGroup &g, const PermGroup &h,
                     std::uint64_t cap = kDefaultCap);

/// An element x of g with h^x = k, if one exists.
std::optional<Permutation> conjugating_element(const PermGroup &g, const PermGroup &h,
                                               const PermGroup &k,
                                               std::uint64_t cap = kDefaultCap);

/// Every normal subgroup of g, sorted by order and then by element list.
std::vector<PermGroup> normal_subgroups(const PermGroup &g,
                                        std::uint64_t cap = kDefaultCap);

/**
 * G/N realised as the action of G on the right cosets Ng. Coset 0 is N
 * itself; the remaining cosets are numbered in canonical order of their
 * smallest element.
 */
class Quotient {
public:
  const PermGroup &group() const noexcept { return group_; }
  std::size_t index() const noexcept { return representatives_.size(); }
  const PermGroup &kernel() const noexcept { return kernel_; }

  /// Image of an element of G in the coset action.
  Permutation image(const Permutation &g) const;
  ElementSet image(const ElementSet &s) const;
  PermGroup image(const PermGroup &h) const;
  /// Index of the coset containing g.
  std::size_t coset_of(const Permutation &g) const;

private:
  friend Quotient quotient(const PermGroup &, const PermGroup &, std::uint64_t);

  Quotient(PermGroup group, PermGroup kernel) : group_(std::move(group)), kernel_(std::move(kernel)) {}

  PermGroup group_;
  PermGroup kernel_;
  ElementSet ambient_;
  std::vector<std::uint32_t> coset_id_; // aligned with ambient_
  std::vector<Permutation> representatives_;
};

/// Throws NotNormal unless n is normal in g, and OrderCapExceeded when
/// |g| or the index exceeds cap.
Quotient quotient(const PermGroup &g, const PermGroup &n, std::uint64_t cap = kDefaultCap);

} // namespace commnil
