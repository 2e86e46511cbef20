#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "commnil/perm_group.hpp"
#include "commnil/random.hpp"
#include "commnil/structure.hpp"

namespace commnil {

enum class WordKind { delta, gamma };
enum class ValueMethod { full_closure, tuple_bruteforce };

std::string to_string(WordKind kind);
std::string to_string(ValueMethod method);

/**
 * The values of delta_k (iterated commutator of 2^k entries) or gamma_k
 * (left-normed commutator of k entries) over a group.
 *
 * delta: D_0 = G, D_k = [D_{k-1}, D_{k-1}].
 * gamma: C_1 = G, C_k = [C_{k-1}, G].
 */
struct DeltaValueSet {
  WordKind kind = WordKind::delta;
  std::size_t k = 0;
  std::size_t degree = 1;
  ElementSet values;
  ValueMethod method = ValueMethod::full_closure;
  /// Some level j <= k already equalled level j - 1, so every deeper
  /// level is this same set.
  bool stabilized = false;
  /// Smallest depth from which the value sets are constant.
  std::size_t stable_depth = 0;
};

DeltaValueSet delta_values(const PermGroup &g, std::size_t k, std::uint64_t cap = kDefaultCap);
/// k >= 1.
DeltaValueSet gamma_values(const PermGroup &g, std::size_t k, std::uint64_t cap = kDefaultCap);

/// The subgroup generated by the values.
PermGroup verbal_subgroup(const DeltaValueSet &values);

/// Evaluates delta_k on 2^k arguments.
Permutation delta_word(std::span<const Permutation> args);

struct XcloDepth {
  std::size_t depth = 0;
  /// Members of X that are delta_depth-values of elements of X.
  ElementSet values;
  /// p-power-order members of `values`, per prime dividing |G|.
  std::map<std::uint64_t, ElementSet> p_values;
};

/**
 * A commutator-closed generating set of prime-power-order elements built
 * from the lower Fitting chain K_1 = G > K_2 > ... > K_{h+1} = 1: a single
 * Sylow basis of G is intersected with each K_i, T_i is the resulting
 * basis normalizer in K_i, X_i its prime-power-order elements, and X the
 * union of the X_i. The identity counts as having prime-power order.
 */
struct XcloTrace {
  std::uint64_t seed = 0;
  std::size_t height = 0;
  std::vector<PermGroup> chain;        // K_1 .. K_{h+1}
  std::vector<PermGroup> normalizers;  // T_1 .. T_h
  std::vector<ElementSet> level_sets;  // X_1 .. X_h
  ElementSet x;
  std::vector<XcloDepth> per_depth;    // X^(0), X^(1), ... until trivial

  bool generates = false;
  bool commutator_closed = false;
  bool prime_power_orders = false;
  /// |T_1 T_2 ... T_h| = |G|.
  bool product_covers = false;
  /// T_j normalizes T_k whenever j <= k.
  bool normalizers_nested = false;

  bool invariants_hold() const {
    return generates && commutator_closed && prime_power_orders && product_covers &&
           normalizers_nested;
  }
  std::vector<std::uint64_t> normalizer_orders() const;
  std::vector<std::uint64_t> chain_orders() const;
};

/// Throws NotSoluble, SearchExhausted, OrderCapExceeded; throws GroupError
/// if a trace invariant fails (which would be a bug).
XcloTrace construct_xclo(const PermGroup &g, std::uint64_t cap = kDefaultCap,
                         std::uint64_t seed = 0);

/// <[x1, x2] : x1, x2 in X>, checked against G'. Requires X
/// commutator-closed and generating G.
PermGroup derived_from_closed_set(const PermGroup &g, const ElementSet &x);

/// Random elements of G until they generate it, then closed under
/// commutators.
ElementSet random_commutator_closed_generating_set(const PermGroup &g, Rng &rng,
                                                   std::uint64_t cap = kDefaultCap);

} // namespace commnil
