#pragma once

#include <cstdint>
#include <optional>

#include "commnil/words.hpp"

namespace commnil {

struct CriterionWitness {
  Permutation a;
  Permutation b;
  std::uint64_t order_a = 0;
  std::uint64_t order_b = 0;
  std::uint64_t order_ab = 0;
};

/**
 * Verdict of the coprime-order product condition on word values:
 * |ab| = |a||b| for all values a, b with gcd(|a|, |b|) = 1.
 *
 * With `classes_reduced`, a runs over G-class representatives inside the
 * value set and b over all values; this is sound because value sets are
 * conjugation-closed and |a^g b^g| = |ab|. Without it every unordered pair
 * a < b is scanned. The witness is the first violation in scan order.
 */
struct CriterionReport {
  std::size_t k = 0;
  WordKind kind = WordKind::delta;
  bool holds = true;
  std::optional<CriterionWitness> witness;
  std::uint64_t pairs_checked = 0;
  bool classes_reduced = false;
  std::size_t value_count = 0;
};

struct CriterionOptions {
  bool reduce_by_conjugacy = true;
  std::uint64_t cap = kDefaultCap;
};

CriterionReport coprime_product_criterion(const PermGroup &g, const DeltaValueSet &values,
                                          const CriterionOptions &options = {});
CriterionReport coprime_product_criterion(const PermGroup &g, std::size_t k, WordKind kind,
                                          const CriterionOptions &options = {});

/// Re-derives a witness from the raw permutations: coprime orders and
/// |ab| != |a||b|. Membership in the value set is the caller's to check.
bool witness_replays(const CriterionWitness &w);

struct TheoremCheck {
  CriterionReport report;
  /// Order of the verbal subgroup (G^(k) or gamma_k(G)).
  std::uint64_t verbal_order = 0;
  bool nilpotent = false;
  /// criterion holds <=> verbal subgroup nilpotent.
  bool consistent = false;
};

/// delta-kind check for soluble G; throws NotSoluble otherwise.
TheoremCheck theorem_check(const PermGroup &g, std::size_t k, const CriterionOptions &options = {});
/// gamma-kind check, valid for every finite group; k >= 1.
TheoremCheck gamma_theorem_check(const PermGroup &g, std::size_t k,
                                 const CriterionOptions &options = {});

struct ProbeReport {
  CriterionReport report;
  bool soluble = false;
  std::uint64_t verbal_order = 0;
  bool verbal_nilpotent = false;
  /// Insoluble group whose delta_k-values satisfy the condition.
  bool is_candidate_counterexample = false;
};

/// Reports the delta-kind verdict on any group. Never throws NotSoluble.
ProbeReport probe_insoluble(const PermGroup &g, std::size_t k, const CriterionOptions &options = {});

} // namespace commnil
