#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commnil/criterion.hpp"
#include "commnil/words.hpp"

namespace commnil {

enum class LemmaId { intersection, from, foca, meta, bbb };
enum class Outcome { holds, fails, hypothesis_not_satisfied };

std::string to_string(LemmaId id);
std::string to_string(Outcome outcome);

/**
 * Counter-evidence that can be re-checked from raw permutations alone.
 * `groups` hold generator lists, `sets` hold explicit element lists and
 * `elements` hold the offending elements; the keys used depend on the
 * lemma (see replay_witness).
 */
struct LemmaWitness {
  std::string description;
  std::map<std::string, Permutation> elements;
  std::map<std::string, std::vector<Permutation>> groups;
  std::map<std::string, std::vector<Permutation>> sets;
};

struct LemmaReport {
  LemmaId lemma = LemmaId::intersection;
  std::string group_id;
  std::map<std::string, std::string> parameters;
  Outcome outcome = Outcome::holds;
  std::optional<LemmaWitness> witness;
  /// Sub-checks beyond the main statement, by name.
  std::map<std::string, bool> details;
  std::uint64_t instances_checked = 0;
  std::string note;
  double elapsed_ms = 0.0;

  bool holds() const { return outcome == Outcome::holds; }
};

/// Re-verifies a failing report's witness from scratch. True when the
/// witness really demonstrates a failure of the stated equality.
bool replay_witness(const LemmaReport &report);

// Raw equalities, without hypothesis checks. The check_* functions below
// validate their inputs and then call these.
LemmaReport evaluate_intersection(const PermGroup &n, const PermGroup &p, const ElementSet &x,
                                  std::uint64_t cap = kDefaultCap);
LemmaReport evaluate_from(const PermGroup &l, const PermGroup &n, const PermGroup &p,
                          const ElementSet &x, std::uint64_t cap = kDefaultCap);

/// XN n PN = (X n P)N for N normal, X a normal set of p-elements.
LemmaReport check_intersection_lemma(const PermGroup &g, const PermGroup &n, std::uint64_t p,
                                     const ElementSet &x, std::uint64_t cap = kDefaultCap);

/// P n L = <P n X, P n N> given the same statement modulo N.
LemmaReport check_from_lemma(const PermGroup &g, const PermGroup &n, const PermGroup &l,
                             std::uint64_t p, const ElementSet &x,
                             std::uint64_t cap = kDefaultCap);

/// <delta_i-values in P> = P n G^(i). With a trace, also checks
/// G^(i) = <X^(i)> and P n G^(i) = <P n (X_p^(i))^G>.
LemmaReport check_foca(const PermGroup &g, std::size_t i, std::uint64_t p,
                       std::uint64_t cap = kDefaultCap, const XcloTrace *trace = nullptr);

/// Every p-element centralizing O_{p'}(F(G)) lies in F(G).
LemmaReport check_meta(const PermGroup &g, std::uint64_t p, std::uint64_t cap = kDefaultCap);

/// Subgroups probed by check_bbb: cyclic subgroups, Sylow subgroups of
/// normal subgroups, and O_{p'}(F(G)) for each prime p.
std::vector<PermGroup> bbb_subgroup_family(const PermGroup &g, std::uint64_t cap = kDefaultCap);

/// For delta_k-values x and x-invariant N of coprime order, [N, x] = 1,
/// replaying the proof's steps on each qualifying (y, x).
LemmaReport check_bbb(const PermGroup &g, std::size_t k, std::uint64_t cap = kDefaultCap);

/// The default X inputs: p-power-order delta_i-values (already a normal
/// subset, since value sets are conjugation-closed).
ElementSet p_power_delta_values(const PermGroup &g, std::size_t i, std::uint64_t p,
                                std::uint64_t cap = kDefaultCap);

/// Runs the intersection and from checks over every normal N (and normal
/// N <= L), prime p and depth i <= max_depth, with X from
/// p_power_delta_values. Returns one aggregated report per lemma.
std::vector<LemmaReport> check_normal_subset_lemmas(const PermGroup &g, std::size_t max_depth,
                                                    std::uint64_t cap = kDefaultCap);

} // namespace commnil
