#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commnil/perm_group.hpp"

namespace commnil {

enum class SeriesKind { derived, lower_central, lower_fitting };

std::string to_string(SeriesKind kind);

/**
 * A descending series G = terms[0] >= terms[1] >= ... . The list stops at
 * the first term that is trivial or equal to its predecessor, so a perfect
 * group gives (|G|, |G|) and S_4's derived series gives (24, 12, 4, 1).
 */
struct SeriesReport {
  SeriesKind kind = SeriesKind::derived;
  std::vector<std::uint64_t> orders;
  std::vector<PermGroup> terms;
  /// The computation reached a fixed point.
  bool stabilized = false;
  bool reaches_trivial = false;
  /// Lower Fitting series only: number of nontrivial terms when the series
  /// reaches 1 (the Fitting height; 0 for the trivial group).
  std::optional<std::size_t> fitting_height;

  const PermGroup &last() const { return terms.back(); }
  /// Term at depth k, repeating the final term past the end.
  const PermGroup &term(std::size_t k) const {
    return k < terms.size() ? terms[k] : terms.back();
  }
};

PermGroup derived_subgroup(const PermGroup &g);
SeriesReport derived_series(const PermGroup &g);

/// [H, G] for H normal in G.
PermGroup commutator_with(const PermGroup &h, const PermGroup &g);
SeriesReport lower_central_series(const PermGroup &g);
PermGroup gamma_infinity(const PermGroup &g);
/// K_1 = G, K_{i+1} = gamma_infinity(K_i).
SeriesReport lower_fitting_series(const PermGroup &g);

bool is_nilpotent(const PermGroup &g);
bool is_soluble(const PermGroup &g);
bool is_metanilpotent(const PermGroup &g);
bool is_p_group(const PermGroup &g, std::uint64_t p);

/// Elements of p-power order (the identity included).
ElementSet p_elements(const PermGroup &g, std::uint64_t p, std::uint64_t cap = kDefaultCap);

/// Throws NotPrimeDivisor unless p is a prime dividing |G|.
PermGroup sylow_subgroup(const PermGroup &g, std::uint64_t p,
                         std::uint64_t cap = kDefaultCap);

/// O_p(G): the intersection of the conjugates of a Sylow p-subgroup. The
/// trivial group when p does not divide |G|.
PermGroup p_core(const PermGroup &g, std::uint64_t p, std::uint64_t cap = kDefaultCap);
/// O_{p'}(G): the join of the normal closures of p'-classes that are
/// themselves p'-groups.
PermGroup p_prime_core(const PermGroup &g, std::uint64_t p,
                       std::uint64_t cap = kDefaultCap);
PermGroup fitting_subgroup(const PermGroup &g, std::uint64_t cap = kDefaultCap);

/// A Sylow basis (one Sylow subgroup per prime, pairwise permutable) and
/// its basis normalizer.
struct SylowBasis {
  std::map<std::uint64_t, PermGroup> basis;
  PermGroup normalizer = PermGroup::trivial(1);
  std::uint64_t seed = 0;
};

/// PQ is a subgroup, checked as sets: PQ = QP and |PQ| = |P||Q|/|P n Q|.
bool are_permutable(const PermGroup &p, const PermGroup &q, std::uint64_t cap = kDefaultCap);
/// First pair of primes whose subgroups do not permute.
std::optional<std::pair<std::uint64_t, std::uint64_t>>
find_non_permutable(const std::map<std::uint64_t, PermGroup> &basis,
                    std::uint64_t cap = kDefaultCap);

/// Intersection of N_G(P) over the basis members.
PermGroup basis_normalizer(const PermGroup &g, const std::map<std::uint64_t, PermGroup> &basis,
                           std::uint64_t cap = kDefaultCap);

struct SylowBasisOptions {
  std::uint64_t seed = 0;
  /// Upper bound on conjugates examined per prime.
  std::size_t max_attempts = 100000;
  std::uint64_t cap = kDefaultCap;
};

/**
 * Seeded search for a Sylow basis: fix the Sylow subgroup of the smallest
 * prime, then for each further prime scan conjugates of a Sylow subgroup in
 * a seed-shuffled order until one permutes with everything chosen so far.
 * Any pairwise permutable prefix extends to a full basis, so the scan never
 * needs to backtrack. Checks G = T * gamma_infinity(G) before returning.
 */
SylowBasis sylow_basis(const PermGroup &g, const SylowBasisOptions &options = {});

/// The basis {P n K} of a normal subgroup K and its normalizer inside K.
SylowBasis intersect_basis(const PermGroup &g, const SylowBasis &b, const PermGroup &k,
                           std::uint64_t cap = kDefaultCap);

} // namespace commnil
