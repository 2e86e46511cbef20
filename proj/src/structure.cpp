#include "commnil/structure.hpp"

#include <algorithm>
#include <set>

#include "commnil/errors.hpp"
#include "commnil/random.hpp"

namespace commnil {

std::string to_string(SeriesKind kind) {
  switch (kind) {
  case SeriesKind::derived:
    return "derived";
  case SeriesKind::lower_central:
    return "lower_central";
  case SeriesKind::lower_fitting:
    return "lower_fitting";
  }
  return "unknown";
}

namespace {

template <typename Step>
SeriesReport descend(SeriesKind kind, const PermGroup &g, Step step) {
  SeriesReport r;
  r.kind = kind;
  r.terms.push_back(g);
  r.orders.push_back(g.order());
  while (r.orders.back() != 1) {
    PermGroup next = step(r.terms.back());
    std::uint64_t order = next.order();
    r.terms.push_back(std::move(next));
    r.orders.push_back(order);
    // Terms are descending, so equal orders mean equal subgroups.
    if (order == r.orders[r.orders.size() - 2])
      break;
  }
  r.stabilized = true;
  r.reaches_trivial = r.orders.back() == 1;
  return r;
}

} // namespace

PermGroup derived_subgroup(const PermGroup &g) {
  std::vector<Permutation> comms;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

SeriesReport derived_series(const PermGroup &g) {
  return descend(SeriesKind::derived, g, [](const PermGroup &h) { return derived_subgroup(h); });
}

PermGroup commutator_with(const PermGroup &h, const PermGroup &g) {
  std::vector<Permutation> comms;
  for (const auto &a : h.generators())
    for (const auto &b : g.generators())
      comms.push_back(commutator(a, b));
  return normal_closure(g, comms);
}

SeriesReport lower_central_series(const PermGroup &g) {
  return descend(SeriesKind::lower_central, g,
                 [&g](const PermGroup &h) { return commutator_with(h, g); });
}

PermGroup gamma_infinity(const PermGroup &g) { return lower_central_series(g).last(); }

SeriesReport lower_fitting_series(const PermGroup &g) {
  SeriesReport r = descend(SeriesKind::lower_fitting, g,
                           [](const PermGroup &h) { return gamma_infinity(h); });
  if (r.reaches_trivial)
    r.fitting_height = r.terms.size() - 1;
  return r;
}

bool is_nilpotent(const PermGroup &g) { return lower_central_series(g).reaches_trivial; }

bool is_soluble(const PermGroup &g) { return derived_series(g).reaches_trivial; }

bool is_metanilpotent(const PermGroup &g) { return is_nilpotent(gamma_infinity(g)); }

bool is_p_group(const PermGroup &g, std::uint64_t p) { return is_power_of(g.order(), p); }

ElementSet p_elements(const PermGroup &g, std::uint64_t p, std::uint64_t cap) {
  return g.elements(cap).filter(
      [p](const Permutation &x) { return is_power_of(x.order(), p); });
}

PermGroup sylow_subgroup(const PermGroup &g, std::uint64_t p, std::uint64_t cap) {
  std::uint64_t n = g.order();
  if (!is_prime(p) || n % p != 0)
    throw NotPrimeDivisor(p, n);
  std::uint64_t target = p_part(n, p);
  if (target == n)
    return g;

  const ElementSet &all = g.elements(cap);
  PermGroup sylow = PermGroup::trivial(g.degree());
  // Each pass adjoins a p-element of N_G(P) outside P; it normalises P and
  // has p-power order, so <P, y> = P<y> is again a p-group. Sylow theory
  // guarantees such an element while |P| is below the p-part.
  while (sylow.order() < target) {
    std::optional<Permutation> pick;
    for (const auto &y : all) {
      if (!is_power_of(y.order(), p) || sylow.contains(y) || !normalizes(y, sylow))
        continue;
      pick = y;
      break;
    }
    if (!pick)
      throw GroupError("Sylow search stalled; group data is inconsistent");
    std::vector<Permutation> gens = sylow.generators();
    gens.push_back(*pick);
    sylow = subgroup_generated(g.degree(), gens);
  }
  return sylow;
}

PermGroup p_core(const PermGroup &g, std::uint64_t p, std::uint64_t cap) {
  if (g.order() % p != 0)
    return PermGroup::trivial(g.degree());
  PermGroup sylow = sylow_subgroup(g, p, cap);
  // x lies in every conjugate of P iff its whole class lies in P.
  ElementSet core = sylow.elements(cap).filter([&](const Permutation &x) {
    ElementSet cls = conjugacy_class(g, x);
    return std::all_of(cls.begin(), cls.end(),
                       [&](const Permutation &y) { return sylow.contains(y); });
  });
  return group_from_elements(g.degree(), core);
}

PermGroup p_prime_core(const PermGroup &g, std::uint64_t p, std::uint64_t cap) {
  PermGroup result = PermGroup::trivial(g.degree());
  for (const auto &cls : conjugacy_classes(g, cap)) {
    if (cls[0].order() % p == 0 || cls[0].is_identity())
      continue;
    PermGroup closure = normal_closure(g, cls);
    if (closure.order() % p != 0)
      result = join(result, closure);
  }
  return result;
}

PermGroup fitting_subgroup(const PermGroup &g, std::uint64_t cap) {
  PermGroup result = PermGroup::trivial(g.degree());
  for (std::uint64_t p : prime_divisors(g.order()))
    result = join(result, p_core(g, p, cap));
  return result;
}

bool are_permutable(const PermGroup &p, const PermGroup &q, std::uint64_t cap) {
  const ElementSet &ep = p.elements(cap);
  const ElementSet &eq = q.elements(cap);
  ElementSet pq = product_set(ep, eq);
  std::uint64_t common = ep.set_intersection(eq).size();
  if (pq.size() * common != ep.size() * eq.size())
    return false;
  return pq == product_set(eq, ep);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>>
find_non_permutable(const std::map<std::uint64_t, PermGroup> &basis, std::uint64_t cap) {
  for (auto i = basis.begin(); i != basis.end(); ++i)
    for (auto j = std::next(i); j != basis.end(); ++j)
      if (!are_permutable(i->second, j->second, cap))
        return std::make_pair(i->first, j->first);
  return std::nullopt;
}

PermGroup basis_normalizer(const PermGroup &g, const std::map<std::uint64_t, PermGroup> &basis,
                           std::uint64_t cap) {
  ElementSet t = g.elements(cap).filter([&](const Permutation &x) {
    return std::all_of(basis.begin(), basis.end(),
                       [&](const auto &entry) { return normalizes(x, entry.second); });
  });
  return group_from_elements(g.degree(), t);
}

SylowBasis sylow_basis(const PermGroup &g, const SylowBasisOptions &options) {
  if (!is_soluble(g))
    throw NotSoluble();
  const ElementSet &all = g.elements(options.cap);
  Rng rng(options.seed);

  SylowBasis out;
  out.seed = options.seed;
  for (std::uint64_t p : prime_divisors(g.order())) {
    PermGroup base = sylow_subgroup(g, p, options.cap);
    if (out.basis.empty()) {
      out.basis.emplace(p, base);
      continue;
    }
    std::set<std::vector<Permutation>> tried;
    std::size_t attempts = 0;
    std::optional<PermGroup> chosen;
    for (std::size_t idx : rng.permuted_indices(all.size())) {
      PermGroup candidate = conjugate_subgroup(base, all[idx]);
      if (!tried.insert(candidate.elements(options.cap).elements()).second)
        continue;
      if (++attempts > options.max_attempts)
        break;
      bool ok = std::all_of(out.basis.begin(), out.basis.end(), [&](const auto &entry) {
        return are_permutable(entry.second, candidate, options.cap);
      });
      if (ok) {
        chosen = candidate;
        break;
      }
    }
    if (!chosen)
      throw SearchExhausted("no Sylow " + std::to_string(p) +
                            "-subgroup permutes with the chosen basis prefix");
    out.basis.emplace(p, *chosen);
  }

  out.normalizer = basis_normalizer(g, out.basis, options.cap);

  PermGroup residual = gamma_infinity(g);
  ElementSet cover = product_set(out.normalizer.elements(options.cap),
                                 residual.elements(options.cap));
  if (cover.size() != g.order())
    throw GroupError("basis normalizer and nilpotent residual do not cover the group");
  return out;
}

SylowBasis intersect_basis(const PermGroup &g, const SylowBasis &b, const PermGroup &k,
                           std::uint64_t cap) {
  if (!is_normal(g, k))
    throw NotNormal("subgroup to intersect with is not normal");
  SylowBasis out;
  out.seed = b.seed;
  std::uint64_t n = k.order();
  for (const auto &[p, sylow] : b.basis) {
    if (n % p != 0)
      continue;
    PermGroup part = intersection(sylow, k, cap);
    if (part.order() != p_part(n, p))
      throw PermutabilityViolated("P n K is not a Sylow " + std::to_string(p) +
                                  "-subgroup of K");
    out.basis.emplace(p, part);
  }
  if (auto bad = find_non_permutable(out.basis, cap))
    throw PermutabilityViolated("intersected Sylow subgroups for primes " +
                                std::to_string(bad->first) + " and " +
                                std::to_string(bad->second) + " do not permute");
  out.normalizer = basis_normalizer(k, out.basis, cap);
  return out;
}

} // namespace commnil
