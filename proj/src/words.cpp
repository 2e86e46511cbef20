#include "commnil/words.hpp"

#include <algorithm>

#include "commnil/errors.hpp"

namespace commnil {

std::string to_string(WordKind kind) { return kind == WordKind::delta ? "delta" : "gamma"; }

std::string to_string(ValueMethod method) {
  return method == ValueMethod::full_closure ? "full_closure" : "tuple_bruteforce";
}

namespace {

// {[a, b] : a in lhs, b in rhs}
ElementSet commutator_set(const ElementSet &lhs, const ElementSet &rhs) {
  std::vector<Permutation> lhs_inv;
  std::vector<Permutation> rhs_inv;
  lhs_inv.reserve(lhs.size());
  rhs_inv.reserve(rhs.size());
  for (const auto &a : lhs)
    lhs_inv.push_back(a.inverse());
  for (const auto &b : rhs)
    rhs_inv.push_back(b.inverse());

  std::vector<Permutation> out;
  out.reserve(lhs.size() * rhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < rhs.size(); ++j)
      out.push_back(lhs_inv[i] * rhs_inv[j] * lhs[i] * rhs[j]);
  return ElementSet(std::move(out));
}

// Both value sequences descend, so stepping on from level `depth` reaches
// a fixed point. Returns the first level equal to its successor.
template <typename Step>
std::size_t settle(const ElementSet &level, ElementSet succ, std::size_t depth, Step step) {
  if (succ == level)
    return depth;
  ElementSet cur = std::move(succ);
  for (++depth;; ++depth) {
    ElementSet nxt = step(cur);
    if (nxt == cur)
      return depth;
    cur = std::move(nxt);
  }
}

void mark_flags(DeltaValueSet &d, const PermGroup &g, const ElementSet &next) {
  d.values.symmetric = is_symmetric(d.values);
  d.values.conj_closed = is_conjugation_closed(d.values, g.generators());
  d.values.comm_closed = d.kind == WordKind::delta ? next.is_subset_of(d.values)
                                                   : is_commutator_closed(d.values);
}

} // namespace

DeltaValueSet delta_values(const PermGroup &g, std::size_t k, std::uint64_t cap) {
  DeltaValueSet d;
  d.kind = WordKind::delta;
  d.k = k;
  d.degree = g.degree();
  ElementSet current = g.elements(cap);
  std::size_t depth = 0;
  for (; depth < k; ++depth) {
    ElementSet next = commutator_set(current, current);
    if (next == current) {
      d.stabilized = true;
      break;
    }
    current = std::move(next);
  }
  d.values = std::move(current);
  d.values.symmetric = d.values.conj_closed = d.values.comm_closed = false;
  ElementSet next = commutator_set(d.values, d.values);
  d.stable_depth = d.stabilized ? depth : settle(d.values, next, k, [](const ElementSet &x) {
    return commutator_set(x, x);
  });
  mark_flags(d, g, next);
  return d;
}

DeltaValueSet gamma_values(const PermGroup &g, std::size_t k, std::uint64_t cap) {
  if (k == 0)
    throw GroupError("gamma_k is defined for k >= 1");
  DeltaValueSet d;
  d.kind = WordKind::gamma;
  d.k = k;
  d.degree = g.degree();
  const ElementSet &all = g.elements(cap);
  ElementSet current = all;
  std::size_t depth = 1;
  for (; depth < k; ++depth) {
    ElementSet next = commutator_set(current, all);
    if (next == current) {
      d.stabilized = true;
      break;
    }
    current = std::move(next);
  }
  d.values = std::move(current);
  d.values.symmetric = d.values.conj_closed = d.values.comm_closed = false;
  ElementSet next = commutator_set(d.values, all);
  d.stable_depth = d.stabilized ? depth : settle(d.values, next, k, [&](const ElementSet &x) {
    return commutator_set(x, all);
  });
  mark_flags(d, g, next);
  return d;
}

PermGroup verbal_subgroup(const DeltaValueSet &values) {
  return subgroup_generated(values.degree, values.values);
}

Permutation delta_word(std::span<const Permutation> args) {
  if (args.empty() || (args.size() & (args.size() - 1)) != 0)
    throw GroupError("delta word needs a power-of-two number of arguments");
  if (args.size() == 1)
    return args.front();
  std::size_t half = args.size() / 2;
  return commutator(delta_word(args.first(half)), delta_word(args.subspan(half)));
}

std::vector<std::uint64_t> XcloTrace::normalizer_orders() const {
  std::vector<std::uint64_t> out;
  for (const auto &t : normalizers)
    out.push_back(t.order());
  return out;
}

std::vector<std::uint64_t> XcloTrace::chain_orders() const {
  std::vector<std::uint64_t> out;
  for (const auto &k : chain)
    out.push_back(k.order());
  return out;
}

XcloTrace construct_xclo(const PermGroup &g, std::uint64_t cap, std::uint64_t seed) {
  SeriesReport fitting = lower_fitting_series(g);
  if (!fitting.reaches_trivial)
    throw NotSoluble();

  XcloTrace trace;
  trace.seed = seed;
  trace.height = *fitting.fitting_height;
  trace.chain = fitting.terms;

  SylowBasisOptions options;
  options.seed = seed;
  options.cap = cap;
  SylowBasis basis = sylow_basis(g, options);

  auto prime_power = [](const Permutation &x) {
    std::uint64_t o = x.order();
    return o == 1 || is_prime_power(o);
  };

  std::vector<Permutation> x_members{g.identity()};
  for (std::size_t i = 0; i < trace.height; ++i) {
    SylowBasis local = intersect_basis(g, basis, trace.chain[i], cap);
    trace.normalizers.push_back(local.normalizer);
    ElementSet xi = local.normalizer.elements(cap).filter(prime_power);
    x_members.insert(x_members.end(), xi.begin(), xi.end());
    trace.level_sets.push_back(std::move(xi));
  }
  trace.x = ElementSet(std::move(x_members));

  trace.commutator_closed = is_commutator_closed(trace.x);
  trace.x.comm_closed = trace.commutator_closed;
  trace.x.symmetric = is_symmetric(trace.x);
  trace.prime_power_orders = std::all_of(trace.x.begin(), trace.x.end(), prime_power);
  trace.generates = subgroup_generated(g.degree(), trace.x).order() == g.order();

  ElementSet product({g.identity()});
  for (const auto &t : trace.normalizers)
    product = product_set(product, t.elements(cap));
  trace.product_covers = product.size() == g.order();

  trace.normalizers_nested = true;
  for (std::size_t j = 0; j < trace.normalizers.size(); ++j)
    for (std::size_t k = j; k < trace.normalizers.size(); ++k)
      for (const auto &y : trace.normalizers[j].generators())
        if (!normalizes(y, trace.normalizers[k]))
          trace.normalizers_nested = false;

  std::vector<std::uint64_t> primes = prime_divisors(g.order());
  ElementSet level = trace.x;
  for (std::size_t depth = 0;; ++depth) {
    XcloDepth entry;
    entry.depth = depth;
    entry.values = level;
    for (std::uint64_t p : primes)
      entry.p_values.emplace(
          p, level.filter([p](const Permutation &x) { return is_power_of(x.order(), p); }));
    trace.per_depth.push_back(std::move(entry));
    if (level.size() <= 1)
      break;
    ElementSet next = commutator_set(level, level);
    if (next == level)
      break;
    level = std::move(next);
  }

  if (!trace.invariants_hold())
    throw GroupError("commutator-closed generating set failed its invariants");
  return trace;
}

PermGroup derived_from_closed_set(const PermGroup &g, const ElementSet &x) {
  if (!is_commutator_closed(x))
    throw NotCommutatorClosed();
  PermGroup generated = subgroup_generated(g.degree(), x);
  if (!same_group(generated, g))
    throw NotGenerating();
  PermGroup h = subgroup_generated(g.degree(), commutator_set(x, x));
  if (!same_group(h, derived_subgroup(g)))
    throw GroupError("commutators of a commutator-closed generating set miss G'");
  return h;
}

ElementSet random_commutator_closed_generating_set(const PermGroup &g, Rng &rng,
                                                   std::uint64_t cap) {
  const ElementSet &all = g.elements(cap);
  std::vector<Permutation> picks;
  PermGroup generated = PermGroup::trivial(g.degree());
  while (generated.order() != g.order()) {
    picks.push_back(all[static_cast<std::size_t>(rng.below(all.size()))]);
    generated = subgroup_generated(g.degree(), picks);
  }
  return commutator_closure(ElementSet(std::move(picks)));
}

} // namespace commnil
