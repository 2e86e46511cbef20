#include "commnil/perm_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "commnil/errors.hpp"

namespace commnil {

// ---------------------------------------------------------------------------
// StabilizerChain
//
// Level l acts on point l and holds elements fixing 0..l-1. transversal[s]
// maps l to the point p with slot[p] == s. A residue that fixes point l is
// passed on to level l + 1.

StabilizerChain::StabilizerChain(std::size_t degree,
                                 std::span<const Permutation> generators)
    : degree_(degree) {
  for (const auto &g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatch(degree, g.degree());
    if (!g.is_identity())
      add_generator(0, g);
  }
  recount();
}

bool StabilizerChain::add(const Permutation &g) {
  if (g.degree() != degree_)
    throw DegreeMismatch(degree_, g.degree());
  if (contains(g))
    return false;
  add_generator(0, g);
  recount();
  return true;
}

void StabilizerChain::recount() {
  order_ = 1;
  for (const auto &level : levels_) {
    if (__builtin_mul_overflow(order_, static_cast<std::uint64_t>(level.orbit.size()),
                               &order_))
      throw GroupError("group order does not fit in 64 bits");
  }
}

StabilizerChain::Level &StabilizerChain::level_at(std::size_t level) {
  if (levels_.size() <= level)
    levels_.resize(level + 1);
  Level &l = levels_[level];
  if (l.slot.empty()) {
    l.slot.assign(degree_, -1);
    l.slot[level] = 0;
    l.transversal.push_back(Permutation::identity(degree_));
    l.orbit.push_back(static_cast<Point>(level));
  }
  return l;
}

bool StabilizerChain::sifts_from(std::size_t level, Permutation g) const {
  for (std::size_t l = level; l < degree_; ++l) {
    Point image = g[static_cast<Point>(l)];
    if (image == l)
      continue;
    if (l >= levels_.size() || levels_[l].slot.empty())
      return false;
    std::int32_t s = levels_[l].slot[image];
    if (s < 0)
      return false;
    g = g * levels_[l].transversal[static_cast<std::size_t>(s)].inverse();
  }
  return true;
}

bool StabilizerChain::contains(const Permutation &g) const {
  if (g.degree() != degree_)
    return false;
  return sifts_from(0, g);
}

// Knuth's procedure A: adjoin g (which fixes 0..level-1) to level `level`.
void StabilizerChain::add_generator(std::size_t level, const Permutation &g) {
  if (level >= degree_ || sifts_from(level, g))
    return;
  level_at(level).generators.push_back(g);
  for (std::size_t s = 0; s < levels_[level].transversal.size(); ++s) {
    Permutation sigma = levels_[level].transversal[s];
    extend(level, sigma * g);
  }
}

// Knuth's procedure B: g fixes 0..level-1; either it reaches a new orbit
// point, or its residue goes one level down.
void StabilizerChain::extend(std::size_t level, const Permutation &g) {
  Point image = g[static_cast<Point>(level)];
  std::int32_t s = levels_[level].slot[image];
  if (s < 0) {
    Level &l = levels_[level];
    l.slot[image] = static_cast<std::int32_t>(l.transversal.size());
    l.transversal.push_back(g);
    l.orbit.push_back(image);
    for (std::size_t t = 0; t < levels_[level].generators.size(); ++t) {
      Permutation tau = levels_[level].generators[t];
      extend(level, g * tau);
    }
  } else {
    Permutation residue =
        g * levels_[level].transversal[static_cast<std::size_t>(s)].inverse();
    add_generator(level + 1, residue);
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (std::size_t l = 0; l < levels_.size(); ++l)
    if (levels_[l].orbit.size() > 1)
      out.push_back(static_cast<Point>(l));
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto &level : levels_)
    if (level.orbit.size() > 1)
      out.push_back(level.orbit.size());
  return out;
}

std::vector<Permutation> StabilizerChain::all_elements() const {
  std::vector<Permutation> result{Permutation::identity(degree_)};
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    if (it->orbit.size() <= 1)
      continue;
    std::vector<Permutation> next;
    next.reserve(result.size() * it->transversal.size());
    for (const auto &h : result)
      for (const auto &t : it->transversal)
        next.push_back(h * t);
    result = std::move(next);
  }
  return result;
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Cache {
  std::once_flag chain_once;
  std::optional<StabilizerChain> chain;
  std::once_flag elements_once;
  std::optional<ElementSet> elements;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  if (degree == 0)
    throw InvalidPermutation("degree must be at least 1");
  for (const auto &g : generators_)
    if (g.degree() != degree)
      throw DegreeMismatch(degree, g.degree());
  if (generators_.empty())
    generators_.push_back(Permutation::identity(degree));
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

const StabilizerChain &PermGroup::chain() const {
  std::call_once(cache_->chain_once,
                 [this] { cache_->chain.emplace(degree_, generators_); });
  return *cache_->chain;
}

bool PermGroup::contains(const Permutation &g) const { return chain().contains(g); }

const ElementSet &PermGroup::elements(std::uint64_t cap) const {
  if (order() > cap)
    throw OrderCapExceeded(order(), cap);
  std::call_once(cache_->elements_once, [this] {
    ElementSet all(chain().all_elements());
    all.symmetric = true;
    all.conj_closed = true;
    all.comm_closed = true;
    cache_->elements.emplace(std::move(all));
  });
  return *cache_->elements;
}

std::uint64_t group_order(const PermGroup &g) { return g.order(); }

bool contains(const PermGroup &g, const Permutation &a) { return g.contains(a); }

const ElementSet &enumerate_elements(const PermGroup &g, std::uint64_t cap) {
  return g.elements(cap);
}

PermGroup subgroup_generated(std::size_t degree, std::span<const Permutation> gens) {
  // Generators already in the span of earlier ones are dropped; value sets
  // passed in here can have hundreds of members.
  std::vector<Permutation> kept;
  StabilizerChain chain(degree, {});
  for (const auto &g : gens) {
    if (g.degree() != degree)
      throw DegreeMismatch(degree, g.degree());
    if (chain.add(g))
      kept.push_back(g);
  }
  return PermGroup(degree, std::move(kept));
}

PermGroup subgroup_generated(std::size_t degree, const ElementSet &gens) {
  return subgroup_generated(degree, std::span<const Permutation>(gens.elements()));
}

PermGroup group_from_elements(std::size_t degree, const ElementSet &elements) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(degree);
  for (const auto &x : elements) {
    if (current.order() == elements.size())
      break;
    if (!current.contains(x)) {
      gens.push_back(x);
      current = PermGroup(degree, gens);
    }
  }
  return current;
}

bool is_subgroup(const PermGroup &h, const PermGroup &g) {
  if (h.degree() != g.degree())
    return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation &x) { return g.contains(x); });
}

bool same_group(const PermGroup &h, const PermGroup &k) {
  return h.degree() == k.degree() && h.order() == k.order() && is_subgroup(h, k);
}

bool normalizes(const Permutation &x, const PermGroup &h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation &y) { return h.contains(conjugate(y, x)); });
}

bool is_normal(const PermGroup &g, const PermGroup &n) {
  if (!is_subgroup(n, g))
    return false;
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](const Permutation &x) { return normalizes(x, n); });
}

PermGroup conjugate_subgroup(const PermGroup &h, const Permutation &x) {
  std::vector<Permutation> gens;
  for (const auto &y : h.generators())
    gens.push_back(conjugate(y, x));
  return PermGroup(h.degree(), std::move(gens));
}

PermGroup join(const PermGroup &h, const PermGroup &k) {
  if (h.degree() != k.degree())
    throw DegreeMismatch(h.degree(), k.degree());
  std::vector<Permutation> gens = h.generators();
  gens.insert(gens.end(), k.generators().begin(), k.generators().end());
  return subgroup_generated(h.degree(), gens);
}

PermGroup intersection(const PermGroup &h, const PermGroup &k, std::uint64_t cap) {
  if (h.degree() != k.degree())
    throw DegreeMismatch(h.degree(), k.degree());
  const PermGroup &small = h.order() <= k.order() ? h : k;
  const PermGroup &large = h.order() <= k.order() ? k : h;
  ElementSet common =
      small.elements(cap).filter([&](const Permutation &x) { return large.contains(x); });
  return group_from_elements(h.degree(), common);
}

ElementSet conjugacy_class(const PermGroup &g, const Permutation &a) {
  return conjugation_closure(g, ElementSet({a}));
}

std::vector<ElementSet> conjugacy_classes(const PermGroup &g, std::uint64_t cap) {
  const ElementSet &all = g.elements(cap);
  std::vector<bool> assigned(all.size(), false);
  std::vector<ElementSet> classes;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (assigned[i])
      continue;
    std::vector<std::size_t> orbit{i};
    assigned[i] = true;
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      for (const auto &x : g.generators()) {
        std::size_t idx = all.index_of(conjugate(all[orbit[j]], x));
        if (!assigned[idx]) {
          assigned[idx] = true;
          orbit.push_back(idx);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<Permutation> members;
    members.reserve(orbit.size());
    for (std::size_t idx : orbit)
      members.push_back(all[idx]);
    ElementSet cls = ElementSet::from_sorted_unique(std::move(members));
    cls.conj_closed = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

ElementSet conjugation_closure(const PermGroup &g, const ElementSet &s) {
  std::vector<Permutation> orbit(s.begin(), s.end());
  std::vector<Permutation> frontier = orbit;
  ElementSet seen = s;
  while (!frontier.empty()) {
    std::vector<Permutation> fresh;
    for (const auto &y : frontier)
      for (const auto &x : g.generators()) {
        Permutation c = conjugate(y, x);
        if (!seen.contains(c))
          fresh.push_back(std::move(c));
      }
    ElementSet batch(std::move(fresh));
    seen = seen.set_union(batch);
    frontier = batch.elements();
  }
  seen.conj_closed = true;
  return seen;
}

PermGroup normal_closure(const PermGroup &g, std::span<const Permutation> s) {
  PermGroup n = subgroup_generated(g.degree(), s);
  std::vector<Permutation> gens = n.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto &x : g.generators()) {
      Permutation c = conjugate(gens[i], x);
      if (!n.contains(c)) {
        gens.push_back(c);
        n = PermGroup(g.degree(), gens);
      }
    }
  }
  return n;
}

PermGroup normal_closure(const PermGroup &g, const ElementSet &s) {
  return normal_closure(g, std::span<const Permutation>(s.elements()));
}

PermGroup centralizer(const PermGroup &g, const Permutation &a, std::uint64_t cap) {
  ElementSet c = g.elements(cap).filter(
      [&](const Permutation &x) { return x * a == a * x; });
  return group_from_elements(g.degree(), c);
}

PermGroup normalizer(const PermGroup &g, const PermGroup &h, std::uint64_t cap) {
  ElementSet n =
      g.elements(cap).filter([&](const Permutation &x) { return normalizes(x, h); });
  return group_from_elements(g.degree(), n);
}

std::optional<Permutation> conjugating_element(const PermGroup &g, const PermGroup &h,
                                               const PermGroup &k, std::uint64_t cap) {
  if (h.order() != k.order() || h.degree() != k.degree())
    return std::nullopt;
  for (const auto &x : g.elements(cap)) {
    bool ok = std::all_of(h.generators().begin(), h.generators().end(),
                          [&](const Permutation &y) { return k.contains(conjugate(y, x)); });
    if (ok)
      return x;
  }
  return std::nullopt;
}

std::vector<PermGroup> normal_subgroups(const PermGroup &g, std::uint64_t cap) {
  std::map<std::vector<Permutation>, PermGroup> found;
  std::vector<PermGroup> order;
  auto add = [&](const PermGroup &n) {
    const auto &key = n.elements(cap).elements();
    if (found.contains(key))
      return false;
    found.emplace(key, n);
    order.push_back(n);
    return true;
  };

  add(PermGroup::trivial(g.degree()));
  for (const auto &cls : conjugacy_classes(g, cap)) {
    std::vector<Permutation> rep{cls[0]};
    add(normal_closure(g, rep));
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      add(join(order[i], order[j]));

  std::vector<PermGroup> out;
  for (auto &[key, n] : found)
    out.push_back(n);
  std::stable_sort(out.begin(), out.end(), [](const PermGroup &a, const PermGroup &b) {
    return a.order() < b.order();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Quotient

Quotient quotient(const PermGroup &g, const PermGroup &n, std::uint64_t cap) {
  if (n.degree() != g.degree())
    throw DegreeMismatch(g.degree(), n.degree());
  if (!is_normal(g, n))
    throw NotNormal();
  std::uint64_t index = g.order() / n.order();
  if (index > cap)
    throw OrderCapExceeded(index, cap);

  const ElementSet &all = g.elements(cap);
  const ElementSet &kernel = n.elements(cap);
  std::vector<std::uint32_t> coset_id(all.size(), UINT32_MAX);
  std::vector<Permutation> reps;

  // The identity is canonically first, so coset 0 is N itself.
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (coset_id[i] != UINT32_MAX)
      continue;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(all[i]);
    for (const auto &k : kernel)
      coset_id[all.index_of(k * all[i])] = id;
  }

  Quotient q(PermGroup::trivial(1), n);
  q.ambient_ = all;
  q.coset_id_ = std::move(coset_id);
  q.representatives_ = std::move(reps);

  std::vector<Permutation> gens;
  for (const auto &x : g.generators())
    gens.push_back(q.image(x));
  q.group_ = subgroup_generated(q.representatives_.size(), gens);
  return q;
}

std::size_t Quotient::coset_of(const Permutation &g) const {
  std::size_t idx = ambient_.index_of(g);
  if (idx == ambient_.size())
    throw GroupError("element " + g.to_string() + " is not in the ambient group");
  return coset_id_[idx];
}

Permutation Quotient::image(const Permutation &g) const {
  std::vector<Point> images(representatives_.size());
  for (std::size_t c = 0; c < representatives_.size(); ++c)
    images[c] = static_cast<Point>(coset_of(representatives_[c] * g));
  return Permutation::from_images0(std::move(images));
}

ElementSet Quotient::image(const ElementSet &s) const {
  std::vector<Permutation> out;
  out.reserve(s.size());
  for (const auto &x : s)
    out.push_back(image(x));
  if (out.empty())
    return ElementSet();
  return ElementSet(std::move(out));
}

PermGroup Quotient::image(const PermGroup &h) const {
  std::vector<Permutation> gens;
  for (const auto &x : h.generators())
    gens.push_back(image(x));
  return subgroup_generated(representatives_.size(), gens);
}

} // namespace commnil
