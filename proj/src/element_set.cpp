#include "commnil/element_set.hpp"

#include <algorithm>

#include "commnil/errors.hpp"

namespace commnil {

ElementSet::ElementSet(std::vector<Permutation> elements)
    : elements_(std::move(elements)) {
  for (const auto &p : elements_)
    if (p.degree() != elements_.front().degree())
      throw DegreeMismatch(elements_.front().degree(), p.degree());
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

ElementSet ElementSet::from_sorted_unique(std::vector<Permutation> elements) {
  ElementSet out;
  out.elements_ = std::move(elements);
  return out;
}

bool ElementSet::contains(const Permutation &p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t ElementSet::index_of(const Permutation &p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

ElementSet ElementSet::filter(const std::function<bool(const Permutation &)> &keep) const {
  std::vector<Permutation> out;
  for (const auto &p : elements_)
    if (keep(p))
      out.push_back(p);
  return from_sorted_unique(std::move(out));
}

ElementSet ElementSet::set_union(const ElementSet &other) const {
  std::vector<Permutation> out;
  out.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return from_sorted_unique(std::move(out));
}

ElementSet ElementSet::set_intersection(const ElementSet &other) const {
  std::vector<Permutation> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(out));
  return from_sorted_unique(std::move(out));
}

bool ElementSet::is_subset_of(const ElementSet &other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

bool is_symmetric(const ElementSet &x) {
  return std::all_of(x.begin(), x.end(),
                     [&](const Permutation &p) { return x.contains(p.inverse()); });
}

bool is_commutator_closed(const ElementSet &x) {
  for (const auto &a : x)
    for (const auto &b : x)
      if (!x.contains(commutator(a, b)))
        return false;
  return true;
}

bool is_conjugation_closed(const ElementSet &x, std::span<const Permutation> by) {
  for (const auto &g : by)
    for (const auto &a : x)
      if (!x.contains(conjugate(a, g)))
        return false;
  return true;
}

ElementSet product_set(const ElementSet &a, const ElementSet &b) {
  std::vector<Permutation> out;
  out.reserve(a.size() * b.size());
  for (const auto &x : a)
    for (const auto &y : b)
      out.push_back(x * y);
  return ElementSet(std::move(out));
}

ElementSet commutator_closure(const ElementSet &x) {
  ElementSet current = x;
  for (;;) {
    std::vector<Permutation> fresh;
    for (const auto &a : current)
      for (const auto &b : current) {
        Permutation c = commutator(a, b);
        if (!current.contains(c))
          fresh.push_back(std::move(c));
      }
    if (fresh.empty())
      break;
    current = current.set_union(ElementSet(std::move(fresh)));
  }
  current.comm_closed = true;
  return current;
}

bool verify_flags(const ElementSet &x, std::span<const Permutation> ambient_gens) {
  if (x.symmetric && !is_symmetric(x))
    return false;
  if (x.comm_closed && !is_commutator_closed(x))
    return false;
  if (x.conj_closed && !is_conjugation_closed(x, ambient_gens))
    return false;
  return true;
}

} // namespace commnil
