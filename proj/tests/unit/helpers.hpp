#pragma once

#include <string>
#include <vector>

#include "commnil/corpus.hpp"
#include "commnil/perm_group.hpp"
#include "commnil/random.hpp"

namespace testing_helpers {

inline commnil::PermGroup builtin(const std::string &id) { return commnil::load_group(id).group; }

inline commnil::Permutation cyc(const std::string &text, std::size_t degree) {
  return commnil::Permutation::from_cycles(text, degree);
}

inline commnil::Permutation random_permutation(commnil::Rng &rng, std::size_t n) {
  std::vector<commnil::Point> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<commnil::Point>(i);
  rng.shuffle(images);
  return commnil::Permutation::from_images0(images);
}

inline commnil::Permutation random_element(commnil::Rng &rng, const commnil::PermGroup &g) {
  const auto &all = g.elements();
  return all[static_cast<std::size_t>(rng.below(all.size()))];
}

// Soluble builtins small enough for the exhaustive oracles.
inline std::vector<std::string> small_soluble_ids() {
  std::vector<std::string> out;
  for (const auto &d : commnil::select_builtins("soluble"))
    if (d.expected_order && *d.expected_order <= 72)
      out.push_back(d.id);
  return out;
}

} // namespace testing_helpers
