#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "rnametric/oracles.hpp"
#include "rnametric/structure.hpp"

namespace rnametric::testing {

inline SecondaryStructure make(Index n, std::initializer_list<std::pair<Index, Index>> pairs) {
  return new_structure(n, pairs);
}

/// Random structure with a uniformly drawn contact count.
inline SecondaryStructure random_any(Index n, SplitMix64& rng) {
  const std::size_t max_k = n == 2 ? 0 : static_cast<std::size_t>(n / 2);
  return oracles::random_structure(n, rng.below(max_k + 1), rng);
}

/// π1∘π2 in one-line notation, built straight from the contact lists.
inline oracles::Permutation compose_from_contacts(const SecondaryStructure& s1,
                                                  const SecondaryStructure& s2) {
  const auto n = static_cast<std::size_t>(s1.length());
  auto involution = [n](const SecondaryStructure& s) {
    std::vector<Index> p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<Index>(k + 1);
    for (const auto& c : s.contacts()) std::swap(p[c.i - 1], p[c.j - 1]);
    return p;
  };
  const auto p1 = involution(s1), p2 = involution(s2);
  oracles::Permutation sigma(n);
  for (std::size_t k = 0; k < n; ++k) sigma[k] = p1[p2[k] - 1];
  return sigma;
}

}  // namespace rnametric::testing
