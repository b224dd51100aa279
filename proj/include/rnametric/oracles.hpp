#pragma once

// Brute-force verifiers and test-data generators. Nothing here calls into
// the orbit, metric or elimination code it is used to check.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rnametric/linalg.hpp"
#include "rnametric/splitmix.hpp"
#include "rnametric/structure.hpp"

namespace rnametric::oracles {

/// A permutation of [n] in one-line notation: sigma[k] is the image of k+1.
using Permutation = std::vector<Index>;

inline constexpr std::size_t kMaxBfsSize = 8;
inline constexpr Index kMaxEnumerationLength = 8;

/// Breadth-first distance from the identity to sigma in the Cayley graph of
/// S_n generated by all transpositions. Throws TooLarge for n > 8.
std::size_t min_transpositions_bfs(std::span<const Index> sigma);

/// Number of cycles of sigma, fixed points included.
std::size_t cycle_count(std::span<const Index> sigma);

/// Draws num_contacts disjoint pairs with gap >= 2 by rejection, restarting
/// when the free bases left cannot be paired. Throws Infeasible.
SecondaryStructure random_structure(Index n, std::size_t num_contacts, SplitMix64& rng);
SecondaryStructure random_structure(Index n, std::size_t num_contacts, std::uint64_t seed);

/// Every structure of length n exactly once: base 1 is left isolated
/// first, then paired with 3, 4, ..., recursively. Throws TooLarge for n > 8.
void for_each_structure(Index n, const std::function<void(const SecondaryStructure&)>& visit);
std::vector<SecondaryStructure> enumerate_structures(Index n);

/// Counts structures by testing every subset of the valid contacts.
std::size_t count_structures_by_subsets(Index n);

/// Rank over Z/pZ by plain Gaussian elimination; p must be prime < 2^63.
std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t x);

/// A uniformly drawn prime in [2^61, 2^62).
std::uint64_t random_prime_62(SplitMix64& rng);

}  // namespace rnametric::oracles
