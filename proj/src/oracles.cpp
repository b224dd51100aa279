#include "rnametric/oracles.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "rnametric/error.hpp"

namespace rnametric::oracles {

namespace {

// Lehmer-code rank of a permutation of 0..n-1.
std::size_t perm_rank(const std::vector<int>& p) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * (p.size() - i) + smaller;
  }
  return rank;
}

std::vector<int> to_zero_based(std::span<const Index> sigma) {
  const auto n = sigma.size();
  std::vector<int> p(n);
  std::vector<char> hit(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (sigma[k] < 1 || static_cast<std::size_t>(sigma[k]) > n || hit[sigma[k] - 1]) {
      throw Error(ErrorKind::IndexOutOfRange, "not a permutation of [" + std::to_string(n) + "]");
    }
    hit[sigma[k] - 1] = 1;
    p[k] = static_cast<int>(sigma[k] - 1);
  }
  return p;
}

}  // namespace

std::size_t min_transpositions_bfs(std::span<const Index> sigma) {
  if (sigma.size() > kMaxBfsSize) {
    throw Error(ErrorKind::TooLarge, "BFS oracle limited to n <= " + std::to_string(kMaxBfsSize));
  }
  const auto target = to_zero_based(sigma);
  const std::size_t n = target.size();
  std::vector<int> start(n);
  for (std::size_t k = 0; k < n; ++k) start[k] = static_cast<int>(k);

  std::size_t states = 1;
  for (std::size_t k = 2; k <= n; ++k) states *= k;
  std::vector<int> dist(states, -1);
  std::deque<std::vector<int>> queue;
  dist[perm_rank(start)] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    const int d = dist[perm_rank(cur)];
    if (cur == target) return static_cast<std::size_t>(d);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        auto next = cur;
        std::swap(next[a], next[b]);
        auto& slot = dist[perm_rank(next)];
        if (slot < 0) {
          slot = d + 1;
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return 0;  // unreachable: S_n is connected under transpositions
}

std::size_t cycle_count(std::span<const Index> sigma) {
  const auto p = to_zero_based(sigma);
  std::vector<char> seen(p.size(), 0);
  std::size_t count = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (seen[k]) continue;
    ++count;
    std::size_t j = k;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<std::size_t>(p[j]);
    }
  }
  return count;
}

SecondaryStructure random_structure(Index n, std::size_t num_contacts, SplitMix64& rng) {
  if (n < 1) throw Error(ErrorKind::InvalidLength, "length must be positive");
  // A gap-2 matching of size floor(n/2) exists for every n except 2.
  const std::size_t max_contacts = n == 2 ? 0 : static_cast<std::size_t>(n / 2);
  if (num_contacts > max_contacts) {
    throw Error(ErrorKind::Infeasible, "cannot place " + std::to_string(num_contacts) +
                                           " contacts on " + std::to_string(n) + " bases");
  }
  constexpr int kMaxRestarts = 1000;
  constexpr int kMaxDrawsPerContact = 256;
  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    std::vector<Index> free(static_cast<std::size_t>(n));
    for (Index k = 0; k < n; ++k) free[static_cast<std::size_t>(k)] = k + 1;
    std::vector<std::pair<Index, Index>> pairs;
    bool stuck = false;
    while (pairs.size() < num_contacts && !stuck) {
      stuck = true;
      for (int draw = 0; draw < kMaxDrawsPerContact; ++draw) {
        const auto x = rng.below(free.size());
        const auto y = rng.below(free.size());
        const Index a = free[x], b = free[y];
        if (a == b || (a > b ? a - b : b - a) < 2) continue;
        pairs.emplace_back(a, b);
        // erase the higher slot first so the lower one stays valid
        free.erase(free.begin() + static_cast<std::ptrdiff_t>(std::max(x, y)));
        free.erase(free.begin() + static_cast<std::ptrdiff_t>(std::min(x, y)));
        stuck = false;
        break;
      }
    }
    if (!stuck) return SecondaryStructure(n, pairs);
  }
  throw Error(ErrorKind::Infeasible, "gave up placing " + std::to_string(num_contacts) +
                                         " contacts on " + std::to_string(n) + " bases");
}

SecondaryStructure random_structure(Index n, std::size_t num_contacts, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_structure(n, num_contacts, rng);
}

namespace {

void extend(Index n, Index next, std::vector<char>& used, std::vector<std::pair<Index, Index>>& pairs,
            const std::function<void(const SecondaryStructure&)>& visit) {
  while (next <= n && used[static_cast<std::size_t>(next)]) ++next;
  if (next > n) {
    visit(SecondaryStructure(n, pairs));
    return;
  }
  used[static_cast<std::size_t>(next)] = 1;
  extend(n, next + 1, used, pairs, visit);
  for (Index j = next + 2; j <= n; ++j) {
    if (used[static_cast<std::size_t>(j)]) continue;
    used[static_cast<std::size_t>(j)] = 1;
    pairs.emplace_back(next, j);
    extend(n, next + 1, used, pairs, visit);
    pairs.pop_back();
    used[static_cast<std::size_t>(j)] = 0;
  }
  used[static_cast<std::size_t>(next)] = 0;
}

void require_enumerable(Index n) {
  if (n < 1) throw Error(ErrorKind::InvalidLength, "length must be positive");
  if (n > kMaxEnumerationLength) {
    throw Error(ErrorKind::TooLarge,
                "enumeration limited to n <= " + std::to_string(kMaxEnumerationLength));
  }
}

}  // namespace

void for_each_structure(Index n, const std::function<void(const SecondaryStructure&)>& visit) {
  require_enumerable(n);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::pair<Index, Index>> pairs;
  extend(n, 1, used, pairs, visit);
}

std::vector<SecondaryStructure> enumerate_structures(Index n) {
  std::vector<SecondaryStructure> out;
  for_each_structure(n, [&](const SecondaryStructure& s) { out.push_back(s); });
  return out;
}

std::size_t count_structures_by_subsets(Index n) {
  require_enumerable(n);
  std::vector<std::pair<Index, Index>> candidates;
  for (Index i = 1; i <= n; ++i)
    for (Index j = i + 2; j <= n; ++j) candidates.emplace_back(i, j);
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    bool ok = true;
    for (std::size_t c = 0; c < candidates.size() && ok; ++c) {
      if (!(mask >> c & 1)) continue;
      ok = ++degree[static_cast<std::size_t>(candidates[c].first)] == 1 &&
           ++degree[static_cast<std::size_t>(candidates[c].second)] == 1;
    }
    if (ok) ++count;
  }
  return count;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  const auto r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p) {
  const std::size_t n = a.dim();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = reduce(a(r, c), p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const auto inv = powmod(m[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const auto f = mulmod(m[r][c], inv, p);
      for (std::size_t k = c; k < n; ++k) {
        m[r][k] = (m[r][k] + p - mulmod(f, m[rank][k], p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (x % small == 0) return x == small;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a proof for every 64-bit x.
  for (std::uint64_t base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    auto y = powmod(base, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      y = mulmod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime_62(SplitMix64& rng) {
  constexpr std::uint64_t lo = std::uint64_t{1} << 61;
  while (true) {
    const std::uint64_t candidate = lo | (rng.next() & (lo - 1)) | 1;
    if (is_prime(candidate)) return candidate;
  }
}

}  // namespace rnametric::oracles
