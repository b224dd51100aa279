#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rnametric/structure.hpp"

namespace rnametric {

/// Dense square integer matrix, row-major, 0-based element access.
/// Entries are 64-bit; arithmetic that would overflow throws
/// ErrorKind::Overflow rather than wrapping.
class IntMatrix {
public:
  using value_type = std::int64_t;

  explicit IntMatrix(std::size_t n = 0) : n_(n), a_(n * n, 0) {}
  IntMatrix(std::size_t n, std::vector<value_type> row_major);

  static IntMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  value_type& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  value_type operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  IntMatrix transposed() const;
  /// this − Id
  IntMatrix minus_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t n_;
  std::vector<value_type> a_;
};

/// s_ij = -1 for a contact i·j, s_ii = 1 for an isolated base, 0 elsewhere.
IntMatrix structure_matrix(const SecondaryStructure& s);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
/// 64-bit arithmetic and restarts with arbitrary precision if an
/// intermediate would overflow.
std::size_t exact_rank(const IntMatrix& a);

/// Same elimination, always in arbitrary precision. Exposed for testing the
/// 64-bit fast path.
std::size_t exact_rank_bigint(const IntMatrix& a);

}  // namespace rnametric
