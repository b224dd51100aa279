#include "rnametric/linalg.hpp"

#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "rnametric/error.hpp"

namespace rnametric {

IntMatrix::IntMatrix(std::size_t n, std::vector<value_type> row_major)
    : n_(n), a_(std::move(row_major)) {
  if (a_.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n * n) + " entries, got " +
                                                  std::to_string(a_.size()));
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::minus_identity() const {
  IntMatrix m = *this;
  for (std::size_t k = 0; k < n_; ++k) {
    if (__builtin_sub_overflow(m(k, k), 1, &m(k, k))) {
      throw Error(ErrorKind::Overflow, "diagonal entry overflows in A - Id");
    }
  }
  return m;
}

IntMatrix structure_matrix(const SecondaryStructure& s) {
  const auto n = static_cast<std::size_t>(s.length());
  IntMatrix m = IntMatrix::identity(n);
  for (const auto& c : s.contacts()) {
    const auto i = static_cast<std::size_t>(c.i - 1);
    const auto j = static_cast<std::size_t>(c.j - 1);
    m(i, i) = 0;
    m(j, j) = 0;
    m(i, j) = -1;
    m(j, i) = -1;
  }
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(a.dim()) + "x" +
                                                  std::to_string(a.dim()) + " by " +
                                                  std::to_string(b.dim()) + "x" +
                                                  std::to_string(b.dim()));
  }
  const std::size_t n = a.dim();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        IntMatrix::value_type prod = 0;
        if (__builtin_mul_overflow(aik, b(k, j), &prod) ||
            __builtin_add_overflow(c(i, j), prod, &c(i, j))) {
          throw Error(ErrorKind::Overflow, "integer overflow in matrix product");
        }
      }
    }
  }
  return c;
}

namespace {

struct Int64Ops {
  using T = std::int64_t;
  static bool is_zero(T x) { return x == 0; }
  // (p*x - q*y) / d, exact; nullopt on overflow.
  static std::optional<T> update(T p, T x, T q, T y, T d) {
    T px = 0, qy = 0, diff = 0;
    if (__builtin_mul_overflow(p, x, &px) || __builtin_mul_overflow(q, y, &qy) ||
        __builtin_sub_overflow(px, qy, &diff)) {
      return std::nullopt;
    }
    return diff / d;
  }
};

struct BigOps {
  using T = mpz_class;
  static bool is_zero(const T& x) { return sgn(x) == 0; }
  static std::optional<T> update(const T& p, const T& x, const T& q, const T& y, const T& d) {
    T r = p * x - q * y;
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    return r;
  }
};

// Fraction-free row echelon reduction. Columns without a nonzero pivot are
// skipped; every stored entry stays a minor of the input, so each division
// by the previous pivot is exact. Returns nullopt if Ops reports overflow.
template <typename Ops>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<typename Ops::T>> m) {
  using T = typename Ops::T;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && Ops::is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const T p = m[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T q = m[r][c];
      if (Ops::is_zero(q) && p == prev) continue;
      for (std::size_t k = c + 1; k < cols; ++k) {
        auto v = Ops::update(p, m[r][k], q, m[rank][k], prev);
        if (!v) return std::nullopt;
        m[r][k] = std::move(*v);
      }
      m[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

template <typename T>
std::vector<std::vector<T>> rows_of(const IntMatrix& a) {
  std::vector<std::vector<T>> m(a.dim(), std::vector<T>(a.dim()));
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m[r][c] = T(static_cast<long>(a(r, c)));
  return m;
}

}  // namespace

std::size_t exact_rank_bigint(const IntMatrix& a) {
  return *bareiss_rank<BigOps>(rows_of<mpz_class>(a));
}

std::size_t exact_rank(const IntMatrix& a) {
  if (auto r = bareiss_rank<Int64Ops>(rows_of<std::int64_t>(a))) return *r;
  return exact_rank_bigint(a);
}

}  // namespace rnametric
