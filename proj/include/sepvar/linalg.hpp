#ifndef SEPVAR_LINALG_HPP
#define SEPVAR_LINALG_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "sepvar/rational.hpp"

namespace sepvar {

/// Dense matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static QMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  QMatrix with_column(std::span<const Rational> v) const;
  QMatrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const QMatrix& m);

/// True iff v lies in the column space of m. Throws std::invalid_argument
/// when v's length differs from m.rows().
bool column_space_contains(const QMatrix& m, std::span<const Rational> v);

/// Rank of m reduced modulo a prime below 2^62. Throws std::domain_error
/// when a denominator is divisible by the prime.
std::size_t modular_rank(const QMatrix& m, std::uint64_t prime);

/// Three fixed primes near 2^61 used for multi-modular rank checks.
std::span<const std::uint64_t> default_primes();

/// Incrementally grown basis of a subspace of Q^dim kept in reduced
/// echelon form, for repeated membership and independence queries.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the basis; the result is zero iff v is contained.
  std::vector<Rational> reduce(std::vector<Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  /// Adds v; returns false (and leaves the basis unchanged) when dependent.
  bool insert(std::span<const Rational> v);

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Sparse row: (column, value) pairs with strictly increasing columns.
template <class T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

/// Row echelon form of a sparse system over the rationals. Rows are
/// inserted one at a time; each is top-reduced against stored pivots.
class SparseEchelon {
 public:
  /// Returns true when the row added a new pivot.
  bool insert(SparseRow<Rational> row);
  std::size_t rank() const { return pivot_rows_.size(); }
  bool has_pivot(std::uint32_t col) const { return pivot_rows_.count(col) != 0; }
  std::vector<std::uint32_t> pivot_columns() const;
  /// Eliminates every pivot column from the row.
  SparseRow<Rational> reduce(SparseRow<Rational> row) const;

 private:
  std::unordered_map<std::uint32_t, SparseRow<Rational>> pivot_rows_;
};

/// Same as SparseEchelon over Z/p.
class SparseEchelonModP {
 public:
  explicit SparseEchelonModP(std::uint64_t prime) : p_(prime) {}
  bool insert(SparseRow<std::uint64_t> row);
  std::size_t rank() const { return pivot_rows_.size(); }
  bool has_pivot(std::uint32_t col) const { return pivot_rows_.count(col) != 0; }
  std::uint64_t prime() const { return p_; }
  /// Reduces a rational to Z/p; throws std::domain_error if p divides the denominator.
  std::uint64_t reduce(const Rational& q) const;

 private:
  std::uint64_t p_;
  std::unordered_map<std::uint32_t, SparseRow<std::uint64_t>> pivot_rows_;
};

}  // namespace sepvar

#endif  // SEPVAR_LINALG_HPP
