#include "sepvar/linalg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sepvar {

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("from_columns: ragged column");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Rational> QMatrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

QMatrix QMatrix::with_column(std::span<const Rational> v) const {
  if (v.size() != rows_) throw std::invalid_argument("with_column: dimension mismatch");
  QMatrix m(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    m.at(r, cols_) = v[r];
  }
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  }
  return m;
}

std::size_t exact_rank(const QMatrix& m) {
  const std::size_t n = m.rows(), k = m.cols();
  if (n == 0 || k == 0) return 0;
  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(k));
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < k; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < k; ++c) {
      const Rational& q = m.at(r, c);
      a[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  Integer prev = 1;
  std::size_t rank = 0;
  Integer t1, t2;
  for (std::size_t c = 0; c < k && rank < n; ++c) {
    std::size_t p = rank;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[rank]);
    const Integer& piv = a[rank][c];
    for (std::size_t i = rank + 1; i < n; ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c + 1; j < k; ++j) {
        mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_mul(t2.get_mpz_t(), f.get_mpz_t(), a[rank][j].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

bool column_space_contains(const QMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.rows()) throw std::invalid_argument("column_space_contains: dimension mismatch");
  return exact_rank(m.with_column(v)) == exact_rank(m);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  Integer pz;
  mpz_set_ui(pz.get_mpz_t(), 0);
  mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  Integer n = q.get_num() % pz;
  if (n < 0) n += pz;
  Integer d = q.get_den() % pz;
  if (d == 0) throw std::domain_error("modular reduction: prime divides a denominator");
  auto to_u64 = [](const Integer& z) {
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
    return out;
  };
  return mulmod(to_u64(n), invmod(to_u64(d), p), p);
}

}  // namespace

std::size_t modular_rank(const QMatrix& m, std::uint64_t prime) {
  const std::size_t n = m.rows(), k = m.cols();
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(k));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = reduce_mod(m.at(r, c), prime);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < k && rank < n; ++c) {
    std::size_t p = rank;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[rank]);
    std::uint64_t inv = invmod(a[rank][c], prime);
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = mulmod(a[i][c], inv, prime);
      for (std::size_t j = c; j < k; ++j) {
        std::uint64_t s = mulmod(f, a[rank][j], prime);
        a[i][j] = a[i][j] >= s ? a[i][j] - s : a[i][j] + prime - s;
      }
    }
    ++rank;
  }
  return rank;
}

std::span<const std::uint64_t> default_primes() {
  static constexpr std::array<std::uint64_t, 3> primes = {2305843009213693951ULL, 2305843009213693921ULL,
                                                          2305843009213693907ULL};
  return primes;
}

// ---------------------------------------------------------------------------

std::vector<Rational> EchelonBasis::reduce(std::vector<Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
    }
  }
  return v;
}

bool EchelonBasis::contains(std::span<const Rational> v) const {
  auto r = reduce(std::vector<Rational>(v.begin(), v.end()));
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool EchelonBasis::insert(std::span<const Rational> v) {
  auto r = reduce(std::vector<Rational>(v.begin(), v.end()));
  std::size_t p = 0;
  while (p < dim_ && r[p] == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  // Keep the basis fully reduced so reduce() needs one pass.
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (r[j] != 0) row[j] -= f * r[j];
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

// ---------------------------------------------------------------------------

namespace {

template <class T, class Axpy>
SparseRow<T> sparse_axpy(const SparseRow<T>& row, const SparseRow<T>& piv, Axpy&& combine) {
  // row - f * piv, where combine(a_or_null, b_or_null) produces the entry.
  SparseRow<T> out;
  out.reserve(row.size() + piv.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < piv.size()) {
    if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || piv[j].first < row[i].first) {
      T v = combine(nullptr, &piv[j].second);
      out.emplace_back(piv[j].first, std::move(v));
      ++j;
    } else {
      T v = combine(&row[i].second, &piv[j].second);
      if (!(v == 0)) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::insert(SparseRow<Rational> row) {
  while (!row.empty()) {
    auto it = pivot_rows_.find(row.front().first);
    if (it == pivot_rows_.end()) {
      const Rational inv = 1 / row.front().second;
      for (auto& [c, v] : row) v *= inv;
      std::uint32_t col = row.front().first;
      pivot_rows_.emplace(col, std::move(row));
      return true;
    }
    const Rational f = row.front().second;
    row = sparse_axpy<Rational>(row, it->second, [&f](const Rational* a, const Rational* b) {
      return a ? Rational(*a - f * *b) : Rational(-f * *b);
    });
  }
  return false;
}

SparseRow<Rational> SparseEchelon::reduce(SparseRow<Rational> row) const {
  // Pivot rows only reach to the right of their pivot, so one sweep suffices.
  std::size_t pos = 0;
  while (pos < row.size()) {
    auto it = pivot_rows_.find(row[pos].first);
    if (it == pivot_rows_.end()) {
      ++pos;
      continue;
    }
    const Rational f = row[pos].second;
    row = sparse_axpy<Rational>(row, it->second, [&f](const Rational* a, const Rational* b) {
      return a ? Rational(*a - f * *b) : Rational(-f * *b);
    });
  }
  return row;
}

std::vector<std::uint32_t> SparseEchelon::pivot_columns() const {
  std::vector<std::uint32_t> cols;
  for (const auto& [c, r] : pivot_rows_) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  return cols;
}

std::uint64_t SparseEchelonModP::reduce(const Rational& q) const { return reduce_mod(q, p_); }

bool SparseEchelonModP::insert(SparseRow<std::uint64_t> row) {
  const std::uint64_t p = p_;
  while (!row.empty()) {
    auto it = pivot_rows_.find(row.front().first);
    if (it == pivot_rows_.end()) {
      const std::uint64_t inv = invmod(row.front().second, p);
      for (auto& [c, v] : row) v = mulmod(v, inv, p);
      std::uint32_t col = row.front().first;
      pivot_rows_.emplace(col, std::move(row));
      return true;
    }
    const std::uint64_t f = row.front().second;
    row = sparse_axpy<std::uint64_t>(row, it->second, [f, p](const std::uint64_t* a, const std::uint64_t* b) {
      std::uint64_t s = mulmod(f, *b, p);
      std::uint64_t base = a ? *a : 0;
      return base >= s ? base - s : base + p - s;
    });
  }
  return false;
}

}  // namespace sepvar
