#include "frieze/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "frieze/errors.hpp"

namespace frieze {

MatExact::MatExact(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

MatExact::MatExact(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionError("matrix entry count does not match shape");
}

MatExact::MatExact(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

MatExact MatExact::identity(std::size_t n) {
  MatExact m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

MatExact MatExact::with(std::size_t r, std::size_t c, Rat value) const {
  MatExact m = *this;
  m.entries_.at(r * cols_ + c) = std::move(value);
  return m;
}

MatExact MatExact::transpose() const {
  MatExact t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  return t;
}

MatExact MatExact::operator-() const {
  MatExact m = *this;
  for (auto& e : m.entries_) e = -e;
  return m;
}

std::string MatExact::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Clears denominators row by row. Returns the product of the row scale
// factors so callers can undo the scaling of a determinant.
IntRows integer_rows(const MatExact& m, mpz_class* scale) {
  IntRows a(m.rows(), std::vector<mpz_class>(m.cols()));
  mpz_class total = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).num() * (l / m(r, c).den());
    total *= l;
  }
  if (scale) *scale = total;
  return a;
}

void exact_div(mpz_class& x, const mpz_class& d) {
  if (d == 1) return;
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

// Fraction-free row echelon reduction in place. Returns the rank and the
// sign of the row permutation used.
std::size_t bareiss(IntRows& a, std::size_t cols, int* perm_sign) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        exact_div(a[i][j], prev);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (perm_sign) *perm_sign = sign;
  return r;
}

}  // namespace

Rat det(const MatExact& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class scale;
  IntRows a = integer_rows(m, &scale);
  int sign = 1;
  if (bareiss(a, n, &sign) < n) return 0;
  return Rat(a[n - 1][n - 1] * sign, scale);
}

std::size_t rank(const MatExact& m) {
  IntRows a = integer_rows(m, nullptr);
  return bareiss(a, m.cols(), nullptr);
}

MatExact mat_mul(const MatExact& a, const MatExact& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product with mismatched inner dimensions");
  std::vector<Rat> out(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] += aik * b(k, j);
    }
  }
  return MatExact(a.rows(), b.cols(), std::move(out));
}

std::vector<std::vector<Rat>> kernel(const MatExact& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rat inv = Rat(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> row_combination(const std::vector<Rat>& v, const MatExact& m) {
  if (v.size() != m.rows()) throw DimensionError("row combination length mismatch");
  std::vector<Rat> out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += v[r] * m(r, c);
  }
  return out;
}

}  // namespace frieze
