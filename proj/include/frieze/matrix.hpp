#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "frieze/rational.hpp"

namespace frieze {

// Dense exact matrix, row-major. Treated as an immutable value.
class MatExact {
 public:
  MatExact() = default;
  MatExact(std::size_t rows, std::size_t cols);
  MatExact(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
  MatExact(std::initializer_list<std::initializer_list<Rat>> rows);

  static MatExact identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const std::vector<Rat>& entries() const { return entries_; }

  const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  // Copy with one entry replaced.
  MatExact with(std::size_t r, std::size_t c, Rat value) const;
  MatExact transpose() const;
  MatExact operator-() const;

  friend bool operator==(const MatExact& a, const MatExact& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

// Fraction-free (Bareiss) determinant.
Rat det(const MatExact& m);

// Rank over Q, via the same elimination.
std::size_t rank(const MatExact& m);

MatExact mat_mul(const MatExact& a, const MatExact& b);
inline MatExact operator*(const MatExact& a, const MatExact& b) { return mat_mul(a, b); }

// Basis of the right kernel {v : m v = 0}, from the reduced row echelon form.
std::vector<std::vector<Rat>> kernel(const MatExact& m);

// v^T m (combination of rows with coefficients v).
std::vector<Rat> row_combination(const std::vector<Rat>& v, const MatExact& m);

}  // namespace frieze
