#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "frieze/rational.hpp"

namespace frieze {

// Lattice conventions used throughout the library.
//
// An entry v_{i,j} (i, j in Z/2) is addressed by the doubled index
// (p, q) = (2i, 2j), or equivalently by its row r = i - j and column
// h = i + j. Row -1 is the row of 1's, rows -2 and -3 are the rows of 0's,
// row 0 is the coefficient row. Within row r, integer entries (p even) sit
// at columns h = r (mod 2), half-integer entries at the other parity.
// In row 0, b_i sits at h = 2i - 1 and a_i at h = 2i.
struct DoubledIndex {
  long p = 0;
  long q = 0;

  static DoubledIndex from_row_col(long r, long h) { return {h + r, h - r}; }
  long row() const { return (p - q) / 2; }
  long col() const { return (p + q) / 2; }
  bool integer_type() const { return p % 2 == 0; }
  friend bool operator==(const DoubledIndex&, const DoubledIndex&) = default;
};

// Throws ContractError unless p = q (mod 2).
void validate(const DoubledIndex& d);

// The cyclic row (b_1, a_1, ..., b_n, a_n).
class CoefficientRow {
 public:
  CoefficientRow(int n, std::vector<Rat> values);
  static CoefficientRow constant(int n, const Rat& v);

  int n() const { return n_; }
  const std::vector<Rat>& values() const { return values_; }

  // Entry of row 0 at column h, any integer h.
  const Rat& at_col(long h) const;
  const Rat& a(long i) const { return at_col(2 * i); }
  const Rat& b(long i) const { return at_col(2 * i - 1); }

  // values'[k] = values[k + s] (cyclic).
  CoefficientRow rotated(long s) const;
  CoefficientRow reversed() const;

  friend bool operator==(const CoefficientRow&, const CoefficientRow&) = default;

 private:
  int n_;
  std::vector<Rat> values_;
};

// Rows 0..depth-1 of a frieze over one horizontal period of 2n columns
// (h = 1..2n). Reads wrap horizontally; rows above 0 are the boundary rows.
class Frieze2Window {
 public:
  Frieze2Window(int n, int depth, std::vector<Rat> entries, bool closed);

  int n() const { return n_; }
  int depth() const { return depth_; }
  long columns() const { return 2L * n_; }
  bool closed() const { return closed_; }
  const std::vector<Rat>& entries() const { return entries_; }

  bool has_row(long r) const { return r >= -3 && r < depth_; }
  const Rat& at(long r, long h) const;
  const Rat& at(const DoubledIndex& d) const { return at(d.row(), d.col()); }

  // Copy with w'(r, h) = w(r, h - s).
  Frieze2Window shifted(long s) const;
  Frieze2Window with_entry(long r, long h, Rat value) const;
  // The coefficient row read off row 0.
  CoefficientRow coefficient_row() const;

  friend bool operator==(const Frieze2Window&, const Frieze2Window&) = default;

 private:
  std::size_t slot(long r, long h) const;

  int n_;
  int depth_;
  std::vector<Rat> entries_;
  bool closed_;
};

// Division-free: propagates every SE diagonal by the third-order recurrence
// v(r, h) = R(h+r) v(r-1, h-1) - R(h+r-1) v(r-2, h-2) + v(r-3, h-3),
// where R is the coefficient row. The closed flag is is_closed(coeffs).
Frieze2Window frieze_from_coefficients(const CoefficientRow& coeffs, int depth);

// v_{i,j} as the determinant of the banded matrix with A_{j+k} on the
// diagonal, B_{j+k+1} above it, 1 on the second superdiagonal and 1 below.
// Half-integer entries use (A_k, B_{k+1}) -> (B_{k+1}, A_{k+1}).
Rat entry_by_determinant(const CoefficientRow& coeffs, const DoubledIndex& d);

struct Diamond {
  long row;
  long col;
  friend bool operator==(const Diamond&, const Diamond&) = default;
  friend auto operator<=>(const Diamond&, const Diamond&) = default;
};

// Centers (r, h), 0 <= r <= depth-2, where center != west*east - north*south.
std::vector<Diamond> verify_pattern_rule(const Frieze2Window& w);

struct SymmetryReport {
  bool row_periodic = false;
  bool diagonal_periodic = false;
  bool glide = false;
  bool all() const { return row_periodic && diagonal_periodic && glide; }
};

// Checks, on a window of depth 2n + 3:
//   (i)   v(r, h + 2n) = v(r, h),
//   (ii)  v(r + n, h + n) = v(r, h)            (v_{i+n, j} = v_{i, j}),
//   (iii) v(r, h) = v(n - 5 - r, h + n)         (v_{i,j} = v_{j+n-5/2, i+5/2}).
// Throws DomainError if the coefficients do not close.
SymmetryReport verify_closed_symmetries(const CoefficientRow& coeffs);

// Dense grid indexed by (i, j); cells outside the available band are empty.
struct TilingGrid {
  long i0 = 0;
  long j0 = 0;
  long rows = 0;
  long cols = 0;
  std::vector<std::optional<Rat>> cells;

  const std::optional<Rat>& at(long i, long j) const;
  TilingGrid with(long i, long j, Rat value) const;
};

struct MinorFailure {
  bool half = false;
  long i = 0;
  long j = 0;
  Rat value;
};

struct Sl3Report {
  TilingGrid integer_grid;
  TilingGrid half_grid;
  std::size_t minors_checked = 0;
  std::vector<MinorFailure> failures;
  bool ok() const { return minors_checked > 0 && failures.empty(); }
};

// Integer grid (v_{i,j}) and half grid (v_{i+1/2, j+1/2}) for j over one
// diagonal period plus overlap, with every contiguous 3x3 minor checked.
// Throws ContractError if the window has fewer than 2 rows.
Sl3Report sl3_subgrids(const Frieze2Window& w);

// Top-left corners (i, j) of contiguous 3x3 minors of g that are not 1.
std::vector<MinorFailure> check_unit_minors(const TilingGrid& g, bool half, std::size_t* checked = nullptr);

// Entry positions of the closed band modulo the glide symmetry: n(n-4).
std::size_t count_distinct_entries(const CoefficientRow& coeffs);

}  // namespace frieze
