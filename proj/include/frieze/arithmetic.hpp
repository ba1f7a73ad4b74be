#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "frieze/errors.hpp"
#include "frieze/frieze2.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

// First-row tuple (b_1, a_1, ..., b_n, a_n) of a frieze with integer entries.
using Tuple = std::vector<std::int64_t>;

CoefficientRow to_coefficients(const Tuple& t);
// Throws ContractError if some coefficient is not an integer that fits.
Tuple to_tuple(const CoefficientRow& c);

// Closed, with every entry of rows 0..n-5 a positive integer.
bool is_arithmetic(const CoefficientRow& c);

class ArithFrieze {
 public:
  // Throws DomainError unless is_arithmetic(coeffs).
  explicit ArithFrieze(CoefficientRow coeffs);

  const CoefficientRow& coeffs() const { return coeffs_; }
  int n() const { return coeffs_.n(); }
  int width() const { return coeffs_.n() - 4; }

  friend bool operator==(const ArithFrieze&, const ArithFrieze&) = default;

 private:
  CoefficientRow coeffs_;
};

struct SearchConfig {
  int n = 4;
  std::int64_t value_bound = 1;  // cap on the double-column chart values
  int parallel_width = 1;        // worker threads
};

// Every arithmetic frieze whose double column at columns 2, 3 has entries
// <= value_bound, reported as all of its distinct first-row tuples (every
// shift of the first row counts separately, reflections included when they
// occur as shifts). Throws DomainError if an entry overflows 64 bits.
std::set<Tuple> enumerate(const SearchConfig& cfg);

struct Orbit {
  Tuple representative;  // lexicographically smallest member
  std::size_t size = 0;
  friend bool operator==(const Orbit&, const Orbit&) = default;
};

// Orbits under cyclic shifts and reversal of the first row, sorted by size
// then representative.
std::vector<Orbit> dihedral_orbits(const std::set<Tuple>& tuples);

// Cyclic shift t'[k] = t[k + s] and reversal, on plain tuples.
Tuple rotate(const Tuple& t, long s);
Tuple reverse(const Tuple& t);

// Polygon of stabilize(f, 3) in the frame where the new vertex is V_1:
// W = (a_1 + b_2 + 1) V_n - (b_1 + 1) V_{n-1} + V_{n-2}, then V_1..V_n of f.
Polygon3 stabilization_polygon(const ArithFrieze& f);

// Inserts 1, 1 at values[cut], values[cut + 1] and rewrites three neighbours
// on each side. Checks the polygon witness and throws DomainError if it fails.
ArithFrieze stabilize(const ArithFrieze& f, long cut);

// Splices the interior of g into f. With cut_f = 3 and cut_g = 0 the output is
// (b_1+b'_1, a_1+a'_1+b_2 b'_1, b_2+b'_2, a'_2, ..., b'_{k-1},
//  a_2+a'_{k-1}, b_3+b'_k+a_2 a'_k, a_3+a'_k, b_4, ..., a_n);
// other cuts rotate f by cut_f - 3 and g by cut_g first, and the output is
// rotated back by cut_f - 3. Verifies closure and the gluing identity
// N'_1 ... N'_k = N_1 N_2 N_3, throwing DomainError if either fails.
ArithFrieze connected_sum(const ArithFrieze& f, const ArithFrieze& g, long cut_f = 3, long cut_g = 0);

// Semi-infinite pattern bounded above by the row of 1's and on the left by a
// double zig-zag of 1's at columns pos[r], pos[r] + 1. Cells left of the
// zig-zag, or too close to the last boundary row to be determined, are empty.
class InfiniteFrieze {
 public:
  InfiniteFrieze(long rows, long cols, std::vector<std::optional<Rat>> cells);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  // Row r in 0..rows-1, column h in 1..cols; row -1 reads 1.
  const std::optional<Rat>& at(long r, long h) const;

 private:
  long rows_;
  long cols_;
  std::vector<std::optional<Rat>> cells_;
};

enum class UnitShape { Staircase, TwoColumns, ZigZag };

// Boundary positions for rows 0..rows-1: r + 2, 1, and 1 + (r mod 2).
std::vector<long> unit_boundary(UnitShape shape, long rows);

// Grows rows 0..rows-1 and columns 1..cols by the diamond rule. Extra
// boundary rows beyond `rows` are used to determine the lower cells; throws
// ContractError if fewer than rows + cols boundary positions are given.
InfiniteFrieze grow_from_unit_zigzag(const std::vector<long>& pos, long rows, long cols);

}  // namespace frieze
