#pragma once

#include <map>
#include <random>
#include <vector>

#include "frieze/arithmetic.hpp"
#include "frieze/frieze2.hpp"
#include "frieze/matrix.hpp"
#include "frieze/rational.hpp"

namespace oracle {

using frieze::Rat;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20111017);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// Nonzero rational with small numerator and denominator.
inline Rat small_rat(long span = 9) {
  long num = 0;
  while (num == 0) num = uniform(-span, span);
  return Rat(num) / Rat(uniform(1, span));
}

inline Rat positive_rat(long span = 9) { return Rat(uniform(1, span)) / Rat(uniform(1, span)); }

// Laplace expansion along the first row.
inline Rat cofactor_det(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rat(1);
  if (n == 1) return m[0][0];
  Rat total(0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Rat>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rat> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Rat term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

// Entries by the diamond rule alone, row by row downward:
// v(r+1, h) = (v(r, h-1) v(r, h+1) - v(r, h)) / v(r-1, h).
// Returns rows -1..depth-1 over columns lo..hi (narrowing by one per row);
// a zero divisor leaves the cell empty.
struct DiamondGrid {
  long lo, hi;
  std::map<std::pair<long, long>, Rat> cells;
  const Rat* get(long r, long h) const {
    auto it = cells.find({r, h});
    return it == cells.end() ? nullptr : &it->second;
  }
};

inline DiamondGrid diamond_rows(const frieze::CoefficientRow& c, int depth) {
  DiamondGrid g;
  g.lo = -4L * c.n();
  g.hi = 4L * c.n();
  for (long h = g.lo; h <= g.hi; ++h) {
    g.cells[{-1, h}] = Rat(1);
    g.cells[{0, h}] = c.at_col(h);
  }
  for (long r = 0; r + 1 < depth; ++r) {
    for (long h = g.lo + r + 1; h <= g.hi - r - 1; ++h) {
      const Rat* w = g.get(r, h - 1);
      const Rat* e = g.get(r, h + 1);
      const Rat* m = g.get(r, h);
      const Rat* up = g.get(r - 1, h);
      if (!w || !e || !m || !up || up->is_zero()) continue;
      g.cells[{r + 1, h}] = (*w * *e - *m) / *up;
    }
  }
  return g;
}

inline frieze::CoefficientRow random_row(int n, long span = 6) {
  std::vector<Rat> v;
  for (int k = 0; k < 2 * n; ++k) v.push_back(small_rat(span));
  return frieze::CoefficientRow(n, v);
}

inline frieze::CoefficientRow integer_row(int n, long lo, long hi) {
  std::vector<Rat> v;
  for (int k = 0; k < 2 * n; ++k) v.push_back(Rat(uniform(lo, hi)));
  return frieze::CoefficientRow(n, v);
}

inline frieze::Tuple tuple_of(std::initializer_list<long> xs) { return frieze::Tuple(xs.begin(), xs.end()); }

// First rows printed in the classification of widths 1 and 2, plus the
// trivial width-0 row.
inline frieze::Tuple unit_square() { return frieze::Tuple(8, 1); }
inline frieze::Tuple pentagon() { return tuple_of({1, 1, 2, 3, 2, 1, 1, 2, 3, 2}); }
inline frieze::Tuple hexagon_twos() { return frieze::Tuple(12, 2); }

struct PrintedWidthTwo {
  frieze::Tuple row0;
  frieze::Tuple row1;
  std::size_t orbit;
};

inline std::vector<PrintedWidthTwo> width_two_patterns() {
  return {
      {tuple_of({2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}), tuple_of({2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}), 1},
      {tuple_of({1, 3, 5, 2, 1, 3, 5, 2, 1, 3, 5, 2}), tuple_of({5, 2, 1, 3, 5, 2, 1, 3, 5, 2, 1, 3}), 8},
      {tuple_of({1, 1, 2, 4, 4, 2, 1, 1, 2, 4, 4, 2}), tuple_of({1, 1, 2, 4, 4, 2, 1, 1, 2, 4, 4, 2}), 6},
      {tuple_of({1, 1, 3, 6, 3, 1, 1, 2, 3, 3, 3, 2}), tuple_of({1, 2, 3, 3, 3, 2, 1, 1, 3, 6, 3, 1}), 12},
      {tuple_of({1, 1, 4, 6, 2, 1, 2, 3, 2, 2, 4, 3}), tuple_of({2, 3, 2, 2, 4, 3, 1, 1, 4, 6, 2, 1}), 24},
  };
}

}  // namespace oracle
