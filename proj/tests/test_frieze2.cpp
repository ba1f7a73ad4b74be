#include <doctest.h>

#include <algorithm>

#include "frieze/arithmetic.hpp"
#include "frieze/errors.hpp"
#include "frieze/frieze2.hpp"
#include "frieze/polygon.hpp"
#include "support.hpp"

using namespace frieze;

namespace {

bool row_is(const Frieze2Window& w, long r, const Rat& v) {
  for (long h = 1; h <= w.columns(); ++h)
    if (w.at(r, h) != v) return false;
  return true;
}

// The closure test read off the propagated rows alone.
bool shows_closing_rows(const CoefficientRow& c) {
  const long n = c.n();
  const Frieze2Window w = frieze_from_coefficients(c, static_cast<int>(n - 1));
  return row_is(w, n - 4, Rat(1)) && row_is(w, n - 3, Rat(0)) && row_is(w, n - 2, Rat(0));
}

}  // namespace

TEST_CASE("doubled indices map to rows and columns") {
  const DoubledIndex d = DoubledIndex::from_row_col(2, 5);
  CHECK(d.p == 7);
  CHECK(d.q == 3);
  CHECK(d.row() == 2);
  CHECK(d.col() == 5);
  CHECK_FALSE(d.integer_type());
  CHECK(DoubledIndex::from_row_col(1, 5).integer_type());
  CHECK_THROWS_AS(validate(DoubledIndex{1, 2}), ContractError);
  CHECK_NOTHROW(validate(DoubledIndex{3, 1}));
}

TEST_CASE("coefficient row indexing") {
  const CoefficientRow c(4, {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6), Rat(7), Rat(8)});
  CHECK(c.b(1) == Rat(1));
  CHECK(c.a(1) == Rat(2));
  CHECK(c.a(4) == Rat(8));
  CHECK(c.b(5) == Rat(1));
  CHECK(c.at_col(0) == Rat(8));
  CHECK(c.at_col(-7) == Rat(1));
  CHECK(c.rotated(2).values().front() == Rat(3));
  CHECK(c.reversed().values().front() == Rat(8));
  CHECK_THROWS_AS(CoefficientRow(4, {Rat(1)}), ContractError);
  CHECK_THROWS_AS(CoefficientRow(3, std::vector<Rat>(6, Rat(1))), ContractError);
}

TEST_CASE("recurrence agrees with the diamond rule") {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(oracle::uniform(4, 8));
    const CoefficientRow c = oracle::random_row(n);
    const int depth = n + 2;
    const Frieze2Window w = frieze_from_coefficients(c, depth);
    const oracle::DiamondGrid g = oracle::diamond_rows(c, depth);
    std::size_t compared = 0;
    for (long r = 0; r < depth; ++r)
      for (long h = 1; h <= w.columns(); ++h)
        if (const Rat* v = g.get(r, h)) {
          CHECK(*v == w.at(r, h));
          ++compared;
        }
    CHECK(compared > 0);
    CHECK(verify_pattern_rule(w).empty());
  }
}

TEST_CASE("determinant formula agrees with the recurrence") {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(oracle::uniform(4, 7));
    const CoefficientRow c = oracle::random_row(n);
    const Frieze2Window w = frieze_from_coefficients(c, n + 1);
    for (long r = -3; r < w.depth(); ++r)
      for (long h = 1; h <= w.columns(); ++h) CHECK(entry_by_determinant(c, DoubledIndex::from_row_col(r, h)) == w.at(r, h));
  }
  const CoefficientRow c = CoefficientRow::constant(5, Rat(2));
  CHECK_THROWS_AS(entry_by_determinant(c, DoubledIndex::from_row_col(-4, 1)), ContractError);
}

TEST_CASE("rotating the row shifts the window") {
  const CoefficientRow c = oracle::random_row(6);
  const Frieze2Window w = frieze_from_coefficients(c, 4);
  for (long s = -3; s <= 5; ++s) CHECK(frieze_from_coefficients(c.rotated(s), 4) == w.shifted(-s));
}

TEST_CASE("pattern rule flags a corrupted entry") {
  const Frieze2Window w = frieze_from_coefficients(to_coefficients(oracle::pentagon()), 3);
  const Frieze2Window bad = w.with_entry(1, 4, w.at(1, 4) + Rat(1));
  const auto diamonds = verify_pattern_rule(bad);
  CHECK_FALSE(diamonds.empty());
  CHECK(std::find(diamonds.begin(), diamonds.end(), Diamond{0, 4}) != diamonds.end());
}

TEST_CASE("small closed patterns") {
  const CoefficientRow square = to_coefficients(oracle::unit_square());
  CHECK(is_closed(square));
  const Frieze2Window sq = frieze_from_coefficients(square, 3);
  CHECK(row_is(sq, 0, Rat(1)));
  CHECK(row_is(sq, 1, Rat(0)));
  CHECK(row_is(sq, 2, Rat(0)));

  const CoefficientRow penta = to_coefficients(oracle::pentagon());
  CHECK(is_closed(penta));
  CHECK(shows_closing_rows(penta));
  CHECK(frieze_from_coefficients(penta, 2).closed());

  for (const auto& p : oracle::width_two_patterns()) {
    const CoefficientRow c = to_coefficients(p.row0);
    CHECK(is_closed(c));
    const Frieze2Window w = frieze_from_coefficients(c, 2);
    for (long k = 0; k < 12; ++k) CHECK(w.at(1, k + 1) == Rat(p.row1[static_cast<std::size_t>(k)]));
  }
}

TEST_CASE("closure criterion on random integer rows") {
  std::size_t closed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(oracle::uniform(4, 7));
    const CoefficientRow c = oracle::integer_row(n, 1, 4);
    const bool mono = monodromy(c).m == MatExact::identity(3);
    CHECK(mono == shows_closing_rows(c));
    closed += mono;
  }
  for (int n = 4; n <= 6; ++n)
    for (const Tuple& t : enumerate({n, 8, 1})) {
      CHECK(shows_closing_rows(to_coefficients(t)));
      ++closed;
    }
  CHECK(closed > 50);
}

TEST_CASE("closed patterns have the three symmetries") {
  for (int n = 4; n <= 6; ++n)
    for (const Tuple& t : enumerate({n, 8, 1})) {
      const CoefficientRow c = to_coefficients(t);
      CHECK(verify_closed_symmetries(c).all());
      CHECK(count_distinct_entries(c) == static_cast<std::size_t>(n * (n - 4)));
    }
  const CoefficientRow open = CoefficientRow::constant(5, Rat(2));
  CHECK_THROWS_AS(verify_closed_symmetries(open), NotClosedError);
  CHECK_THROWS_AS(count_distinct_entries(open), NotClosedError);
}

TEST_CASE("interleaved subgrids have unit minors") {
  for (const auto& p : oracle::width_two_patterns()) {
    const Sl3Report rep = sl3_subgrids(frieze_from_coefficients(to_coefficients(p.row0), 5));
    CHECK(rep.ok());
  }
  for (int trial = 0; trial < 20; ++trial) {
    const CoefficientRow c = oracle::random_row(static_cast<int>(oracle::uniform(4, 7)));
    const Sl3Report rep = sl3_subgrids(frieze_from_coefficients(c, 4));
    CHECK(rep.ok());
  }
  const Sl3Report rep = sl3_subgrids(frieze_from_coefficients(to_coefficients(oracle::pentagon()), 3));
  REQUIRE(rep.ok());
  // Perturb one cell that lies in the middle of the integer grid.
  TilingGrid g = rep.integer_grid;
  long ci = 0, cj = 0;
  for (long i = g.i0 + 2; i < g.i0 + g.rows - 2 && !ci; ++i)
    for (long j = g.j0 + 2; j < g.j0 + g.cols - 2; ++j)
      if (g.at(i, j) && i - j >= 0) {
        ci = i;
        cj = j;
        break;
      }
  REQUIRE(ci != 0);
  g = g.with(ci, cj, *g.at(ci, cj) + Rat(1));
  CHECK_FALSE(check_unit_minors(g, false).empty());
  CHECK_THROWS_AS(sl3_subgrids(frieze_from_coefficients(to_coefficients(oracle::pentagon()), 1)), ContractError);
}

TEST_CASE("window contracts") {
  CHECK_THROWS_AS(frieze_from_coefficients(to_coefficients(oracle::pentagon()), 0), ContractError);
  CHECK_THROWS_AS(Frieze2Window(5, 2, std::vector<Rat>(5), false), ContractError);
  const Frieze2Window w = frieze_from_coefficients(to_coefficients(oracle::pentagon()), 2);
  CHECK(w.at(-1, 7) == Rat(1));
  CHECK(w.at(-2, 7) == Rat(0));
  CHECK(w.at(-3, 7) == Rat(0));
  CHECK(w.at(0, 11) == w.at(0, 1));
  CHECK(w.coefficient_row() == to_coefficients(oracle::pentagon()));
}
