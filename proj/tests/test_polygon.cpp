#include <doctest.h>

#include <cmath>
#include <optional>

#include "frieze/arithmetic.hpp"
#include "frieze/cluster.hpp"
#include "frieze/errors.hpp"
#include "frieze/polygon.hpp"
#include "support.hpp"

using namespace frieze;

namespace {

std::vector<CoefficientRow> closed_rows() {
  std::vector<CoefficientRow> rows;
  for (int n = 4; n <= 6; ++n)
    for (const Tuple& t : enumerate({n, 8, 1})) rows.push_back(to_coefficients(t));
  // Rational closed rows from random chart values.
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(oracle::uniform(5, 8));
    std::vector<Rat> x, y;
    for (int k = 0; k < n - 4; ++k) {
      x.push_back(oracle::positive_rat());
      y.push_back(oracle::positive_rat());
    }
    rows.push_back(frieze_from_double_column(n, x, y).coefficient_row());
  }
  return rows;
}

Vec3 transform(const MatExact& g, const Vec3& v) {
  Vec3 out{Rat(0), Rat(0), Rat(0)};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) out[r] += g(r, c) * v[c];
  return out;
}

}  // namespace

TEST_CASE("companion matrices multiply to the monodromy") {
  const CoefficientRow c = oracle::random_row(5);
  MatExact m = MatExact::identity(3);
  for (long j = 1; j <= 5; ++j) m = m * companion_matrix(c.a(j), c.b(j));
  CHECK(monodromy(c).m == m);
  CHECK(det(companion_matrix(Rat(3), Rat(7))) == Rat(1));
  CHECK_FALSE(is_closed(CoefficientRow::constant(5, Rat(2))));
}

TEST_CASE("polygon of a closed row") {
  for (const CoefficientRow& c : closed_rows()) {
    CHECK(is_closed(c));
    const Polygon3 poly = solve_polygon(c);
    REQUIRE(poly.n == c.n());
    for (long i = 1; i <= poly.n; ++i) {
      CHECK(det3(poly.at(i - 1), poly.at(i), poly.at(i + 1)) == Rat(1));
      // V_i = a_i V_{i-1} - b_i V_{i-2} + V_{i-3}
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(poly.at(i)[k] == c.a(i) * poly.at(i - 1)[k] - c.b(i) * poly.at(i - 2)[k] + poly.at(i - 3)[k]);
    }
    CHECK(polygon_to_coefficients(poly) == c);
  }
  CHECK_THROWS_AS(solve_polygon(CoefficientRow::constant(5, Rat(2))), NotClosedError);
}

TEST_CASE("polygon determinants reproduce the frieze") {
  for (const CoefficientRow& c : closed_rows()) {
    const Polygon3 poly = solve_polygon(c);
    const Frieze2Window w = frieze_from_coefficients(c, c.n());
    for (long r = -3; r < w.depth(); ++r)
      for (long h = 1; h <= w.columns(); ++h) {
        const DoubledIndex d = DoubledIndex::from_row_col(r, h);
        CHECK(polygon_to_frieze(poly, d) == w.at(d));
      }
  }
}

TEST_CASE("coefficients are invariant under unimodular maps") {
  const MatExact g{{2, 1, 0}, {3, 2, 5}, {0, 0, 1}};
  REQUIRE(det(g) == Rat(1));
  for (const CoefficientRow& c : closed_rows()) {
    Polygon3 poly = solve_polygon(c);
    for (Vec3& v : poly.vertices) v = transform(g, v);
    CHECK(polygon_to_coefficients(poly) == c);
  }
}

TEST_CASE("polygon contracts") {
  Polygon3 poly = solve_polygon(to_coefficients(oracle::pentagon()));
  poly.vertices[2][0] += Rat(1);
  CHECK_THROWS_AS(polygon_to_coefficients(poly), ContractError);
  Polygon3 tiny;
  tiny.n = 3;
  tiny.vertices.assign(3, Vec3{Rat(1), Rat(0), Rat(0)});
  CHECK_THROWS_AS(polygon_to_coefficients(tiny), ContractError);
  CHECK_THROWS_AS(polygon_to_frieze(poly, DoubledIndex{2, 1}), ContractError);
}

TEST_CASE("arithmetic polygons are convex, non-positive ones are not") {
  for (int n = 4; n <= 6; ++n)
    for (const Tuple& t : enumerate({n, 8, 1})) CHECK(is_convex(solve_polygon(to_coefficients(t))));
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(oracle::uniform(5, 8));
    std::vector<Rat> x, y;
    for (int k = 0; k < n - 4; ++k) {
      x.push_back(oracle::positive_rat());
      y.push_back(oracle::positive_rat());
    }
    CHECK(is_convex(solve_polygon(frieze_from_double_column(n, x, y).coefficient_row())));
    x[static_cast<std::size_t>(oracle::uniform(0, n - 5))] *= Rat(-1);
    std::optional<CoefficientRow> flipped;
    try {
      flipped = frieze_from_double_column(n, x, y).coefficient_row();
    } catch (const ChartBoundaryError&) {
      continue;  // the flip put a zero on the propagation path
    }
    CHECK_FALSE(is_convex(solve_polygon(*flipped)));
  }
}

TEST_CASE("lifting recovers unit consecutive determinants") {
  for (const int n : {4, 5, 7, 8}) {
    for (const Tuple& t : enumerate({n, 4, 1})) {
      const Polygon3 poly = solve_polygon(to_coefficients(t));
      std::vector<Vec3f> pts;
      for (const Vec3& v : poly.vertices) {
        const double s = static_cast<double>(oracle::uniform(1, 50)) / 7.0 * (oracle::uniform(0, 1) ? 1.0 : -1.0);
        pts.push_back({v[0].to_double() * s, v[1].to_double() * s, v[2].to_double() * s});
      }
      const LiftResult lift = lift_projective(pts);
      CHECK_FALSE(lift.negative_orientation);
      REQUIRE(lift.vertices.size() == pts.size());
      for (long i = 0; i < n; ++i) {
        const auto& u = lift.vertices[static_cast<std::size_t>((i + n - 1) % n)];
        const auto& v = lift.vertices[static_cast<std::size_t>(i)];
        const auto& w = lift.vertices[static_cast<std::size_t>((i + 1) % n)];
        CHECK(std::abs(det3f(u, v, w) - 1.0) < 1e-9);
        // Each lifted vertex is a rescaling of the input point.
        const auto& p = pts[static_cast<std::size_t>(i)];
        const double ratio = v[0] != 0 ? v[0] / p[0] : (v[1] != 0 ? v[1] / p[1] : v[2] / p[2]);
        for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(v[k] - ratio * p[k]) < 1e-9 * (1 + std::abs(v[k])));
      }
      // The exact polygon is recovered when the scaling is removed.
      for (long i = 0; i < n; ++i)
        for (std::size_t k = 0; k < 3; ++k)
          CHECK(std::abs(lift.vertices[static_cast<std::size_t>(i)][k] - poly.vertices[static_cast<std::size_t>(i)][k].to_double()) <
                1e-9 * (1 + std::abs(poly.vertices[static_cast<std::size_t>(i)][k].to_double())));
    }
  }
}

TEST_CASE("lifting contracts") {
  std::vector<Vec3f> six;
  for (int k = 0; k < 6; ++k) six.push_back({std::cos(k), std::sin(k), 1.0});
  CHECK_THROWS_AS(lift_projective(six), ContractError);
  std::vector<Vec3f> flat{{1, 0, 1}, {2, 0, 1}, {3, 0, 1}, {0, 1, 1}, {0, 2, 1}};
  CHECK_THROWS_AS(lift_projective(flat), DegeneracyError);
  CHECK_THROWS_AS(lift_projective({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), ContractError);
}
