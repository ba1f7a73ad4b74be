#include "frieze/polygon.hpp"

#include <utility>

namespace frieze {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

Vec3 combine(const Rat& x, const Vec3& u, const Rat& y, const Vec3& v, const Vec3& w) {
  return {x * u[0] + y * v[0] + w[0], x * u[1] + y * v[1] + w[1], x * u[2] + y * v[2] + w[2]};
}

}  // namespace

Rat det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - v[0] * (u[1] * w[2] - u[2] * w[1]) + w[0] * (u[1] * v[2] - u[2] * v[1]);
}

const Vec3& Polygon3::at(long i) const { return vertices[static_cast<std::size_t>(mod(i - 1, n))]; }

MatExact companion_matrix(const Rat& a, const Rat& b) { return MatExact{{0, 0, 1}, {1, 0, -b}, {0, 1, a}}; }

Monodromy monodromy(const CoefficientRow& coeffs) {
  MatExact m = MatExact::identity(3);
  for (long j = 1; j <= coeffs.n(); ++j) m = m * companion_matrix(coeffs.a(j), coeffs.b(j));
  return {m};
}

bool is_closed(const CoefficientRow& coeffs) { return monodromy(coeffs).m == MatExact::identity(3); }

Polygon3 solve_polygon(const CoefficientRow& coeffs) {
  Monodromy mono = monodromy(coeffs);
  if (mono.m != MatExact::identity(3)) throw NotClosedError(mono.m);
  const int n = coeffs.n();
  std::vector<Vec3> v;
  v.reserve(static_cast<std::size_t>(n) + 3);
  v.push_back({1, 0, 0});
  v.push_back({0, 1, 0});
  v.push_back({0, 0, 1});
  for (long i = 1; i <= n; ++i) {
    const std::size_t k = v.size();
    v.push_back(combine(coeffs.a(i), v[k - 1], -coeffs.b(i), v[k - 2], v[k - 3]));
  }
  Polygon3 poly;
  poly.n = n;
  poly.vertices.assign(v.begin() + 3, v.end());
  return poly;
}

Rat polygon_to_frieze(const Polygon3& poly, const DoubledIndex& d) {
  validate(d);
  if (d.integer_type()) {
    const long i = d.p / 2;
    const long j = d.q / 2;
    return det3(poly.at(j - 3), poly.at(j - 2), poly.at(i));
  }
  const long i = (d.p + 1) / 2;
  const long j = (d.q + 1) / 2;
  return det3(poly.at(i - 1), poly.at(i), poly.at(j - 3));
}

CoefficientRow polygon_to_coefficients(const Polygon3& poly) {
  const long n = poly.n;
  if (n < 4 || poly.vertices.size() != static_cast<std::size_t>(n)) throw ContractError("polygon needs n >= 4 vertices");
  for (long i = 1; i <= n; ++i) {
    if (det3(poly.at(i - 1), poly.at(i), poly.at(i + 1)) != 1)
      throw ContractError("consecutive determinant at vertex " + std::to_string(i) + " is not 1");
  }
  std::vector<Rat> values;
  values.reserve(static_cast<std::size_t>(2 * n));
  for (long i = 1; i <= n; ++i) {
    const Vec3& v0 = poly.at(i);
    const Vec3& v1 = poly.at(i - 1);
    const Vec3& v2 = poly.at(i - 2);
    const Vec3& v3 = poly.at(i - 3);
    Rat d = det3(v1, v2, v3);
    if (d.is_zero()) throw DegeneracyError("vertices " + std::to_string(i - 3) + ".." + std::to_string(i - 1) + " are coplanar");
    Rat alpha = det3(v0, v2, v3) / d;
    Rat beta = det3(v1, v0, v3) / d;
    Rat gamma = det3(v1, v2, v0) / d;
    if (gamma != 1) throw DegeneracyError("vertex " + std::to_string(i) + " is not of the form a V - b V + V");
    values.push_back(-beta);
    values.push_back(alpha);
  }
  return CoefficientRow(static_cast<int>(n), std::move(values));
}

bool is_convex(const Polygon3& poly) {
  const long n = poly.n;
  for (long i = 1; i <= n; ++i) {
    for (long j = i + 1; j <= i + n - 2; ++j) {
      if (det3(poly.at(i - 1), poly.at(i), poly.at(j)).sign() <= 0) return false;
    }
  }
  return true;
}

}  // namespace frieze
