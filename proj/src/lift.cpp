#include <Eigen/Dense>

#include <cmath>
#include <optional>

#include "frieze/polygon.hpp"

namespace frieze {

double det3f(const Vec3f& u, const Vec3f& v, const Vec3f& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - v[0] * (u[1] * w[2] - u[2] * w[1]) + w[0] * (u[1] * v[2] - u[2] * v[1]);
}

namespace {

// Solves s_{i-1} + s_i + s_{i+1} = rhs_i over GF(2), cyclic in i.
std::optional<std::vector<int>> solve_signs(const std::vector<int>& rhs) {
  const std::size_t n = rhs.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][(i + n - 1) % n] ^= 1;
    a[i][i] ^= 1;
    a[i][(i + 1) % n] ^= 1;
    a[i][n] = rhs[i];
  }
  std::vector<std::size_t> pivot_of_col(n, n);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && !a[p][c]) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && a[i][c])
        for (std::size_t j = c; j <= n; ++j) a[i][j] ^= a[r][j];
    pivot_of_col[c] = r++;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a[i][n]) return std::nullopt;
  std::vector<int> s(n, 0);
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_of_col[c] < n) s[c] = a[pivot_of_col[c]][n];
  return s;
}

}  // namespace

LiftResult lift_projective(const std::vector<Vec3f>& points) {
  const std::size_t n = points.size();
  if (n < 4) throw ContractError("lifting needs at least 4 points");
  if (n % 3 == 0) throw ContractError("lifting is not unique when 3 divides n");

  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = det3f(points[(i + n - 1) % n], points[i], points[(i + 1) % n]);
    if (d[i] == 0.0 || !std::isfinite(d[i]))
      throw DegeneracyError("points " + std::to_string(i) + " +/- 1 are collinear in the projective plane");
  }

  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    c(row, static_cast<Eigen::Index>((i + n - 1) % n)) += 1.0;
    c(row, row) += 1.0;
    c(row, static_cast<Eigen::Index>((i + 1) % n)) += 1.0;
    rhs(row) = -std::log(std::abs(d[i]));
  }
  Eigen::VectorXd logt = c.partialPivLu().solve(rhs);

  LiftResult out;
  std::vector<int> negative(n);
  for (std::size_t i = 0; i < n; ++i) negative[i] = d[i] < 0 ? 1 : 0;
  auto signs = solve_signs(negative);
  if (!signs) {
    for (auto& x : negative) x ^= 1;
    signs = solve_signs(negative);
    out.negative_orientation = true;
  }
  if (!signs) throw DegeneracyError("no sign assignment for the lift");

  out.vertices.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = std::exp(logt(static_cast<Eigen::Index>(i)));
    if ((*signs)[i]) t = -t;
    for (int k = 0; k < 3; ++k) out.vertices[i][static_cast<std::size_t>(k)] = t * points[i][static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace frieze
