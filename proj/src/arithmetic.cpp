#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>

#include "frieze/arithmetic.hpp"

namespace frieze {

CoefficientRow to_coefficients(const Tuple& t) {
  if (t.size() % 2 != 0 || t.size() < 8) throw ContractError("a first-row tuple has 2n >= 8 entries");
  std::vector<Rat> v;
  v.reserve(t.size());
  for (std::int64_t x : t) v.emplace_back(static_cast<long long>(x));
  return CoefficientRow(static_cast<int>(t.size() / 2), std::move(v));
}

Tuple to_tuple(const CoefficientRow& c) {
  Tuple t;
  t.reserve(c.values().size());
  for (const Rat& x : c.values()) {
    if (!x.is_integer()) throw ContractError("coefficient " + x.str() + " is not an integer");
    t.push_back(x.to_int64());
  }
  return t;
}

bool is_arithmetic(const CoefficientRow& c) {
  if (!is_closed(c)) return false;
  const int m = c.n() - 4;
  if (m == 0) return true;
  const Frieze2Window w = frieze_from_coefficients(c, m);
  for (const Rat& x : w.entries())
    if (!x.is_integer() || x.sign() <= 0) return false;
  return true;
}

ArithFrieze::ArithFrieze(CoefficientRow coeffs) : coeffs_(std::move(coeffs)) {
  if (!is_arithmetic(coeffs_)) throw DomainError("coefficients do not define a closed frieze of positive integers");
}

Tuple rotate(const Tuple& t, long s) {
  const long n = static_cast<long>(t.size());
  Tuple out(t.size());
  if (n == 0) return out;
  for (long k = 0; k < n; ++k) {
    long j = (k + s) % n;
    if (j < 0) j += n;
    out[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(j)];
  }
  return out;
}

Tuple reverse(const Tuple& t) { return Tuple(t.rbegin(), t.rend()); }

std::vector<Orbit> dihedral_orbits(const std::set<Tuple>& tuples) {
  std::map<Tuple, std::set<Tuple>> orbits;
  for (const Tuple& t : tuples) {
    std::set<Tuple> members;
    for (const Tuple& base : {t, reverse(t)})
      for (long s = 0; s < static_cast<long>(t.size()); ++s) members.insert(rotate(base, s));
    Tuple rep = *members.begin();
    orbits[rep].insert(t);
  }
  std::vector<Orbit> out;
  for (auto& [rep, seen] : orbits) {
    // Orbit size counts every member, not just those passed in.
    std::set<Tuple> members;
    for (const Tuple& base : {rep, reverse(rep)})
      for (long s = 0; s < static_cast<long>(rep.size()); ++s) members.insert(rotate(base, s));
    out.push_back({rep, members.size()});
  }
  std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) {
    return a.size != b.size ? a.size < b.size : a.representative < b.representative;
  });
  return out;
}

namespace {

std::vector<Rat> rotated_values(const CoefficientRow& c, long s) { return c.rotated(s).values(); }

CoefficientRow unrotate(std::vector<Rat> values, long s) {
  const int n = static_cast<int>(values.size() / 2);
  return CoefficientRow(n, std::move(values)).rotated(-s);
}

}  // namespace

Polygon3 stabilization_polygon(const ArithFrieze& f) {
  const CoefficientRow& c = f.coeffs();
  const Polygon3 p = solve_polygon(c);
  const long n = c.n();
  const Rat& b1 = c.values()[0];
  const Rat& a1 = c.values()[1];
  const Rat& b2 = c.values()[2];
  const Vec3& vn = p.at(n);
  const Vec3& vn1 = p.at(n - 1);
  const Vec3& vn2 = p.at(n - 2);
  const Rat x = a1 + b2 + 1;
  const Rat y = b1 + 1;
  Vec3 w;
  for (std::size_t k = 0; k < 3; ++k) w[k] = x * vn[k] - y * vn1[k] + vn2[k];
  Polygon3 out;
  out.n = static_cast<int>(n + 1);
  out.vertices.push_back(w);
  out.vertices.insert(out.vertices.end(), p.vertices.begin(), p.vertices.end());
  return out;
}

ArithFrieze stabilize(const ArithFrieze& f, long cut) {
  const long s = cut - 3;
  const std::vector<Rat> t = rotated_values(f.coeffs(), s);
  std::vector<Rat> u{t[0] + 1, t[1] + t[2] + 1, t[2] + 1, Rat(1), Rat(1), t[3] + 1, t[4] + t[3] + 1, t[5] + 1};
  u.insert(u.end(), t.begin() + 6, t.end());
  const CoefficientRow framed(f.n() + 1, u);

  const Polygon3 poly = stabilization_polygon(ArithFrieze(CoefficientRow(f.n(), t)));
  if (polygon_to_coefficients(poly) != framed) throw DomainError("stabilization polygon does not reproduce the new coefficients");
  if (!is_convex(poly)) throw DomainError("stabilization polygon is not convex");
  return ArithFrieze(unrotate(std::move(u), s));
}

ArithFrieze connected_sum(const ArithFrieze& f, const ArithFrieze& g, long cut_f, long cut_g) {
  const long s = cut_f - 3;
  const std::vector<Rat> t = rotated_values(f.coeffs(), s);
  const std::vector<Rat> u = rotated_values(g.coeffs(), cut_g);
  const std::size_t k2 = u.size();  // 2k
  std::vector<Rat> out{t[0] + u[0], t[1] + u[1] + t[2] * u[0], t[2] + u[2]};
  out.insert(out.end(), u.begin() + 3, u.begin() + static_cast<long>(k2 - 3));
  out.push_back(t[3] + u[k2 - 3]);
  out.push_back(t[4] + u[k2 - 2] + t[3] * u[k2 - 1]);
  out.push_back(t[5] + u[k2 - 1]);
  out.insert(out.end(), t.begin() + 6, t.end());

  const int n_out = static_cast<int>(out.size() / 2);
  const CoefficientRow framed(n_out, out);
  if (!is_closed(framed)) throw DomainError("connected sum is not closed");
  const long k = static_cast<long>(k2 / 2);
  MatExact lhs = MatExact::identity(3);
  for (long j = 1; j <= k; ++j) lhs = lhs * companion_matrix(framed.a(j), framed.b(j));
  const CoefficientRow tf(f.n(), t);
  MatExact rhs = MatExact::identity(3);
  for (long j = 1; j <= 3; ++j) rhs = rhs * companion_matrix(tf.a(j), tf.b(j));
  if (lhs != rhs) throw DomainError("gluing identity fails for the connected sum");
  return ArithFrieze(unrotate(std::move(out), s));
}

InfiniteFrieze::InfiniteFrieze(long rows, long cols, std::vector<std::optional<Rat>> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows < 0 || cols < 0 || cells_.size() != static_cast<std::size_t>(rows * cols)) throw ContractError("grid shape mismatch");
}

const std::optional<Rat>& InfiniteFrieze::at(long r, long h) const {
  static const std::optional<Rat> one{Rat(1)};
  static const std::optional<Rat> none;
  if (r == -1) return one;
  if (r < 0 || r >= rows_ || h < 1 || h > cols_) return none;
  return cells_[static_cast<std::size_t>(r * cols_ + h - 1)];
}

std::vector<long> unit_boundary(UnitShape shape, long rows) {
  std::vector<long> pos(static_cast<std::size_t>(std::max(rows, 0L)));
  for (long r = 0; r < rows; ++r) {
    switch (shape) {
      case UnitShape::Staircase: pos[static_cast<std::size_t>(r)] = r + 2; break;
      case UnitShape::TwoColumns: pos[static_cast<std::size_t>(r)] = 1; break;
      case UnitShape::ZigZag: pos[static_cast<std::size_t>(r)] = 1 + r % 2; break;
    }
  }
  return pos;
}

InfiniteFrieze grow_from_unit_zigzag(const std::vector<long>& pos, long rows, long cols) {
  if (rows < 1 || cols < 1) throw ContractError("rows and cols must be positive");
  if (static_cast<long>(pos.size()) < rows + cols) throw ContractError("need at least rows + cols boundary positions");
  for (std::size_t r = 1; r < pos.size(); ++r)
    if (std::abs(pos[r] - pos[r - 1]) > 1) throw ContractError("boundary rows " + std::to_string(r - 1) + " and " + std::to_string(r) + " are not adjacent");

  const long depth = static_cast<long>(pos.size());
  std::vector<std::vector<std::optional<Rat>>> g(static_cast<std::size_t>(depth), std::vector<std::optional<Rat>>(static_cast<std::size_t>(cols + 1)));
  auto get = [&](long r, long h) -> std::optional<Rat> {
    if (r == -1) return Rat(1);
    if (r < 0 || r >= depth || h < 1 || h > cols) return std::nullopt;
    return g[static_cast<std::size_t>(r)][static_cast<std::size_t>(h)];
  };
  for (long r = 0; r < depth; ++r)
    for (long h = pos[static_cast<std::size_t>(r)]; h <= pos[static_cast<std::size_t>(r)] + 1; ++h)
      if (h >= 1 && h <= cols) g[static_cast<std::size_t>(r)][static_cast<std::size_t>(h)] = Rat(1);

  for (long h = 1; h <= cols; ++h) {
    for (long r = 0; r < depth; ++r) {
      if (h < pos[static_cast<std::size_t>(r)] + 2) continue;
      auto west = get(r, h - 2), mid = get(r, h - 1), north = get(r - 1, h - 1), south = get(r + 1, h - 1);
      if (!west || !mid || !north || !south) continue;
      if (west->is_zero()) throw ChartBoundaryError(r, h - 2, "zero west entry of the diamond");
      g[static_cast<std::size_t>(r)][static_cast<std::size_t>(h)] = (*mid + *north * *south) / *west;
    }
  }

  std::vector<std::optional<Rat>> cells;
  cells.reserve(static_cast<std::size_t>(rows * cols));
  for (long r = 0; r < rows; ++r)
    for (long h = 1; h <= cols; ++h) cells.push_back(g[static_cast<std::size_t>(r)][static_cast<std::size_t>(h)]);
  return InfiniteFrieze(rows, cols, std::move(cells));
}

}  // namespace frieze
