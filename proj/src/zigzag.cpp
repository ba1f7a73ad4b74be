#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "frieze/cluster.hpp"

namespace frieze {

namespace {

long floor_even(long x) { return x % 2 == 0 ? x : x - 1; }

std::size_t idx(long i) { return static_cast<std::size_t>(i); }

}  // namespace

std::vector<long> ZigZag::positions() const {
  std::vector<long> pos;
  pos.reserve(moves.size() + 1);
  pos.push_back(start);
  for (Move mv : moves) pos.push_back(pos.back() + static_cast<int>(mv));
  return pos;
}

ZigZag ZigZag::from_positions(int n, const std::vector<long>& pos) {
  if (n < 5 || pos.size() != static_cast<std::size_t>(n - 4)) throw ContractError("a zig-zag needs n >= 5 and n - 4 rows");
  ZigZag z;
  z.n = n;
  z.start = pos.front();
  for (std::size_t r = 1; r < pos.size(); ++r) {
    const long d = pos[r] - pos[r - 1];
    if (std::abs(d) > 1) throw ContractError("zig-zag rows " + std::to_string(r - 1) + " and " + std::to_string(r) + " are not adjacent");
    z.moves.push_back(static_cast<Move>(d));
  }
  return z;
}

ZigZag ZigZag::double_column(int n, long h0) { return from_positions(n, std::vector<long>(static_cast<std::size_t>(std::max(n - 4, 0)), h0)); }

void validate(const ZigZag& z) {
  if (z.n < 5) throw ContractError("a zig-zag needs n >= 5");
  if (z.moves.size() != static_cast<std::size_t>(z.n - 5)) throw ContractError("a zig-zag needs n - 5 row transitions");
  for (Move mv : z.moves) {
    const int d = static_cast<int>(mv);
    if (d < -1 || d > 1) throw ContractError("unknown zig-zag transition");
  }
}

int zigzag_vertex(int m, long r, long h) { return ((h - r) % 2 == 0) ? static_cast<int>(r) : m + static_cast<int>(r); }

ElementaryMove elementary_move(const ZigZag& z, long r, int dir) {
  validate(z);
  const int m = z.width();
  if (r < 0 || r >= m) throw ContractError("row out of range for the zig-zag");
  if (dir != 1 && dir != -1) throw ContractError("a move shifts one step left or right");
  std::vector<long> pos = z.positions();
  const long p = pos[idx(r)];
  const long leaving = dir > 0 ? p : p + 1;
  pos[idx(r)] += dir;
  if ((r > 0 && std::abs(pos[idx(r)] - pos[idx(r - 1)]) > 1) || (r + 1 < m && std::abs(pos[idx(r)] - pos[idx(r + 1)]) > 1))
    throw ContractError("moving row " + std::to_string(r) + " breaks the zig-zag");
  return {ZigZag::from_positions(z.n, pos), zigzag_vertex(m, r, leaving)};
}

std::vector<std::pair<long, int>> redress_path(const ZigZag& z, long target) {
  validate(z);
  if (target % 2 != 0) throw ContractError("the double column must start at an even column");
  std::vector<long> pos = z.positions();
  std::vector<std::pair<long, int>> path;
  for (;;) {
    auto hi = std::max_element(pos.begin(), pos.end());
    auto lo = std::min_element(pos.begin(), pos.end());
    if (*hi > target) {
      path.emplace_back(hi - pos.begin(), -1);
      --*hi;
    } else if (*lo < target) {
      path.emplace_back(lo - pos.begin(), 1);
      ++*lo;
    } else {
      return path;
    }
  }
}

Quiver zigzag_quiver(const ZigZag& z) {
  validate(z);
  const int m = z.width();
  const std::vector<long> pos = z.positions();
  std::vector<Arrow> arrows;
  for (long r = 0; r < m; ++r) {
    const long p = pos[idx(r)];
    arrows.push_back({zigzag_vertex(m, r, p + 1), zigzag_vertex(m, r, p), 1});
  }
  for (long r = 0; r + 1 < m; ++r) {
    const long p = pos[idx(r)];
    const long q = pos[idx(r + 1)];
    for (long h = p; h <= p + 1; ++h) {
      for (long g = q; g <= q + 1; ++g) {
        const int u = zigzag_vertex(m, r, h);
        const int v = zigzag_vertex(m, r + 1, g);
        if (std::abs(h - g) == 1) {
          arrows.push_back(h < g ? Arrow{u, v, 1} : Arrow{v, u, 1});
        } else if (h == g && p != q) {
          arrows.push_back(p > q ? Arrow{u, v, 1} : Arrow{v, u, 1});
        }
      }
    }
  }
  return Quiver::from_arrows(2 * m, arrows);
}

std::vector<Rat> read_zigzag(const Frieze2Window& w, const ZigZag& z) {
  validate(z);
  if (w.n() != z.n) throw ContractError("window and zig-zag have different n");
  const int m = z.width();
  if (w.depth() < m) throw ContractError("window is too shallow for the zig-zag");
  const std::vector<long> pos = z.positions();
  std::vector<Rat> values(static_cast<std::size_t>(2 * m));
  for (long r = 0; r < m; ++r) {
    for (long h = pos[idx(r)]; h <= pos[idx(r)] + 1; ++h) {
      const Rat& v = w.at(r, h);
      if (v.is_zero()) throw ChartBoundaryError(r, h, "zero entry on the zig-zag");
      values[idx(zigzag_vertex(m, r, h))] = v;
    }
  }
  return values;
}

Frieze2Window frieze_from_double_column(int n, const std::vector<Rat>& x, const std::vector<Rat>& y) {
  if (n < 5) throw ContractError("a double column needs n >= 5");
  const long m = n - 4;
  if (x.size() != idx(m) || y.size() != idx(m)) throw ContractError("a double column needs n - 4 values per column");

  // cols[c][r + 1] is the entry at row r (-1..m), column c + 2.
  const long span = 2L * n + 2;
  std::vector<std::vector<Rat>> cols(idx(span), std::vector<Rat>(idx(m + 2), Rat(1)));
  for (long r = 0; r < m; ++r) {
    for (long c = 0; c < 2; ++c) {
      const long h = c + 2;
      cols[idx(c)][idx(r + 1)] = zigzag_vertex(static_cast<int>(m), r, h) == r ? x[idx(r)] : y[idx(r)];
    }
  }
  for (long c = 2; c < span; ++c) {
    for (long r = 0; r < m; ++r) {
      const Rat& west = cols[idx(c - 2)][idx(r + 1)];
      if (west.is_zero()) throw ChartBoundaryError(r, c, "zero west entry of the diamond");
      const std::vector<Rat>& mid = cols[idx(c - 1)];
      cols[idx(c)][idx(r + 1)] = (mid[idx(r + 1)] + mid[idx(r)] * mid[idx(r + 2)]) / west;
    }
  }

  auto entry = [&](long r, long h) -> const Rat& {
    long c = (h - 2) % (2L * n);
    if (c < 0) c += 2L * n;
    return cols[idx(c)][idx(r + 1)];
  };
  std::vector<Rat> row0;
  row0.reserve(idx(2L * n));
  for (long h = 1; h <= 2L * n; ++h) row0.push_back(entry(0, h));
  Frieze2Window w = frieze_from_coefficients(CoefficientRow(n, std::move(row0)), static_cast<int>(m + 1));

  for (long c = 0; c < 2; ++c)
    for (long r = 0; r < m; ++r)
      if (cols[idx(c + 2L * n)][idx(r + 1)] != cols[idx(c)][idx(r + 1)]) throw DomainError("double column chart did not close");
  for (long r = 0; r <= m; ++r)
    for (long h = 1; h <= 2L * n; ++h)
      if (w.at(r, h) != (r == m ? Rat(1) : entry(r, h))) throw DomainError("double column chart disagrees with its coefficient row");
  return w;
}

Frieze2Window frieze_from_zigzag(const ZigZag& z, const std::vector<Rat>& values) {
  validate(z);
  const int m = z.width();
  if (values.size() != idx(2L * m)) throw ContractError("a zig-zag chart needs 2(n-4) values");
  std::vector<long> pos = z.positions();
  // pair[r] = entries at pos[r], pos[r] + 1
  std::vector<std::array<Rat, 2>> pair(idx(m));
  for (long r = 0; r < m; ++r)
    for (long k = 0; k < 2; ++k) pair[idx(r)][idx(k)] = values[idx(zigzag_vertex(m, r, pos[idx(r)] + k))];

  // Entry of row r at column h, for rows next to a row being moved.
  auto at = [&](long r, long h) -> Rat {
    if (r < 0 || r >= m) return Rat(1);
    const long k = h - pos[idx(r)];
    if (k < 0 || k > 1) throw DomainError("zig-zag neighbour is off the chart");
    return pair[idx(r)][idx(k)];
  };

  const long target = floor_even(pos.front());
  for (auto [r, dir] : redress_path(z, target)) {
    const long p = pos[idx(r)];
    auto& pr = pair[idx(r)];
    if (dir > 0) {
      if (pr[0].is_zero()) throw ChartBoundaryError(r, p, "zero entry leaving the zig-zag");
      Rat fresh = (pr[1] + at(r - 1, p + 1) * at(r + 1, p + 1)) / pr[0];
      pr = {pr[1], fresh};
    } else {
      if (pr[1].is_zero()) throw ChartBoundaryError(r, p + 1, "zero entry leaving the zig-zag");
      Rat fresh = (pr[0] + at(r - 1, p) * at(r + 1, p)) / pr[1];
      pr = {fresh, pr[0]};
    }
    pos[idx(r)] += dir;
  }

  std::vector<Rat> x(idx(m)), y(idx(m));
  for (long r = 0; r < m; ++r) {
    for (long k = 0; k < 2; ++k) {
      const long h = target + k;
      (zigzag_vertex(m, r, h) == r ? x : y)[idx(r)] = pair[idx(r)][idx(k)];
    }
  }
  return frieze_from_double_column(z.n, x, y).shifted(target - 2);
}

}  // namespace frieze
