#include <algorithm>
#include <cstdlib>
#include <string>

#include "frieze/cluster.hpp"

namespace frieze {

Quiver::Quiver(int size) : size_(size), b_(static_cast<std::size_t>(size * size), 0) {
  if (size < 0) throw ContractError("quiver size must be nonnegative");
}

Quiver::Quiver(int size, std::vector<int> b) : size_(size), b_(std::move(b)) {
  if (size < 0 || b_.size() != static_cast<std::size_t>(size * size)) throw ContractError("exchange matrix has the wrong shape");
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) throw ContractError("exchange matrix is not skew-symmetric");
}

Quiver Quiver::from_arrows(int size, const std::vector<Arrow>& arrows) {
  std::vector<int> b(static_cast<std::size_t>(size * size), 0);
  for (const Arrow& a : arrows) {
    if (a.from < 0 || a.to < 0 || a.from >= size || a.to >= size || a.from == a.to)
      throw ContractError("arrow " + std::to_string(a.from) + "->" + std::to_string(a.to) + " is out of range or a loop");
    b[static_cast<std::size_t>(a.from * size + a.to)] += a.mult;
    b[static_cast<std::size_t>(a.to * size + a.from)] -= a.mult;
  }
  return Quiver(size, std::move(b));
}

std::vector<Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j)
      if ((*this)(i, j) > 0) out.push_back({i, j, (*this)(i, j)});
  return out;
}

Quiver Quiver::opposite() const {
  std::vector<int> b(b_);
  for (auto& x : b) x = -x;
  return Quiver(size_, std::move(b));
}

Quiver mutate_quiver(const Quiver& q, int k) {
  const int n = q.size();
  if (k < 0 || k >= n) throw ContractError("mutation vertex out of range");
  std::vector<int> b(q.matrix());
  auto at = [&](int i, int j) -> int& { return b[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        at(i, j) = -q(i, j);
      } else {
        // b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2
        const int bik = q(i, k);
        const int bkj = q(k, j);
        at(i, j) = q(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  }
  return Quiver(n, std::move(b));
}

Seed::Seed(Quiver quiver, std::vector<Rat> values) : quiver_(std::move(quiver)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(quiver_.size())) throw ContractError("seed needs one value per vertex");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i].is_zero()) throw ContractError("seed value at vertex " + std::to_string(i) + " is zero");
}

namespace {

Rat power(const Rat& x, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

Seed mutate_seed(const Seed& s, int k) {
  const Quiver& q = s.quiver();
  if (k < 0 || k >= q.size()) throw ContractError("mutation vertex out of range");
  Rat in(1), out(1);
  for (int i = 0; i < q.size(); ++i) {
    const int b = q(i, k);
    if (b > 0) in *= power(s.values()[static_cast<std::size_t>(i)], b);
    if (b < 0) out *= power(s.values()[static_cast<std::size_t>(i)], -b);
  }
  Rat t = (in + out) / s.values()[static_cast<std::size_t>(k)];
  if (t.is_zero()) throw DegeneracyError("exchange relation gives zero at vertex " + std::to_string(k));
  std::vector<Rat> values(s.values());
  values[static_cast<std::size_t>(k)] = t;
  return Seed(mutate_quiver(q, k), std::move(values));
}

int frieze_sign(int m, int vertex) {
  if (vertex < m) return vertex % 2 == 0 ? 1 : -1;
  return (vertex - m) % 2 == 1 ? 1 : -1;
}

namespace {

Seed mutate_signed(const Seed& s, int sign) {
  const int size = s.quiver().size();
  if (size % 2 != 0) throw ContractError("frieze seeds have an even number of vertices");
  Seed out = s;
  for (int v = 0; v < size; ++v)
    if (frieze_sign(size / 2, v) == sign) out = mutate_seed(out, v);
  return out;
}

}  // namespace

Seed mutate_plus(const Seed& s) { return mutate_signed(s, 1); }
Seed mutate_minus(const Seed& s) { return mutate_signed(s, -1); }

Quiver build_frieze_quiver(int n) {
  if (n < 5) throw ContractError("the frieze quiver needs n >= 5");
  return zigzag_quiver(ZigZag::double_column(n, 2));
}

std::vector<Seed> bipartite_belt(int n, const std::vector<Rat>& init, int steps) {
  if (n < 5) throw ContractError("the bipartite belt needs n >= 5");
  if (init.size() != static_cast<std::size_t>(2 * (n - 4))) throw ContractError("belt needs 2(n-4) initial values");
  if (steps < 0) throw ContractError("steps must be nonnegative");
  for (const Rat& v : init)
    if (v.sign() <= 0) throw ContractError("belt initial values must be positive");
  std::vector<Seed> belt;
  belt.reserve(static_cast<std::size_t>(steps) + 1);
  belt.emplace_back(build_frieze_quiver(n), init);
  for (int k = 0; k < steps; ++k) belt.push_back(k % 2 == 0 ? mutate_plus(belt.back()) : mutate_minus(belt.back()));
  return belt;
}

OmegaForm omega_matrix(int n) {
  if (n < 5) throw ContractError("omega needs n >= 5");
  const int m = n - 4;
  const Quiver q = build_frieze_quiver(n);
  std::vector<int> order(static_cast<std::size_t>(2 * m));
  for (int a = 0; a < m; ++a) order[static_cast<std::size_t>(a)] = a;
  for (int k = 0; k < m; ++k) order[static_cast<std::size_t>(m + k)] = 2 * m - 1 - k;
  std::vector<Rat> e;
  e.reserve(static_cast<std::size_t>(4 * m * m));
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * m; ++b) e.emplace_back(q(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]));
  OmegaForm out;
  out.omega = MatExact(static_cast<std::size_t>(2 * m), static_cast<std::size_t>(2 * m), std::move(e));
  out.rank = rank(out.omega);
  if (n % 3 == 0) {
    const int big_m = n / 3;
    const int size = 2 * m;
    std::vector<Rat> v(static_cast<std::size_t>(size), Rat(0));
    auto put = [&](int l, int c) {
      if (l < 1 || l > size) throw DomainError("null vector index out of range");
      v[static_cast<std::size_t>(l - 1)] += Rat(c);
    };
    for (int i = 0; i < big_m / 2; ++i) {
      put(6 * i + 1, 1);
      put(size - 6 * i - 1, 1);
    }
    for (int i = 1; i < (big_m + 1) / 2; ++i) {
      put(6 * i - 1, -1);
      put(size - 6 * i + 3, -1);
    }
    out.null_vector = std::move(v);
  }
  return out;
}

}  // namespace frieze
