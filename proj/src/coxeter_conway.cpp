#include <algorithm>
#include <functional>
#include <string>

#include "frieze/coxeter_conway.hpp"

namespace frieze {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

const Rat& boundary(long r) {
  static const Rat zero(0), one(1);
  return r == -1 ? one : zero;
}

}  // namespace

ClassicalFrieze::ClassicalFrieze(std::vector<Rat> quiddity) : quiddity_(std::move(quiddity)) {
  if (quiddity_.empty()) throw ContractError("a quiddity needs at least one entry");
}

const Rat& ClassicalFrieze::c(long i) const { return quiddity_[static_cast<std::size_t>(mod(i - 1, n()))]; }

CcWindow::CcWindow(int n, int depth, std::vector<Rat> entries) : n_(n), depth_(depth), entries_(std::move(entries)) {
  if (n < 1 || depth < 0 || entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(depth))
    throw ContractError("classical window shape mismatch");
}

const Rat& CcWindow::at(long r, long j) const {
  if (r == -1 || r == -2) return boundary(r);
  if (r < 0 || r >= depth_) throw ContractError("row " + std::to_string(r) + " is outside the classical window");
  return entries_[static_cast<std::size_t>(r * n_ + mod(j - 1, n_))];
}

CcWindow cc_frieze(const ClassicalFrieze& q, int depth) {
  if (depth < 1) throw ContractError("depth must be at least 1");
  const int n = q.n();
  std::vector<Rat> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(depth));
  for (long j = 1; j <= n; ++j) {
    Rat prev2(0), prev1(1);
    for (long r = 0; r < depth; ++r) {
      Rat cur = q.c(j + r) * prev1 - prev2;
      e[static_cast<std::size_t>(r * n + j - 1)] = cur;
      prev2 = std::move(prev1);
      prev1 = std::move(cur);
    }
  }
  return CcWindow(n, depth, std::move(e));
}

Rat cc_entry(const ClassicalFrieze& q, long i, long j) {
  const long size = i - j + 1;
  if (size < -1) throw ContractError("cc_entry needs i >= j - 2");
  if (size <= 0) return boundary(size - 1);
  std::vector<Rat> m(static_cast<std::size_t>(size * size), Rat(0));
  for (long k = 0; k < size; ++k) {
    m[static_cast<std::size_t>(k * size + k)] = q.c(j + k);
    if (k + 1 < size) {
      m[static_cast<std::size_t>(k * size + k + 1)] = Rat(1);
      m[static_cast<std::size_t>((k + 1) * size + k)] = Rat(1);
    }
  }
  return det(MatExact(static_cast<std::size_t>(size), static_cast<std::size_t>(size), std::move(m)));
}

MatExact cc_monodromy(const ClassicalFrieze& q) {
  MatExact m = MatExact::identity(2);
  for (long i = 1; i <= q.n(); ++i) m = m * MatExact{{0, -1}, {1, q.c(i)}};
  return m;
}

CcClosure cc_closure(const ClassicalFrieze& q) {
  const MatExact m = cc_monodromy(q);
  if (m == -MatExact::identity(2)) return CcClosure::MinusIdentity;
  if (m == MatExact::identity(2)) return CcClosure::PlusIdentity;
  return CcClosure::Open;
}

bool cc_is_closed(const ClassicalFrieze& q) { return cc_closure(q) == CcClosure::MinusIdentity; }

std::vector<std::pair<Rat, Rat>> cc_polygon(const ClassicalFrieze& q, long count) {
  std::vector<std::pair<Rat, Rat>> v{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  for (long k = 1; static_cast<long>(v.size()) < count; ++k) {
    const auto& a = v[static_cast<std::size_t>(k)];
    const auto& b = v[static_cast<std::size_t>(k - 1)];
    v.emplace_back(q.c(k) * a.first - b.first, q.c(k) * a.second - b.second);
  }
  v.resize(static_cast<std::size_t>(std::max(count, 0L)));
  return v;
}

void validate(const Triangulation& t) {
  if (t.n < 3) throw ContractError("a triangulated polygon needs n >= 3");
  if (t.diagonals.size() != static_cast<std::size_t>(t.n - 3))
    throw ContractError("a triangulation of an n-gon has n - 3 diagonals");
  std::vector<std::pair<int, int>> d;
  for (auto [u, v] : t.diagonals) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > t.n || v - u < 2 || (u == 1 && v == t.n)) throw ContractError("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not a diagonal");
    d.emplace_back(u, v);
  }
  std::sort(d.begin(), d.end());
  if (std::adjacent_find(d.begin(), d.end()) != d.end()) throw ContractError("repeated diagonal");
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      auto [p, q] = d[a];
      auto [r, s] = d[b];
      if ((p < r && r < q && q < s) || (r < p && p < s && s < q)) throw ContractError("crossing diagonals");
    }
}

ClassicalFrieze triangulation_to_quiddity(const Triangulation& t) {
  validate(t);
  std::vector<Rat> c(static_cast<std::size_t>(t.n), Rat(1));
  for (auto [u, v] : t.diagonals) {
    c[static_cast<std::size_t>(u - 1)] += 1;
    c[static_cast<std::size_t>(v - 1)] += 1;
  }
  return ClassicalFrieze(std::move(c));
}

std::vector<Triangulation> all_triangulations(int n) {
  if (n < 3) throw ContractError("a triangulated polygon needs n >= 3");
  // Diagonal sets of the polygon on vertices a..b with the edge (a, b).
  std::function<std::vector<std::vector<std::pair<int, int>>>(int, int)> sub = [&](int a, int b) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (b - a < 2) {
      out.emplace_back();
      return out;
    }
    for (int k = a + 1; k < b; ++k) {
      for (const auto& left : sub(a, k)) {
        for (const auto& right : sub(k, b)) {
          auto d = left;
          d.insert(d.end(), right.begin(), right.end());
          if (k - a >= 2) d.emplace_back(a, k);
          if (b - k >= 2) d.emplace_back(k, b);
          out.push_back(std::move(d));
        }
      }
    }
    return out;
  };
  std::vector<Triangulation> out;
  for (auto& d : sub(1, n)) out.push_back({n, std::move(d)});
  return out;
}

std::set<Quiddity> cc_enumerate(int n) {
  if (n < 3) throw ContractError("classical enumeration needs n >= 3");
  std::set<Quiddity> level{{1, 1, 1}};
  for (int size = 3; size < n; ++size) {
    std::set<Quiddity> next;
    for (const Quiddity& q : level) {
      for (int i = 0; i < size; ++i) {
        // New 1 between positions i and i + 1 (cyclically).
        Quiddity r(q.begin(), q.begin() + i + 1);
        r.push_back(1);
        r.insert(r.end(), q.begin() + i + 1, q.end());
        r[static_cast<std::size_t>(i)] += 1;
        r[static_cast<std::size_t>((i + 2) % (size + 1))] += 1;
        next.insert(std::move(r));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace frieze
