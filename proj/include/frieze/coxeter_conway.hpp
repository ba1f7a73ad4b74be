#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "frieze/errors.hpp"
#include "frieze/matrix.hpp"
#include "frieze/rational.hpp"

namespace frieze {

// Classical frieze with quiddity (c_1, ..., c_n), extended n-periodically.
class ClassicalFrieze {
 public:
  // Throws ContractError if the quiddity is empty.
  explicit ClassicalFrieze(std::vector<Rat> quiddity);

  int n() const { return static_cast<int>(quiddity_.size()); }
  const std::vector<Rat>& quiddity() const { return quiddity_; }
  const Rat& c(long i) const;  // c_i, any integer i

  friend bool operator==(const ClassicalFrieze&, const ClassicalFrieze&) = default;

 private:
  std::vector<Rat> quiddity_;
};

// Entries v_{i,j} for i >= j: row r = i - j, column j. Row 0 is the
// quiddity, row -1 the 1's, row -2 the 0's. Columns wrap mod n.
class CcWindow {
 public:
  CcWindow(int n, int depth, std::vector<Rat> entries);

  int n() const { return n_; }
  int depth() const { return depth_; }
  const std::vector<Rat>& entries() const { return entries_; }
  const Rat& at(long r, long j) const;

 private:
  int n_;
  int depth_;
  std::vector<Rat> entries_;
};

// v_{i,j} = c_i v_{i-1,j} - v_{i-2,j} from v_{j-2,j} = 0, v_{j-1,j} = 1.
CcWindow cc_frieze(const ClassicalFrieze& q, int depth);

// Tridiagonal determinant with c_j, ..., c_i on the diagonal and 1 beside it.
// Throws ContractError if i < j - 2.
Rat cc_entry(const ClassicalFrieze& q, long i, long j);

// K(c_1) ... K(c_n) with K(c) = [[0, -1], [1, c]].
MatExact cc_monodromy(const ClassicalFrieze& q);

enum class CcClosure { MinusIdentity, PlusIdentity, Open };
CcClosure cc_closure(const ClassicalFrieze& q);
// Closed means monodromy -Id; +Id is reported separately by cc_closure.
bool cc_is_closed(const ClassicalFrieze& q);

// Solution V_{k+1} = c_k V_k - V_{k-1} with V_0 = (1, 0), V_1 = (0, 1); then
// v_{i,j} = |V_{j-1}, V_{i+1}|.
std::vector<std::pair<Rat, Rat>> cc_polygon(const ClassicalFrieze& q, long count);

// Diagonals (u, v) of an n-gon with vertices 1..n.
struct Triangulation {
  int n = 0;
  std::vector<std::pair<int, int>> diagonals;
};

// Throws ContractError unless there are n - 3 distinct noncrossing diagonals.
void validate(const Triangulation& t);

// c_i = number of triangles at vertex i.
ClassicalFrieze triangulation_to_quiddity(const Triangulation& t);

std::vector<Triangulation> all_triangulations(int n);

using Quiddity = std::vector<std::int64_t>;

// Every positive-integer closed classical frieze of period n, built from
// (1, 1, 1) by inserting a 1 and raising both of its neighbours.
std::set<Quiddity> cc_enumerate(int n);

}  // namespace frieze
