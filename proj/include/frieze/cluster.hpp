#pragma once

#include <optional>
#include <vector>

#include "frieze/errors.hpp"
#include "frieze/frieze2.hpp"
#include "frieze/matrix.hpp"

namespace frieze {

struct Arrow {
  int from = 0;
  int to = 0;
  int mult = 1;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Skew-symmetric exchange matrix: b(i, j) = #(i -> j) - #(j -> i).
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int size);
  // Throws ContractError unless b is size x size and skew-symmetric.
  Quiver(int size, std::vector<int> b);
  static Quiver from_arrows(int size, const std::vector<Arrow>& arrows);

  int size() const { return size_; }
  int operator()(int i, int j) const { return b_[static_cast<std::size_t>(i * size_ + j)]; }
  const std::vector<int>& matrix() const { return b_; }

  // One entry per ordered pair with b(i, j) > 0, sorted.
  std::vector<Arrow> arrows() const;
  Quiver opposite() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int size_ = 0;
  std::vector<int> b_;
};

Quiver mutate_quiver(const Quiver& q, int k);

// Quiver plus the values of its cluster variables at a rational point.
class Seed {
 public:
  // Throws ContractError on a size mismatch or a zero value.
  Seed(Quiver quiver, std::vector<Rat> values);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Rat>& values() const { return values_; }

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  Quiver quiver_;
  std::vector<Rat> values_;
};

// t'_k = (prod_{i->k} t_i + prod_{k->i} t_i) / t_k. A zero new value
// throws DegeneracyError naming the vertex.
Seed mutate_seed(const Seed& s, int k);

// Frieze of n: vertices 0..m-1 carry x_1..x_m, m..2m-1 carry y_1..y_m,
// m = n - 4. Vertex r is + for even r, vertex m + r is + for odd r.
int frieze_sign(int m, int vertex);
Seed mutate_plus(const Seed& s);
Seed mutate_minus(const Seed& s);

// The 2 x (n-4) quiver of the double-column chart. Throws ContractError if n < 5.
Quiver build_frieze_quiver(int n);

// Seeds 0..steps, alternating mu_+ and mu_- from the double-column chart
// with values init = (x_1..x_m, y_1..y_m). Seed k sits on columns k+2, k+3
// of frieze_from_double_column(n, x, y).
std::vector<Seed> bipartite_belt(int n, const std::vector<Rat>& init, int steps);

enum class Move : int { Left = -1, Straight = 0, Right = 1 };

// A double zig-zag in a frieze of width m = n - 4. Row r holds the two
// adjacent entries at columns pos(r), pos(r) + 1; moves[r] = pos(r+1) - pos(r).
// The integer-index entry of each pair (x~) is the one with h - r even, so
// which of x~ and y~ comes first is fixed by the parity of pos(r) - r.
struct ZigZag {
  int n = 0;
  long start = 0;
  std::vector<Move> moves;

  int width() const { return n - 4; }
  std::vector<long> positions() const;

  static ZigZag from_positions(int n, const std::vector<long>& pos);
  static ZigZag double_column(int n, long h0 = 2);

  friend bool operator==(const ZigZag&, const ZigZag&) = default;
};

// Throws ContractError on a bad length or n < 5.
void validate(const ZigZag& z);

// Index of the seed vertex carried by entry (r, h): r if h - r is even, else m + r.
int zigzag_vertex(int m, long r, long h);

struct ElementaryMove {
  ZigZag next;
  int vertex = 0;  // the vertex whose entry leaves the zig-zag
};

// Shifts row r one step left (dir = -1) or right (dir = +1). Throws
// ContractError if the result is not a zig-zag.
ElementaryMove elementary_move(const ZigZag& z, long r, int dir);

// Rows and directions that carry z to the double column at even column target.
std::vector<std::pair<long, int>> redress_path(const ZigZag& z, long target);

Quiver zigzag_quiver(const ZigZag& z);

// Values on the zig-zag indexed by seed vertex. Throws ChartBoundaryError on a zero.
std::vector<Rat> read_zigzag(const Frieze2Window& w, const ZigZag& z);

// Closed frieze with x_{r+1}, y_{r+1} in row r at columns 2, 3, depth m + 1.
// Throws ChartBoundaryError at the first diamond whose division fails.
Frieze2Window frieze_from_double_column(int n, const std::vector<Rat>& x, const std::vector<Rat>& y);

// Closed frieze with the given values on z (indexed by seed vertex).
Frieze2Window frieze_from_zigzag(const ZigZag& z, const std::vector<Rat>& values);

struct OmegaForm {
  MatExact omega;
  std::size_t rank = 0;
  // The alternating sum of rows killing omega, present when 3 | n.
  std::optional<std::vector<Rat>> null_vector;
};

// Exchange matrix of build_frieze_quiver(n) in the order x_1..x_m, y_m..y_1.
OmegaForm omega_matrix(int n);

}  // namespace frieze
