#pragma once

#include <array>
#include <vector>

#include "frieze/errors.hpp"
#include "frieze/frieze2.hpp"
#include "frieze/matrix.hpp"

namespace frieze {

using Vec3 = std::array<Rat, 3>;

Rat det3(const Vec3& u, const Vec3& v, const Vec3& w);

// vertices[k] is V_{k+1}; indices are cyclic mod n.
struct Polygon3 {
  int n = 0;
  std::vector<Vec3> vertices;

  const Vec3& at(long i) const;  // V_i
};

struct Monodromy {
  MatExact m;
};

class NotClosedError : public DomainError {
 public:
  explicit NotClosedError(MatExact monodromy)
      : DomainError("coefficients do not close: monodromy " + monodromy.str()), m_(std::move(monodromy)) {}
  const MatExact& monodromy() const { return m_; }

 private:
  MatExact m_;
};

// [[0,0,1],[1,0,-b],[0,1,a]]
MatExact companion_matrix(const Rat& a, const Rat& b);

// M = N_1 N_2 ... N_n. With V_{-2}, V_{-1}, V_0 the standard basis, the
// columns of N_1 ... N_r are V_{r-2}, V_{r-1}, V_r, so V_{i+n} = M V_i.
Monodromy monodromy(const CoefficientRow& coeffs);
bool is_closed(const CoefficientRow& coeffs);

// V_i = a_i V_{i-1} - b_i V_{i-2} + V_{i-3} from the standard basis.
Polygon3 solve_polygon(const CoefficientRow& coeffs);

// v_{i,j} = |V_{j-3}, V_{j-2}, V_i|, v_{i-1/2, j-1/2} = |V_{i-1}, V_i, V_{j-3}|.
Rat polygon_to_frieze(const Polygon3& poly, const DoubledIndex& d);

// Throws ContractError if some |V_{i-1}, V_i, V_{i+1}| != 1 and
// DegeneracyError if a triple V_{i-3}, V_{i-2}, V_{i-1} is singular.
CoefficientRow polygon_to_coefficients(const Polygon3& poly);

// |V_{i-1}, V_i, V_j| > 0 for all i and all j not in {i-1, i}.
bool is_convex(const Polygon3& poly);

using Vec3f = std::array<double, 3>;

struct LiftResult {
  std::vector<Vec3f> vertices;
  // Set when only the lift with all consecutive determinants -1 exists.
  bool negative_orientation = false;
};

// Rescales the given representatives so that consecutive determinants are
// 1: magnitudes from the circulant system in log space, signs from the same
// system over GF(2). Throws ContractError when 3 | n, DegeneracyError on a
// collinear consecutive triple.
LiftResult lift_projective(const std::vector<Vec3f>& points);

double det3f(const Vec3f& u, const Vec3f& v, const Vec3f& w);

}  // namespace frieze
