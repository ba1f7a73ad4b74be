#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frieze/arithmetic.hpp"
#include "frieze/cluster.hpp"
#include "frieze/coxeter_conway.hpp"
#include "frieze/frieze2.hpp"
#include "frieze/polygon.hpp"

// Text formats. Rationals are always strings "p/q", integers without "/1".
// Parsers throw FormatError on malformed input.
namespace frieze {

// {"n": N, "closed": bool, "depth": D, "entries": {"p,q": "v", ...}}
std::string window_to_json(const Frieze2Window& w);
Frieze2Window window_from_json(std::string_view text);

// Header "h,1,2,...,2n"; then the row of 1's (when depth > 0) and rows
// 0..depth-1, each as "r,v_1,...,v_2n".
std::string window_to_csv(const Frieze2Window& w);
Frieze2Window window_from_csv(std::string_view text);

// {"n": N, "coefficients": ["b_1", "a_1", ...], "closed": bool}
std::string frieze_to_json(const CoefficientRow& c);
CoefficientRow frieze_from_json(std::string_view text);

// {"n": N, "vertices": [["x", "y", "z"], ...]}
std::string polygon_to_json(const Polygon3& p);
Polygon3 polygon_from_json(std::string_view text);

// {"size": N, "arrows": [[i, j, mult], ...]}; seeds add "values".
std::string quiver_to_json(const Quiver& q);
Quiver quiver_from_json(std::string_view text);
std::string seed_to_json(const Seed& s);
Seed seed_from_json(std::string_view text);

// {"n": N, "quiddity": ["c_1", ...]}
std::string quiddity_to_json(const ClassicalFrieze& q);
ClassicalFrieze quiddity_from_json(std::string_view text);

// One frieze JSON object per line, in sorted tuple order.
std::string tuples_to_json_lines(const std::set<Tuple>& tuples);
std::set<Tuple> tuples_from_json_lines(std::string_view text);

}  // namespace frieze
