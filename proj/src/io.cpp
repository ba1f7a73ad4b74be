#include "frieze/io.hpp"

#include <json.hpp>
#include <sstream>

namespace frieze {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

long integer_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

Rat rat_from(const json& v) {
  try {
    if (v.is_string()) return Rat::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("expected a rational string, got " + v.dump());
}

std::vector<Rat> rats_from(const json& v) {
  if (!v.is_array()) throw FormatError("expected an array of rationals");
  std::vector<Rat> out;
  for (const json& x : v) out.push_back(rat_from(x));
  return out;
}

json rats_to(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(x.str());
  return a;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw FormatError("not an integer: '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw FormatError("not an integer: '" + s + "'");
  }
}

template <class F>
auto wrap_contract(F&& f) {
  try {
    return f();
  } catch (const ContractError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

std::string window_to_json(const Frieze2Window& w) {
  json entries = json::object();
  for (long r = 0; r < w.depth(); ++r)
    for (long h = 1; h <= w.columns(); ++h) {
      const DoubledIndex d = DoubledIndex::from_row_col(r, h);
      entries[std::to_string(d.p) + "," + std::to_string(d.q)] = w.at(r, h).str();
    }
  json j{{"n", w.n()}, {"closed", w.closed()}, {"depth", w.depth()}, {"entries", entries}};
  return j.dump() + "\n";
}

Frieze2Window window_from_json(std::string_view text) {
  const json j = parse_json(text);
  const long n = integer_field(j, "n");
  const long depth = integer_field(j, "depth");
  const json& closed = field(j, "closed");
  if (!closed.is_boolean()) throw FormatError("field 'closed' must be a boolean");
  const json& entries = field(j, "entries");
  if (!entries.is_object()) throw FormatError("field 'entries' must be an object");
  if (n < 1 || depth < 0) throw FormatError("window needs n >= 1 and depth >= 0");
  const std::size_t total = static_cast<std::size_t>(depth) * static_cast<std::size_t>(2 * n);
  if (entries.size() != total) throw FormatError("window has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(total));
  std::vector<Rat> cells(total);
  std::vector<bool> seen(total, false);
  for (const auto& [key, value] : entries.items()) {
    const auto parts = split(key, ',');
    if (parts.size() != 2) throw FormatError("entry key '" + key + "' is not \"p,q\"");
    const long p = parse_long(parts[0]);
    const long q = parse_long(parts[1]);
    if ((p - q) % 2 != 0) throw FormatError("entry key '" + key + "' mixes parities");
    const long r = (p - q) / 2;
    const long h = (p + q) / 2;
    if (r < 0 || r >= depth || h < 1 || h > 2 * n) throw FormatError("entry key '" + key + "' is outside the window");
    const std::size_t slot = static_cast<std::size_t>(r * 2 * n + h - 1);
    if (seen[slot]) throw FormatError("duplicate entry '" + key + "'");
    seen[slot] = true;
    cells[slot] = rat_from(value);
  }
  return wrap_contract([&] { return Frieze2Window(static_cast<int>(n), static_cast<int>(depth), std::move(cells), closed.get<bool>()); });
}

std::string window_to_csv(const Frieze2Window& w) {
  std::ostringstream out;
  out << "h";
  for (long h = 1; h <= w.columns(); ++h) out << ',' << h;
  out << '\n';
  for (long r = w.depth() > 0 ? -1 : 0; r < w.depth(); ++r) {
    out << r;
    for (long h = 1; h <= w.columns(); ++h) out << ',' << w.at(r, h).str();
    out << '\n';
  }
  return out.str();
}

Frieze2Window window_from_csv(std::string_view text) {
  std::vector<std::string> lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw FormatError("CSV has no header");
  const auto header = split(lines[0], ',');
  if (header.empty() || header[0] != "h" || header.size() < 3 || (header.size() - 1) % 2 != 0)
    throw FormatError("CSV header must be h,1,...,2n");
  const long cols = static_cast<long>(header.size()) - 1;
  for (long h = 1; h <= cols; ++h)
    if (parse_long(header[static_cast<std::size_t>(h)]) != h) throw FormatError("CSV header columns must be 1..2n in order");
  const int n = static_cast<int>(cols / 2);
  std::vector<Rat> cells;
  long depth = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto parts = split(lines[k], ',');
    if (static_cast<long>(parts.size()) != cols + 1) throw FormatError("CSV line " + std::to_string(k + 1) + " has the wrong number of fields");
    const long r = parse_long(parts[0]);
    const long expected = static_cast<long>(k) - 2;
    if (r != expected) throw FormatError("CSV line " + std::to_string(k + 1) + " should hold row " + std::to_string(expected));
    for (long h = 1; h <= cols; ++h) {
      Rat v = rat_from(json(parts[static_cast<std::size_t>(h)]));
      if (r == -1) {
        if (v != 1) throw FormatError("CSV boundary row must be all 1");
      } else {
        cells.push_back(std::move(v));
      }
    }
    if (r >= 0) ++depth;
  }
  if (lines.size() == 2) throw FormatError("CSV boundary row without stored rows");
  bool closed = false;
  if (depth > 0) {
    std::vector<Rat> row0(cells.begin(), cells.begin() + cols);
    closed = is_closed(CoefficientRow(n, std::move(row0)));
  }
  return wrap_contract([&] { return Frieze2Window(n, static_cast<int>(depth), std::move(cells), closed); });
}

std::string frieze_to_json(const CoefficientRow& c) {
  json j{{"n", c.n()}, {"coefficients", rats_to(c.values())}, {"closed", is_closed(c)}};
  return j.dump() + "\n";
}

CoefficientRow frieze_from_json(std::string_view text) {
  const json j = parse_json(text);
  const long n = integer_field(j, "n");
  std::vector<Rat> values = rats_from(field(j, "coefficients"));
  if (static_cast<long>(values.size()) != 2 * n) throw FormatError("frieze needs 2n coefficients");
  return wrap_contract([&] { return CoefficientRow(static_cast<int>(n), std::move(values)); });
}

std::string polygon_to_json(const Polygon3& p) {
  json verts = json::array();
  for (const Vec3& v : p.vertices) verts.push_back(json::array({v[0].str(), v[1].str(), v[2].str()}));
  json j{{"n", p.n}, {"vertices", verts}};
  return j.dump() + "\n";
}

Polygon3 polygon_from_json(std::string_view text) {
  const json j = parse_json(text);
  Polygon3 p;
  p.n = static_cast<int>(integer_field(j, "n"));
  const json& verts = field(j, "vertices");
  if (!verts.is_array() || static_cast<long>(verts.size()) != p.n) throw FormatError("polygon needs n vertices");
  for (const json& v : verts) {
    const std::vector<Rat> c = rats_from(v);
    if (c.size() != 3) throw FormatError("polygon vertices have 3 coordinates");
    p.vertices.push_back({c[0], c[1], c[2]});
  }
  return p;
}

namespace {

json quiver_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back(json::array({a.from, a.to, a.mult}));
  return json{{"size", q.size()}, {"arrows", arrows}};
}

Quiver quiver_of(const json& j) {
  const long size = integer_field(j, "size");
  const json& arrows = field(j, "arrows");
  if (!arrows.is_array()) throw FormatError("field 'arrows' must be an array");
  std::vector<Arrow> list;
  for (const json& a : arrows) {
    if (!a.is_array() || a.size() != 3 || !a[0].is_number_integer() || !a[1].is_number_integer() || !a[2].is_number_integer())
      throw FormatError("arrows are [from, to, mult] integer triples");
    list.push_back({a[0].get<int>(), a[1].get<int>(), a[2].get<int>()});
  }
  return wrap_contract([&] { return Quiver::from_arrows(static_cast<int>(size), list); });
}

}  // namespace

std::string quiver_to_json(const Quiver& q) { return quiver_json(q).dump() + "\n"; }

Quiver quiver_from_json(std::string_view text) { return quiver_of(parse_json(text)); }

std::string seed_to_json(const Seed& s) {
  json j = quiver_json(s.quiver());
  j["values"] = rats_to(s.values());
  return j.dump() + "\n";
}

Seed seed_from_json(std::string_view text) {
  const json j = parse_json(text);
  Quiver q = quiver_of(j);
  std::vector<Rat> values = rats_from(field(j, "values"));
  return wrap_contract([&] { return Seed(std::move(q), std::move(values)); });
}

std::string quiddity_to_json(const ClassicalFrieze& q) {
  json j{{"n", q.n()}, {"quiddity", rats_to(q.quiddity())}};
  return j.dump() + "\n";
}

ClassicalFrieze quiddity_from_json(std::string_view text) {
  const json j = parse_json(text);
  const long n = integer_field(j, "n");
  std::vector<Rat> c = rats_from(field(j, "quiddity"));
  if (static_cast<long>(c.size()) != n) throw FormatError("quiddity needs n entries");
  return wrap_contract([&] { return ClassicalFrieze(std::move(c)); });
}

std::string tuples_to_json_lines(const std::set<Tuple>& tuples) {
  std::string out;
  for (const Tuple& t : tuples) out += frieze_to_json(to_coefficients(t));
  return out;
}

std::set<Tuple> tuples_from_json_lines(std::string_view text) {
  std::set<Tuple> out;
  for (const std::string& line : split(text, '\n')) {
    if (line.empty()) continue;
    const CoefficientRow c = frieze_from_json(line);
    try {
      out.insert(to_tuple(c));
    } catch (const std::exception& e) {
      throw FormatError(e.what());
    }
  }
  return out;
}

}  // namespace frieze
