#include "frieze/frieze2.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "frieze/errors.hpp"
#include "frieze/matrix.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

const Rat kZero(0);
const Rat kOne(1);

const Rat& boundary(long r) { return r == -1 ? kOne : kZero; }

}  // namespace

void validate(const DoubledIndex& d) {
  if (mod(d.p - d.q, 2) != 0) throw ContractError("doubled index (p, q) needs p = q mod 2");
}

CoefficientRow::CoefficientRow(int n, std::vector<Rat> values) : n_(n), values_(std::move(values)) {
  if (n_ < 4) throw ContractError("coefficient row needs n >= 4");
  if (values_.size() != static_cast<std::size_t>(2 * n_))
    throw ContractError("coefficient row for n = " + std::to_string(n_) + " needs " + std::to_string(2 * n_) +
                        " values, got " + std::to_string(values_.size()));
}

CoefficientRow CoefficientRow::constant(int n, const Rat& v) {
  return CoefficientRow(n, std::vector<Rat>(static_cast<std::size_t>(2 * n), v));
}

const Rat& CoefficientRow::at_col(long h) const { return values_[static_cast<std::size_t>(mod(h - 1, 2L * n_))]; }

CoefficientRow CoefficientRow::rotated(long s) const {
  std::vector<Rat> out(values_.size());
  const long len = static_cast<long>(values_.size());
  for (long k = 0; k < len; ++k) out[static_cast<std::size_t>(k)] = values_[static_cast<std::size_t>(mod(k + s, len))];
  return CoefficientRow(n_, std::move(out));
}

CoefficientRow CoefficientRow::reversed() const {
  std::vector<Rat> out(values_.rbegin(), values_.rend());
  return CoefficientRow(n_, std::move(out));
}

Frieze2Window::Frieze2Window(int n, int depth, std::vector<Rat> entries, bool closed)
    : n_(n), depth_(depth), entries_(std::move(entries)), closed_(closed) {
  if (n_ < 1 || depth_ < 0) throw ContractError("window needs n >= 1 and depth >= 0");
  if (entries_.size() != static_cast<std::size_t>(depth_) * static_cast<std::size_t>(2 * n_))
    throw ContractError("window entry count does not match depth x 2n");
}

std::size_t Frieze2Window::slot(long r, long h) const {
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(2 * n_) + static_cast<std::size_t>(mod(h - 1, 2L * n_));
}

const Rat& Frieze2Window::at(long r, long h) const {
  if (r < 0) {
    if (r < -3) throw ContractError("row " + std::to_string(r) + " is above the boundary rows");
    return boundary(r);
  }
  if (r >= depth_) throw ContractError("row " + std::to_string(r) + " is below the window");
  return entries_[slot(r, h)];
}

Frieze2Window Frieze2Window::shifted(long s) const {
  std::vector<Rat> out(entries_.size());
  for (long r = 0; r < depth_; ++r)
    for (long h = 1; h <= columns(); ++h) out[slot(r, h)] = at(r, h - s);
  return Frieze2Window(n_, depth_, std::move(out), closed_);
}

Frieze2Window Frieze2Window::with_entry(long r, long h, Rat value) const {
  if (r < 0 || r >= depth_) throw ContractError("only stored rows can be replaced");
  Frieze2Window w = *this;
  w.entries_[slot(r, h)] = std::move(value);
  return w;
}

CoefficientRow Frieze2Window::coefficient_row() const {
  if (depth_ < 1) throw ContractError("window has no coefficient row");
  return CoefficientRow(n_, std::vector<Rat>(entries_.begin(), entries_.begin() + 2 * n_));
}

namespace {

// Non-wrapping table over rows -3..depth-1 and columns [lo, hi], filled by
// the diagonal recurrence. Entries need columns down to h - r - 3, so lo
// must leave that much room below the first column of interest.
class Band {
 public:
  Band(const CoefficientRow& c, long depth, long lo, long hi)
      : lo_(lo), width_(hi - lo + 1), cells_(static_cast<std::size_t>((depth + 3) * width_)) {
    for (long r = -3; r < 0; ++r)
      for (long h = lo; h <= hi; ++h) ref(r, h) = boundary(r);
    for (long r = 0; r < depth; ++r) {
      for (long h = lo; h <= hi; ++h) {
        Rat v = 0;
        if (h - 3 >= lo) {
          v = c.at_col(h + r) * ref(r - 1, h - 1) - c.at_col(h + r - 1) * ref(r - 2, h - 2) + ref(r - 3, h - 3);
        } else if (r == 0) {
          v = c.at_col(h);
        }
        ref(r, h) = std::move(v);
      }
    }
  }

  const Rat& at(long r, long h) const { return cells_[index(r, h)]; }

 private:
  std::size_t index(long r, long h) const { return static_cast<std::size_t>((r + 3) * width_ + (h - lo_)); }
  Rat& ref(long r, long h) { return cells_[index(r, h)]; }

  long lo_;
  long width_;
  std::vector<Rat> cells_;
};

}  // namespace

Frieze2Window frieze_from_coefficients(const CoefficientRow& coeffs, int depth) {
  if (depth < 1) throw ContractError("depth must be at least 1");
  const long cols = 2L * coeffs.n();
  // Rows computed on a wrapped band: v(r, h) only reads row r-k at column
  // h-k, so walking h cyclically is exact because rows are 2n-periodic.
  std::vector<Rat> e(static_cast<std::size_t>(depth) * static_cast<std::size_t>(cols));
  auto get = [&](long r, long h) -> const Rat& {
    if (r < 0) return boundary(r);
    return e[static_cast<std::size_t>(r * cols + mod(h - 1, cols))];
  };
  for (long r = 0; r < depth; ++r) {
    for (long h = 1; h <= cols; ++h) {
      e[static_cast<std::size_t>(r * cols + h - 1)] = coeffs.at_col(h + r) * get(r - 1, h - 1) -
                                                       coeffs.at_col(h + r - 1) * get(r - 2, h - 2) + get(r - 3, h - 3);
    }
  }
  return Frieze2Window(coeffs.n(), depth, std::move(e), is_closed(coeffs));
}

Rat entry_by_determinant(const CoefficientRow& coeffs, const DoubledIndex& d) {
  validate(d);
  const long r = d.row();
  if (r < -3) throw ContractError("entry lies above the boundary rows");
  if (r < 0) return boundary(r);
  const std::size_t k = static_cast<std::size_t>(r + 1);
  std::vector<Rat> e(k * k);
  const bool integer = d.integer_type();
  // Integer case starts at j = q/2; half case at j' = (q-1)/2.
  const long j = integer ? d.q / 2 : (d.q - 1) / 2;
  for (std::size_t t = 0; t < k; ++t) {
    const long jt = j + static_cast<long>(t);
    e[t * k + t] = integer ? coeffs.a(jt) : coeffs.b(jt + 1);
    if (t + 1 < k) {
      e[t * k + t + 1] = integer ? coeffs.b(jt + 1) : coeffs.a(jt + 1);
      e[(t + 1) * k + t] = 1;
    }
    if (t + 2 < k) e[t * k + t + 2] = 1;
  }
  return det(MatExact(k, k, std::move(e)));
}

std::vector<Diamond> verify_pattern_rule(const Frieze2Window& w) {
  std::vector<Diamond> bad;
  for (long r = 0; r + 1 < w.depth(); ++r) {
    for (long h = 1; h <= w.columns(); ++h) {
      Rat rhs = w.at(r, h - 1) * w.at(r, h + 1) - w.at(r - 1, h) * w.at(r + 1, h);
      if (w.at(r, h) != rhs) bad.push_back({r, h});
    }
  }
  return bad;
}

SymmetryReport verify_closed_symmetries(const CoefficientRow& coeffs) {
  Monodromy mono = monodromy(coeffs);
  if (mono.m != MatExact::identity(3)) throw NotClosedError(mono.m);
  const long n = coeffs.n();
  const long depth = 2 * n;
  Band band(coeffs, depth, -depth - 4, 4 * n);

  SymmetryReport rep;
  rep.row_periodic = true;
  for (long r = 0; r < depth && rep.row_periodic; ++r)
    for (long h = 1; h <= 2 * n; ++h)
      if (band.at(r, h) != band.at(r, h + 2 * n)) {
        rep.row_periodic = false;
        break;
      }

  rep.diagonal_periodic = true;
  for (long r = -3; r + n < depth && rep.diagonal_periodic; ++r)
    for (long h = 1; h <= 2 * n; ++h)
      if (band.at(r, h) != band.at(r + n, h + n)) {
        rep.diagonal_periodic = false;
        break;
      }

  rep.glide = true;
  for (long r = -3; r <= n - 2 && rep.glide; ++r)
    for (long h = 1; h <= 2 * n; ++h)
      if (band.at(r, h) != band.at(n - 5 - r, h + n)) {
        rep.glide = false;
        break;
      }
  return rep;
}

const std::optional<Rat>& TilingGrid::at(long i, long j) const {
  static const std::optional<Rat> kEmpty;
  if (i < i0 || j < j0 || i >= i0 + rows || j >= j0 + cols) return kEmpty;
  return cells[static_cast<std::size_t>((i - i0) * cols + (j - j0))];
}

TilingGrid TilingGrid::with(long i, long j, Rat value) const {
  if (i < i0 || j < j0 || i >= i0 + rows || j >= j0 + cols) throw ContractError("cell outside the grid");
  TilingGrid g = *this;
  g.cells[static_cast<std::size_t>((i - i0) * cols + (j - j0))] = std::move(value);
  return g;
}

std::vector<MinorFailure> check_unit_minors(const TilingGrid& g, bool half, std::size_t* checked) {
  std::vector<MinorFailure> bad;
  std::size_t count = 0;
  for (long i = g.i0; i + 2 < g.i0 + g.rows; ++i) {
    for (long j = g.j0; j + 2 < g.j0 + g.cols; ++j) {
      std::vector<Rat> e;
      e.reserve(9);
      for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b)
          if (const auto& c = g.at(i + a, j + b)) e.push_back(*c);
      if (e.size() != 9) continue;
      ++count;
      Rat d = det(MatExact(3, 3, std::move(e)));
      if (d != 1) bad.push_back({half, i, j, d});
    }
  }
  if (checked) *checked = count;
  return bad;
}

Sl3Report sl3_subgrids(const Frieze2Window& w) {
  if (w.depth() < 2) throw ContractError("window too small: SL3 minors need at least 2 stored rows");
  const long n = w.n();
  const long j0 = 0;
  const long cols = n + 3;
  const long i0 = j0 - 3;
  const long rows = cols + w.depth() + 2;

  auto build = [&](bool half) {
    TilingGrid g;
    g.i0 = i0;
    g.j0 = j0;
    g.rows = rows;
    g.cols = cols;
    g.cells.resize(static_cast<std::size_t>(rows * cols));
    for (long i = i0; i < i0 + rows; ++i) {
      for (long j = j0; j < j0 + cols; ++j) {
        const long r = i - j;
        if (!w.has_row(r)) continue;
        const long h = half ? i + j + 1 : i + j;
        g.cells[static_cast<std::size_t>((i - i0) * cols + (j - j0))] = w.at(r, h);
      }
    }
    return g;
  };

  Sl3Report rep;
  rep.integer_grid = build(false);
  rep.half_grid = build(true);
  std::size_t a = 0;
  std::size_t b = 0;
  rep.failures = check_unit_minors(rep.integer_grid, false, &a);
  auto more = check_unit_minors(rep.half_grid, true, &b);
  rep.failures.insert(rep.failures.end(), more.begin(), more.end());
  rep.minors_checked = a + b;
  return rep;
}

std::size_t count_distinct_entries(const CoefficientRow& coeffs) {
  Monodromy mono = monodromy(coeffs);
  if (mono.m != MatExact::identity(3)) throw NotClosedError(mono.m);
  const long n = coeffs.n();
  const long width = n - 4;
  const long cols = 2 * n;
  std::set<std::pair<long, long>> seen;
  std::size_t orbits = 0;
  for (long r = 0; r < width; ++r) {
    for (long h = 0; h < cols; ++h) {
      if (seen.count({r, h})) continue;
      ++orbits;
      long rr = r;
      long hh = h;
      while (seen.insert({rr, hh}).second) {
        rr = width - 1 - rr;
        hh = mod(hh + n, cols);
      }
    }
  }
  return orbits;
}

}  // namespace frieze
