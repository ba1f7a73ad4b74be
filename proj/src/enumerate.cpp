#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "frieze/arithmetic.hpp"

namespace frieze {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

// Chart DFS for one n. Columns c are relative to the double column: the
// chart sits at c = 0, 1 (frieze columns 2, 3).
class Search {
 public:
  Search(int n, i64 bound) : n_(n), m_(n - 4), bound_(bound), off_(m_ + 2), width_(off_ + 2 * n + 4) {
    grid_.assign(static_cast<std::size_t>((m_ + 2) * width_), 0);
    for (long c = -off_; c < width_ - off_; ++c) {
      cell(-1, c) = 1;
      cell(m_, c) = 1;
    }
  }

  void run_from(i64 first, std::set<Tuple>& out) {
    out_ = &out;
    choose_left(0, first);
  }

 private:
  i64& cell(long r, long c) { return grid_[static_cast<std::size_t>((r + 1) * width_ + c + off_)]; }

  // (mid + north * south) / west, or 0 if not a positive integer.
  static i64 diamond(i64 mid, i64 north, i64 south, i64 west) {
    const i128 num = static_cast<i128>(mid) + static_cast<i128>(north) * static_cast<i128>(south);
    if (num % west != 0) return 0;
    const i128 q = num / west;
    if (q > std::numeric_limits<i64>::max()) throw DomainError("frieze entry overflows 64 bits during enumeration");
    return q > 0 ? static_cast<i64>(q) : 0;
  }

  void choose_left(long r, i64 value) {
    cell(r, 0) = value;
    for (long k = 1; k <= r; ++k) {
      const i64 v = diamond(cell(r - k, 1 - k), cell(r - k - 1, 1 - k), cell(r - k + 1, 1 - k), cell(r - k, 2 - k));
      if (v == 0) return;
      cell(r - k, -k) = v;
    }
    for (i64 right = 1; right <= bound_; ++right) choose_right(r, right);
  }

  void choose_right(long r, i64 value) {
    cell(r, 1) = value;
    for (long k = 2; k <= r + 1; ++k) {
      const i64 v = diamond(cell(r - k + 1, k - 1), cell(r - k, k - 1), cell(r - k + 2, k - 1), cell(r - k + 1, k - 2));
      if (v == 0) return;
      cell(r - k + 1, k) = v;
    }
    if (r + 1 == m_) {
      finish();
      return;
    }
    for (i64 left = 1; left <= bound_; ++left) choose_left(r + 1, left);
  }

  void finish() {
    const long period = 2L * n_;
    for (long c = 2; c < period + 2; ++c) {
      for (long r = 0; r < m_; ++r) {
        const i64 v = diamond(cell(r, c - 1), cell(r - 1, c - 1), cell(r + 1, c - 1), cell(r, c - 2));
        if (v == 0) return;
        cell(r, c) = v;
      }
    }
    for (long c = 0; c < 2; ++c)
      for (long r = 0; r < m_; ++r)
        if (cell(r, c + period) != cell(r, c)) return;
    // values[k] sits at frieze column k + 1, i.e. c = k - 1.
    Tuple t(static_cast<std::size_t>(period));
    for (long k = 0; k < period; ++k) t[static_cast<std::size_t>(k)] = cell(0, k == 0 ? period - 1 : k - 1);
    if (!is_arithmetic(to_coefficients(t))) throw DomainError("enumeration produced a frieze that fails verification");
    for (long s = 0; s < period; ++s) out_->insert(rotate(t, s));
  }

  int n_;
  long m_;
  i64 bound_;
  long off_;
  long width_;
  std::vector<i64> grid_;
  std::set<Tuple>* out_ = nullptr;
};

}  // namespace

std::set<Tuple> enumerate(const SearchConfig& cfg) {
  if (cfg.n < 4) throw ContractError("enumeration needs n >= 4");
  if (cfg.value_bound < 1) throw ContractError("value bound must be at least 1");
  std::set<Tuple> result;
  if (cfg.n == 4) {
    result.insert(Tuple(8, 1));
    return result;
  }
  const int workers = std::max(1, cfg.parallel_width);
  std::atomic<i64> next{1};
  std::mutex merge;
  std::exception_ptr failure;
  auto work = [&] {
    try {
      Search search(cfg.n, cfg.value_bound);
      std::set<Tuple> local;
      for (i64 first = next++; first <= cfg.value_bound; first = next++) search.run_from(first, local);
      std::lock_guard<std::mutex> lock(merge);
      result.insert(local.begin(), local.end());
    } catch (...) {
      std::lock_guard<std::mutex> lock(merge);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

}  // namespace frieze
