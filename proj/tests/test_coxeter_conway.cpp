#include <doctest.h>

#include "frieze/coxeter_conway.hpp"
#include "frieze/errors.hpp"
#include "support.hpp"

using namespace frieze;

namespace {

ClassicalFrieze of_ints(std::initializer_list<long> xs) {
  std::vector<Rat> c;
  for (long x : xs) c.emplace_back(x);
  return ClassicalFrieze(std::move(c));
}

ClassicalFrieze of_quiddity(const Quiddity& q) {
  std::vector<Rat> c;
  for (auto x : q) c.emplace_back(static_cast<long>(x));
  return ClassicalFrieze(std::move(c));
}

// Positive integer friezes found by trying every quiddity with entries up to
// n - 2 and checking the rows directly.
std::set<Quiddity> brute_force(int n) {
  std::set<Quiddity> out;
  Quiddity q(static_cast<std::size_t>(n), 1);
  while (true) {
    const CcWindow w = cc_frieze(of_quiddity(q), n - 1);
    bool ok = true;
    for (long r = 0; r < n - 3 && ok; ++r)
      for (long j = 1; j <= n && ok; ++j) ok = w.at(r, j).sign() > 0;
    for (long j = 1; j <= n && ok; ++j) ok = w.at(n - 3, j) == Rat(1) && w.at(n - 2, j) == Rat(0);
    if (ok) out.insert(q);
    std::size_t k = 0;
    while (k < q.size() && q[k] == n - 2) q[k++] = 1;
    if (k == q.size()) break;
    ++q[k];
  }
  return out;
}

}  // namespace

TEST_CASE("classical counts are Catalan numbers") {
  const std::vector<std::size_t> catalan{1, 2, 5, 14, 42};
  for (int n = 3; n <= 7; ++n) {
    const auto found = cc_enumerate(n);
    CHECK(found.size() == catalan[static_cast<std::size_t>(n - 3)]);
    CHECK(all_triangulations(n).size() == catalan[static_cast<std::size_t>(n - 3)]);
    std::set<Quiddity> from_triangulations;
    for (const Triangulation& t : all_triangulations(n)) {
      const ClassicalFrieze f = triangulation_to_quiddity(t);
      Quiddity q;
      for (const Rat& x : f.quiddity()) q.push_back(x.to_int64());
      from_triangulations.insert(q);
    }
    CHECK(found == from_triangulations);
    if (n >= 4) CHECK(found == brute_force(n));
  }
  CHECK_THROWS_AS(cc_enumerate(2), ContractError);
}

TEST_CASE("determinant entries agree with the recurrence") {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(oracle::uniform(3, 9));
    std::vector<Rat> c;
    for (int k = 0; k < n; ++k) c.push_back(oracle::small_rat());
    const ClassicalFrieze q(c);
    const CcWindow w = cc_frieze(q, n + 2);
    for (long r = -2; r < w.depth(); ++r)
      for (long j = 1; j <= n; ++j) CHECK(cc_entry(q, j + r, j) == w.at(r, j));
  }
  CHECK_THROWS_AS(cc_entry(of_ints({1, 1, 1}), 1, 4), ContractError);
}

TEST_CASE("closed classical friezes have monodromy minus identity") {
  for (int n = 3; n <= 8; ++n)
    for (const Quiddity& q : cc_enumerate(n)) {
      const ClassicalFrieze f = of_quiddity(q);
      CHECK(cc_monodromy(f) == -MatExact::identity(2));
      CHECK(cc_closure(f) == CcClosure::MinusIdentity);
      CHECK(cc_is_closed(f));
      const CcWindow w = cc_frieze(f, n - 1);
      for (long j = 1; j <= n; ++j) {
        CHECK(w.at(n - 3, j) == Rat(1));
        CHECK(w.at(n - 2, j) == Rat(0));
      }
    }
  CHECK(cc_closure(of_ints({0, 0, 0, 0})) == CcClosure::PlusIdentity);
  CHECK_FALSE(cc_is_closed(of_ints({0, 0, 0, 0})));
  CHECK(cc_closure(of_ints({2, 2, 2})) == CcClosure::Open);
}

TEST_CASE("pentagon recurrence") {
  for (int trial = 0; trial < 20; ++trial) {
    const Rat x1 = oracle::positive_rat(), x2 = oracle::positive_rat();
    const ClassicalFrieze f({x1, (x2 + 1) / x1, (x1 + 1) / x2, x2, (x1 + x2 + 1) / (x1 * x2)});
    CHECK(cc_is_closed(f));
  }
}

TEST_CASE("classical polygon") {
  for (const Quiddity& q : cc_enumerate(6)) {
    const ClassicalFrieze f = of_quiddity(q);
    const auto v = cc_polygon(f, 14);
    for (std::size_t k = 0; k + 1 < v.size(); ++k) CHECK(v[k].first * v[k + 1].second - v[k].second * v[k + 1].first == Rat(1));
    for (std::size_t k = 0; k + 6 < v.size(); ++k) {
      CHECK(v[k + 6].first == -v[k].first);
      CHECK(v[k + 6].second == -v[k].second);
    }
  }
  CHECK(cc_polygon(of_ints({1, 1, 1}), 1).size() == 1);
}

TEST_CASE("triangulation contracts") {
  CHECK_NOTHROW(validate(Triangulation{5, {{1, 3}, {1, 4}}}));
  CHECK_THROWS_AS(validate(Triangulation{5, {{1, 3}}}), ContractError);
  CHECK_THROWS_AS(validate(Triangulation{5, {{1, 3}, {2, 4}}}), ContractError);
  CHECK_THROWS_AS(validate(Triangulation{5, {{1, 2}, {1, 4}}}), ContractError);
  CHECK_THROWS_AS(validate(Triangulation{5, {{1, 3}, {3, 1}}}), ContractError);
  CHECK(triangulation_to_quiddity(Triangulation{5, {{1, 3}, {1, 4}}}) == of_ints({3, 1, 2, 2, 1}));
  CHECK_THROWS_AS(ClassicalFrieze({}), ContractError);
  CHECK_THROWS_AS(cc_frieze(of_ints({1, 1, 1}), 0), ContractError);
}
