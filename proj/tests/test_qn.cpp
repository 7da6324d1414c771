#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pinnacle/qn.hpp"

using namespace pinnacle;

namespace {

FormalExpr make_expr(std::vector<std::vector<int>> indices) {
  std::vector<Monomial> monos;
  for (auto& idx : indices) monos.push_back(Monomial{std::move(idx)});
  return FormalExpr::from_monomials(std::move(monos));
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// The five displayed closed forms, one per |S| in 1..5; the independent
// reference the conjectured product is tested against.
BigInt displayed_closed_form(const PinSet& s, int n) {
  const std::vector<int>& e = s.elements();
  switch (e.size()) {
    case 1: {
      const int m = e[0];
      return pow2(n - 1 + m - 2);
    }
    case 2: {
      const int l = e[0], m = e[1];
      return pow2(n - 1 + m - 2 - l) * (ipow(3, l - 1) + 1);
    }
    case 3: {
      const int k = e[0], l = e[1], m = e[2];
      return pow2(n - 1 + m - 2 - l + k - 2) *
             (ipow(3, l - k) * (pow2(k - 1) + 1) + 1);
    }
    case 4: {
      const int j = e[0], k = e[1], l = e[2], m = e[3];
      return pow2(n - 1 + m - 2 - l + k - 2 - j) *
             (ipow(3, l - k) *
                  (pow2(k - j) * (ipow(5, j - 1) + ipow(3, j - 1)) + ipow(3, j - 1) + 1) +
              ipow(3, j - 1) + 1);
    }
    case 5: {
      const int i = e[0], j = e[1], k = e[2], l = e[3], m = e[4];
      const BigInt tail = ipow(3, j - i) * (pow2(i - 1) + 1) + 1;
      return pow2(n - 1 + m - 2 - l + k - 2 - j + i - 2) *
             (ipow(3, l - k) *
                  (pow2(k - j) * (ipow(5, j - i) * (ipow(3, i - 1) + pow2(i - 1)) +
                                  ipow(3, j - i) * (pow2(i - 1) + 1)) +
                   tail) +
              tail);
    }
    default:
      throw std::invalid_argument("closed forms displayed for |S| in 1..5 only");
  }
}

PinSet random_admissible(std::mt19937_64& rng, int size, int hi) {
  std::uniform_int_distribution<int> pick(3, hi);
  while (true) {
    std::vector<int> vals;
    while (static_cast<int>(vals.size()) < size) {
      const int v = pick(rng);
      bool dup = false;
      for (int x : vals) dup = dup || x == v;
      if (!dup) vals.push_back(v);
    }
    std::sort(vals.begin(), vals.end());
    PinSet s(vals);
    if (s.admissible()) return s;
  }
}

}  // namespace

TEST_CASE("E expressions match the displayed expansions") {
  CHECK(FormalExpr::build_E(0) == make_expr({{}}));
  CHECK(FormalExpr::build_E(1) == make_expr({{3}, {1}}));
  CHECK(FormalExpr::build_E(1).to_string() == "x[1,3] + x[1,1]");
  CHECK(FormalExpr::build_E(0).to_string() == "1");

  CHECK(FormalExpr::build_E(2) == make_expr({{3, 2}, {3, 1}, {1, 1}}));
  CHECK(FormalExpr::build_E(2).to_string() ==
        "x[1,3]*x[2,2] + x[1,3]*x[2,1] + x[1,1]*x[2,1]");

  CHECK(FormalExpr::build_E(3) ==
        make_expr({{3, 2, 5}, {3, 2, 3}, {3, 1, 3}, {3, 1, 1}, {1, 1, 3}, {1, 1, 1}}));

  CHECK(FormalExpr::build_E(4) ==
        make_expr({{3, 2, 5, 3},
                   {3, 2, 5, 2},
                   {3, 2, 3, 2},
                   {3, 2, 3, 1},
                   {3, 1, 3, 2},
                   {3, 1, 3, 1},
                   {3, 1, 1, 1},
                   {1, 1, 3, 2},
                   {1, 1, 3, 1},
                   {1, 1, 1, 1}}));
}

TEST_CASE("E term counts and parity") {
  for (int k = 0; k <= 14; ++k) {
    const FormalExpr e = FormalExpr::build_E(k);
    CHECK(static_cast<long long>(e.term_count()) == binom(k + 1, (k + 1) / 2));
    for (const Monomial& m : e.monomials()) {
      CHECK(static_cast<int>(m.indices.size()) == k);
      for (int idx : m.indices) CHECK(idx >= 1);
      // odd-step expressions end on odd indices
      if (k % 2 == 1) CHECK(m.indices.back() % 2 == 1);
    }
  }
}

TEST_CASE("f_o prunes zero branches and rejects even tops") {
  CHECK(make_expr({{1}}).apply_fo() == make_expr({{1, 1}}));
  CHECK_THROWS_AS(FormalExpr::build_E(2).apply_fo(), std::domain_error);
  CHECK(FormalExpr::build_E(1).apply_fo() == FormalExpr::build_E(2));
  CHECK(FormalExpr::build_E(2).apply_fe() == FormalExpr::build_E(3));
}

TEST_CASE("gap vector and r factor") {
  CHECK(gap_vector(PinSet({3, 5})) == std::vector<int>{2});
  CHECK(gap_vector(PinSet({4, 8, 9, 12})) == std::vector<int>{3, 4, 1});
  CHECK(gap_vector(PinSet({7})).empty());
  CHECK_THROWS_AS(gap_vector(PinSet{}), std::invalid_argument);

  CHECK(r_factor(PinSet({3, 5})) == 10);  // 3^2 + 1
  CHECK(r_factor(PinSet({7})) == 1);
  CHECK(r_factor(PinSet{}) == 1);
  for (int l = 3; l <= 12; ++l) {
    CHECK(r_factor(PinSet({l, 2 * l})) == ipow(3, l - 1) + 1);
  }
}

TEST_CASE("q' exponents") {
  CHECK(q_prime_exponent(PinSet({6}), 9) == 9 - 1 + 6 - 2);
  CHECK(q_prime_exponent(PinSet({3, 5, 8}), 8) == 8 - 1 + 8 - 2 - 5 + 3 - 2);
  CHECK(q_prime_exponent(PinSet{}, 4) == 3);
  CHECK(q_prime(PinSet{}, 4) == 8);
  CHECK_THROWS_AS(q_prime(PinSet({5}), 4), std::invalid_argument);
}

TEST_CASE("q by definition") {
  CountEngine engine;
  CHECK(q_def(PinSet({4}), 4, engine) == 32);        // 1*8 + 2*12
  CHECK(q_def(PinSet({3, 5}), 5, engine) == 160);    // 16 + 16 + 112 + 16
  CHECK_THROWS_AS(q_def(PinSet({4}), 0, engine), std::invalid_argument);

  // adjoining the non-realizable value 2 changes nothing
  CHECK(q_def(PinSet({2, 3, 5}), 5, engine) == 160);
  CHECK(q_def(PinSet({2}), 6, engine) == q_def(PinSet{}, 6, engine));

  // doubling in n
  for (const PinSet& s : enumerate_pinsets(8)) {
    const int base = s.empty() ? 1 : s.max();
    for (int n = base; n < base + 3; ++n) {
      CHECK(q_def(s, n + 1, engine) == 2 * q_def(s, n, engine));
    }
  }
}

TEST_CASE("conjectured product agrees with the definition") {
  CountEngine engine;
  const ConjectureCheck a = conjecture_check(PinSet({3, 5}), 5, engine);
  CHECK(a.equal);
  CHECK(a.lhs == 160);
  const ConjectureCheck b = conjecture_check(PinSet({4, 6}), 6, engine);
  CHECK(b.equal);
  CHECK_THROWS_AS(conjecture_check(PinSet({3, 4}), 6, engine), std::invalid_argument);

  const QScanReport scan = conjecture_scan(11, engine);
  CHECK(scan.mismatches.empty());
  CHECK(scan.exponent_flags.empty());
  CHECK(scan.sets_checked == static_cast<long>(enumerate_pinsets(11).size()));
}

TEST_CASE("displayed closed forms match the product on random sets") {
  std::mt19937_64 rng(20240801);
  CountEngine engine;
  for (int size = 1; size <= 5; ++size) {
    for (int trial = 0; trial < 12; ++trial) {
      const PinSet s = random_admissible(rng, size, 32);
      const int n = s.max() + static_cast<int>(rng() % 5);
      CHECK(displayed_closed_form(s, n) == q_prime(s, n) * r_factor(s));
    }
  }
  // and against the definition itself where the subset sum is cheap
  for (int trial = 0; trial < 8; ++trial) {
    const PinSet s = random_admissible(rng, 3, 16);
    const int n = s.max();
    CHECK(displayed_closed_form(s, n) == q_def(s, n, engine));
  }
}
