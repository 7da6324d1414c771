#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pinnacle/pinset.hpp"

using namespace pinnacle;

TEST_CASE("pinset construction validates") {
  CHECK_NOTHROW(PinSet({3, 5, 7}));
  CHECK_NOTHROW(PinSet({2}));  // valid but inadmissible
  CHECK_THROWS_AS(PinSet({1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(PinSet({5, 3}), std::invalid_argument);
  CHECK_THROWS_AS(PinSet({3, 3}), std::invalid_argument);
  CHECK(PinSet{}.empty());
  CHECK(PinSet({4, 8, 12}).to_string() == "{4,8,12}");
  CHECK(PinSet{}.to_string() == "{}");
}

TEST_CASE("admissibility: s_i > 2i") {
  CHECK(PinSet{}.admissible());
  CHECK(PinSet({3, 5, 7}).admissible());
  CHECK_FALSE(PinSet({3, 4}).admissible());
  CHECK_FALSE(PinSet({2}).admissible());
  CHECK(PinSet({3}).admissible());
  CHECK(PinSet({9}).admissible());
  CHECK_FALSE(PinSet({3, 5, 6}).admissible());
}

TEST_CASE("decompose splits at the largest missing value") {
  SUBCASE("{4,8,12}") {
    const Decomposition d = decompose(PinSet({4, 8, 12}));
    CHECK(d.t == 11);
    CHECK(d.below == PinSet({4, 8}));
    CHECK(d.run_begin == 12);
    CHECK(d.run_end == 12);
  }
  SUBCASE("{4,8,11,12}") {
    const Decomposition d = decompose(PinSet({4, 8, 11, 12}));
    CHECK(d.t == 10);
    CHECK(d.below == PinSet({4, 8}));
    CHECK(d.run_begin == 11);
  }
  SUBCASE("{5}") {
    const Decomposition d = decompose(PinSet({5}));
    CHECK(d.t == 4);
    CHECK(d.below.empty());
  }
  CHECK_THROWS_AS(decompose(PinSet{}), std::invalid_argument);
}

TEST_CASE("enumerate_pinsets is lexicographic and admissible-only") {
  const auto four = enumerate_pinsets(4);
  REQUIRE(four.size() == 3);
  CHECK(four[0] == PinSet{});
  CHECK(four[1] == PinSet({3}));
  CHECK(four[2] == PinSet({4}));

  CHECK(enumerate_pinsets(5).size() == 6);
  const auto zero = enumerate_pinsets(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  // ordered and admissible throughout
  const auto all = enumerate_pinsets(12);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].admissible());
    if (i) CHECK(all[i - 1] < all[i]);
  }
}

TEST_CASE("enumerate_pinsets counts follow the central binomial numbers") {
  auto binom = [](int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  // sets with max <= m are counted by C(m-1, floor((m-1)/2))
  for (int m = 1; m <= 14; ++m) {
    CHECK(static_cast<long long>(enumerate_pinsets(m).size()) ==
          binom(m - 1, (m - 1) / 2));
  }
}

TEST_CASE("componentwise order") {
  CHECK(componentwise_leq(PinSet({4, 6}), PinSet({5, 6})));
  CHECK_FALSE(componentwise_leq(PinSet({5, 6}), PinSet({4, 6})));
  CHECK(componentwise_leq(PinSet({4, 6}), PinSet({4, 6})));  // reflexive
  // {3,9} and {5,6} are incomparable
  CHECK_FALSE(componentwise_leq(PinSet({3, 9}), PinSet({5, 6})));
  CHECK_FALSE(componentwise_leq(PinSet({5, 6}), PinSet({3, 9})));
  CHECK_THROWS_AS(componentwise_leq(PinSet({3}), PinSet({4, 6})), std::invalid_argument);
}
