#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pinnacle/bigint.hpp"
#include "pinnacle/perm.hpp"

using namespace pinnacle;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::multiset<int> as_multiset(const std::vector<int>& v) {
  return std::multiset<int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("construction and parsing") {
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
  CHECK(Permutation::parse("142365") == Permutation({1, 4, 2, 3, 6, 5}));
  CHECK(Permutation::parse("1,4,2,3,6,5") == Permutation({1, 4, 2, 3, 6, 5}));
  CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").size() == 10);
  CHECK_THROWS_AS(Permutation::parse("10"), std::invalid_argument);  // digits 1,0
  CHECK_THROWS_AS(Permutation::parse("1,,2"), std::invalid_argument);
  CHECK(Permutation({1, 4, 2, 3, 6, 5}).to_string() == "1,4,2,3,6,5");
  CHECK(Permutation({1, 4, 2, 3, 6, 5}).compact() == "142365");
}

TEST_CASE("pinnacles, peaks, vales") {
  const Permutation p = Permutation::parse("142365");
  CHECK(p.pinnacle_set() == PinSet({4, 6}));
  CHECK(p.peak_positions() == std::vector<int>{2, 5});
  CHECK(Permutation::parse("123").pinnacle_set().empty());
  CHECK(Permutation::parse("15243").pinnacle_set() == PinSet({4, 5}));
  CHECK(Permutation::parse("123").vale_values() == std::vector<int>{1});
  CHECK(Permutation::parse("213").vale_values() == std::vector<int>{1});
  CHECK(Permutation::parse("142365").vale_values() == std::vector<int>{1, 2, 5});

  // one more vale than peaks, always
  for (const Permutation& q : all_permutations(6)) {
    CHECK(q.vale_values().size() == q.peak_positions().size() + 1);
  }
}

TEST_CASE("factorization around a letter") {
  const Factorization f = Permutation::parse("142365").factorize(4);
  CHECK(f.alpha.empty());
  CHECK(f.beta == std::vector<int>{1});
  CHECK(f.gamma == std::vector<int>{2, 3});
  CHECK(f.delta == std::vector<int>{6, 5});

  const Factorization g = Permutation::parse("123").factorize(1);
  CHECK(g.alpha.empty());
  CHECK(g.beta.empty());
  CHECK(g.gamma.empty());
  CHECK(g.delta == std::vector<int>{2, 3});

  const Factorization h = Permutation::parse("213").factorize(2);
  CHECK(h.beta.empty());
  CHECK(h.gamma == std::vector<int>{1});
  CHECK(h.delta == std::vector<int>{3});

  CHECK_THROWS_AS(Permutation::parse("123").factorize(7), std::invalid_argument);
}

TEST_CASE("phi is an involution fixing vales") {
  CHECK(Permutation::parse("213").phi(2) == Permutation::parse("123"));
  for (const Permutation& p : all_permutations(6)) {
    const auto vales = p.vale_values();
    for (int k = 1; k <= 6; ++k) {
      const Permutation q = p.phi(k);
      CHECK(q.phi(k) == p);  // involution
      CHECK(q.pinnacle_set() == p.pinnacle_set());
      CHECK(q.vale_values() == vales);
      const bool is_vale = std::binary_search(vales.begin(), vales.end(), k);
      CHECK((q == p) == is_vale);
    }
  }
}

TEST_CASE("phi maps commute") {
  for (const Permutation& p : all_permutations(5)) {
    for (int j = 1; j <= 5; ++j) {
      for (int k = j + 1; k <= 5; ++k) {
        CHECK(p.phi(j).phi(k) == p.phi(k).phi(j));
      }
    }
  }
}

TEST_CASE("phi_set composes in any order") {
  CHECK(Permutation::parse("213").phi_set({2, 3}) == Permutation::parse("312"));
  CHECK(Permutation::parse("213").phi_set({3, 2}) == Permutation::parse("312"));
  const Permutation p = Permutation::parse("1527436");
  CHECK(p.phi_set({}) == p);
  CHECK(p.phi_set(p.vale_values()) == p);
  CHECK_THROWS_AS(p.phi_set({9}), std::invalid_argument);
}

TEST_CASE("neighborhood stability under other phis") {
  // for k != l, phi_l permutes beta_k and gamma_k only within themselves
  for (const Permutation& p : all_permutations(6)) {
    for (int l = 1; l <= 6; ++l) {
      const Permutation q = p.phi(l);
      for (int k = 1; k <= 6; ++k) {
        if (k == l) continue;
        const Factorization before = p.factorize(k);
        const Factorization after = q.factorize(k);
        CHECK(as_multiset(before.beta) == as_multiset(after.beta));
        CHECK(as_multiset(before.gamma) == as_multiset(after.gamma));
      }
    }
  }
}

TEST_CASE("orbits: closure equals subset construction, cardinality law") {
  const auto orb123 = Permutation::parse("123").orbit();
  CHECK(orb123 == std::vector<Permutation>{
                      Permutation::parse("123"), Permutation::parse("213"),
                      Permutation::parse("312"), Permutation::parse("321")});
  const auto orb132 = Permutation::parse("132").orbit();
  CHECK(orb132 ==
        std::vector<Permutation>{Permutation::parse("132"), Permutation::parse("231")});
  CHECK(Permutation::parse("1").orbit() == std::vector<Permutation>{Permutation::parse("1")});

  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      const auto bfs = p.orbit();
      CHECK(bfs == p.orbit_via_subsets());
      const auto size = n - 1 - static_cast<int>(p.pinnacle_set().size());
      CHECK(BigInt(bfs.size()) == pow2(size));
    }
  }
}

TEST_CASE("orbits partition S_n") {
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> seen;
    long orbits = 0;
    for (const Permutation& p : all_permutations(n)) {
      if (seen.contains(p)) continue;
      ++orbits;
      for (const Permutation& q : p.orbit()) {
        CHECK(seen.insert(q).second);
      }
    }
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(static_cast<long>(seen.size()) == fact);
    CHECK(orbits > 0);
  }
}

TEST_CASE("representative conditions and lexicographic minima") {
  CHECK(Permutation::parse("142365").satisfies_rep_conditions());
  CHECK_FALSE(Permutation::parse("214365").satisfies_rep_conditions());  // starts with 2
  CHECK_FALSE(Permutation::parse("1432").satisfies_rep_conditions());    // 4>3>2

  CHECK(Permutation::parse("321").lex_min_of_orbit() == Permutation::parse("123"));
  CHECK(Permutation::parse("231").lex_min_of_orbit() == Permutation::parse("132"));

  for (int n = 1; n <= 6; ++n) {
    std::set<Permutation> seen;
    for (const Permutation& p : all_permutations(n)) {
      if (seen.contains(p)) continue;
      const auto orbit = p.orbit();
      seen.insert(orbit.begin(), orbit.end());
      int conditioned = 0;
      for (const Permutation& q : orbit) {
        if (q.satisfies_rep_conditions()) ++conditioned;
        CHECK(q.lex_min_of_orbit() == orbit.front());
      }
      CHECK(conditioned == 1);
      CHECK(orbit.front().satisfies_rep_conditions());
      // idempotence: the minimum is its own minimum
      CHECK(orbit.front().lex_min_of_orbit() == orbit.front());
    }
  }
}

TEST_CASE("inversions and weak order covers") {
  CHECK(Permutation::parse("1342").inversions() == 2);
  CHECK(Permutation::parse("132").covers_down() ==
        std::vector<Permutation>{Permutation::parse("123")});
  CHECK(Permutation::parse("123").covers_down().empty());
  CHECK(Permutation::parse("123").covers_up().size() == 2);

  for (const Permutation& p : all_permutations(5)) {
    for (const Permutation& d : p.covers_down()) CHECK(d.inversions() == p.inversions() - 1);
    for (const Permutation& u : p.covers_up()) CHECK(u.inversions() == p.inversions() + 1);
    CHECK(p.covers_down().size() + p.covers_up().size() == 4);  // one swap per value pair
  }
}

TEST_CASE("standardize") {
  CHECK(standardize({1, 5, 7, 2, 6}) == Permutation::parse("13524"));
  CHECK(standardize({1, 2, 3}) == Permutation::parse("123"));
  CHECK(standardize({9, 7}) == Permutation::parse("21"));
  CHECK_THROWS_AS(standardize({4, 4}), std::invalid_argument);
}
