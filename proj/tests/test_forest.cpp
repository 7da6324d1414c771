#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pinnacle/forest.hpp"

using namespace pinnacle;

namespace {

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<int> labels_left_to_right(const Tree& t) {
  if (t.is_leaf()) return {t.label()};
  std::vector<int> out = labels_left_to_right(t.left());
  const auto right = labels_left_to_right(t.right());
  out.insert(out.end(), right.begin(), right.end());
  out.push_back(t.label());  // suffix position
  return out;
}

}  // namespace

TEST_CASE("the worked forest for {4,8,9,12} at n = 13") {
  const Forest f = pinset_to_forest(PinSet({4, 8, 9, 12}), 13);
  REQUIRE(f.trees.size() == 5);
  CHECK(to_paren(f) == "o (o o) (o (o o)) (o o) o");
  const std::vector<int> sizes = {1, 3, 5, 3, 1};
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    CHECK(f.trees[i].node_count() == sizes[i]);
  }
  // construction labels equal the left suffix labeling
  CHECK(labels_left_to_right(f.trees[0]) == std::vector<int>{1});
  CHECK(labels_left_to_right(f.trees[1]) == std::vector<int>{2, 3, 4});
  CHECK(labels_left_to_right(f.trees[2]) == std::vector<int>{5, 6, 7, 8, 9});
  CHECK(labels_left_to_right(f.trees[3]) == std::vector<int>{10, 11, 12});
  CHECK(labels_left_to_right(f.trees[4]) == std::vector<int>{13});
  CHECK(f.trees[2].label() == 9);
  CHECK(f.trees[2].right().label() == 8);

  const auto [set, n] = forest_to_pinset(f);
  CHECK(set == PinSet({4, 8, 9, 12}));
  CHECK(n == 13);
}

TEST_CASE("degenerate forests") {
  CHECK(to_paren(pinset_to_forest(PinSet{}, 3)) == "o o o");
  CHECK(to_paren(pinset_to_forest(PinSet({3}), 3)) == "(o o)");
  const auto [set, n] = forest_to_pinset(parse_paren("o"));
  CHECK(set.empty());
  CHECK(n == 1);

  CHECK_THROWS_AS(pinset_to_forest(PinSet({3, 4}), 6), std::invalid_argument);
  CHECK_THROWS_AS(pinset_to_forest(PinSet({5}), 4), std::invalid_argument);
  CHECK_THROWS_AS(pinset_to_forest(PinSet{}, 0), std::invalid_argument);
}

TEST_CASE("paren serialization round trips; malformed input rejected") {
  for (const char* text : {"o", "(o o)", "o (o (o o)) ((o o) o)", "(o o) (o o) o"}) {
    CHECK(to_paren(parse_paren(text)) == text);
  }
  CHECK_THROWS_AS(parse_paren("(o)"), std::invalid_argument);   // one child
  CHECK_THROWS_AS(parse_paren("(o o"), std::invalid_argument);  // unbalanced
  CHECK_THROWS_AS(parse_paren(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_paren("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_paren("(o o o)"), std::invalid_argument);
}

TEST_CASE("ascii rendering carries the labels") {
  Forest f = pinset_to_forest(PinSet({3}), 4);
  const std::string art = ascii_render(f);
  CHECK(art.find('3') != std::string::npos);
  CHECK(art.find('4') != std::string::npos);
  CHECK(art.find("`--") != std::string::npos);
}

TEST_CASE("enumeration counts and bijection round trip") {
  for (int n = 1; n <= 11; ++n) {
    const std::vector<Forest> forests = enumerate_forests(n);
    CHECK(static_cast<long long>(forests.size()) == binom(n - 1, (n - 1) / 2));
    CHECK(forests.size() == enumerate_pinsets(n).size());
    for (const Forest& f : forests) {
      const auto [set, nodes] = forest_to_pinset(f);
      CHECK(nodes == n);
      CHECK(set.admissible());
      CHECK(to_paren(pinset_to_forest(set, nodes)) == to_paren(f));
    }
  }
}

TEST_CASE("p over forests") {
  CountEngine engine;
  CHECK(p_of_forest(parse_paren("o"), engine) == 1);
  CHECK(p_of_forest(parse_paren("o o"), engine) == 2);
  CHECK(p_of_forest(parse_paren("(o o)"), engine) == 2);  // p_3({3})

  // appending a one-node tree on the right doubles the count
  CHECK(p_of_forest(parse_paren("(o o) o"), engine) ==
        2 * p_of_forest(parse_paren("(o o)"), engine));
}

TEST_CASE("tree factorization (proved) and forest conjecture (normalized)") {
  CountEngine engine;
  const Forest worked = pinset_to_forest(PinSet({4, 8, 9, 12}), 13);
  CHECK(check_tree_factorization(worked, engine).equal);

  // T_1 = O makes the proposition trivially p(F) = 1 * p(F)
  const FactorizationCheck trivial =
      check_tree_factorization(parse_paren("o (o o)"), engine);
  CHECK(trivial.equal);
  CHECK(trivial.rhs == trivial.lhs);

  const FactorizationCheck conj = check_forest_conjecture(parse_paren("o (o o)"), engine);
  CHECK(conj.equal);

  CHECK_THROWS_AS(check_forest_conjecture(parse_paren("(o o) o"), engine),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_forest_conjecture(parse_paren("o"), engine), std::invalid_argument);

  const ForestScanReport scan = scan_forests(10, engine);
  CHECK(scan.forests_checked > 0);
  CHECK(scan.roundtrip_failures == 0);
  CHECK(scan.count_mismatches == 0);
  CHECK(scan.proposition_failures == 0);
  CHECK(scan.conjecture_mismatches.empty());
  CHECK(scan.conjecture_checked > 0);
}
