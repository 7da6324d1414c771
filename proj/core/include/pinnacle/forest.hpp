#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pinnacle/bigint.hpp"
#include "pinnacle/count.hpp"
#include "pinnacle/pinset.hpp"

namespace pinnacle {

/// A complete binary tree: every node has zero or exactly two children.
/// Nodes carry an optional label (0 = unlabeled).
class Tree {
 public:
  Tree() = default;  // single leaf
  Tree(Tree left, Tree right);

  Tree(const Tree& other);
  Tree& operator=(const Tree& other);
  Tree(Tree&&) noexcept = default;
  Tree& operator=(Tree&&) noexcept = default;

  bool is_leaf() const { return left_ == nullptr; }
  const Tree& left() const;   // requires !is_leaf()
  const Tree& right() const;  // requires !is_leaf()
  int label() const { return label_; }
  void set_label(int label) { label_ = label; }
  int node_count() const;

 private:
  std::unique_ptr<Tree> left_, right_;
  int label_ = 0;
  friend int label_left_suffix(Tree& t, int next);
};

/// An ordered sequence of complete binary trees. After labeling, labels
/// run 1..n in left suffix order (trees left to right; within a tree,
/// left subtree, right subtree, node).
struct Forest {
  std::vector<Tree> trees;
  int node_count() const;
};

/// Builds the labeled forest for (S, n) by the descending construction:
/// place k = n..1 in the rightmost empty node, opening two empty children
/// when k is in S and a fresh one-node tree on the left when no empty node
/// remains. Internal nodes end up labeled exactly by S.
/// Throws std::invalid_argument when S is inadmissible, n < max(S), or
/// n < 1.
Forest pinset_to_forest(const PinSet& s, int n);

/// Reads a forest back: labels in left suffix order, S = internal labels,
/// n = total node count. Ignores any labels already present.
std::pair<PinSet, int> forest_to_pinset(const Forest& f);

/// Overwrites labels with the left suffix numbering; returns n.
int assign_left_suffix_labels(Forest& f);

/// Shape-only text: one-node tree "o", internal node "(L R)", trees
/// separated by single spaces.
std::string to_paren(const Tree& t);
std::string to_paren(const Forest& f);

/// Parses the shape form. Throws std::invalid_argument on malformed input
/// (unbalanced parentheses, a node with one child, empty forest).
Forest parse_paren(std::string_view text);

/// Labeled two-dimensional rendering for terminals.
std::string ascii_render(const Forest& f);

/// All ordered forests of complete binary trees with exactly the given
/// node count; C(nodes-1, floor((nodes-1)/2)) of them.
std::vector<Forest> enumerate_forests(int nodes);

/// p at the pair (S, n) encoded by the forest.
BigInt p_of_forest(const Forest& f, CountEngine& engine);

struct FactorizationCheck {
  BigInt lhs, rhs;
  bool equal = false;
};

/// Proved identity: p(F) = p(T_1) * p(O, T_2, ..., T_r), in raw counts.
/// Requires at least one tree.
FactorizationCheck check_tree_factorization(const Forest& f, CountEngine& engine);

/// Conjectured identity for F = (O, T_2, ..., T_r):
/// p'(F) = p'(O, T_2) * p'(O, O, T_3, ..., T_r).
/// lhs and rhs are the normalized counts p/2^(n-1-|S|) of each forest; the
/// identity is exact in this normalization, while the raw products carry
/// one extra factor of two (the two modified forests total n+2 nodes).
/// Requires the first tree to be a single node and at least two trees.
FactorizationCheck check_forest_conjecture(const Forest& f, CountEngine& engine);

struct ForestScanReport {
  int max_nodes = 0;
  long forests_checked = 0;
  long roundtrip_failures = 0;
  long count_mismatches = 0;        // #forests(n) vs #admissible sets
  long proposition_failures = 0;    // proved identity; any failure is a bug
  long conjecture_checked = 0;
  std::vector<std::string> conjecture_mismatches;  // paren forms; news if nonempty
};

/// Bijection roundtrip, counting, proposition, and conjecture over every
/// forest with at most max_nodes nodes.
ForestScanReport scan_forests(int max_nodes, CountEngine& engine);

}  // namespace pinnacle
