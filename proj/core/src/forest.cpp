#include "pinnacle/forest.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pinnacle {

Tree::Tree(Tree left, Tree right)
    : left_(std::make_unique<Tree>(std::move(left))),
      right_(std::make_unique<Tree>(std::move(right))) {}

Tree::Tree(const Tree& other) : label_(other.label_) {
  if (!other.is_leaf()) {
    left_ = std::make_unique<Tree>(*other.left_);
    right_ = std::make_unique<Tree>(*other.right_);
  }
}

Tree& Tree::operator=(const Tree& other) {
  if (this != &other) {
    Tree copy(other);
    *this = std::move(copy);
  }
  return *this;
}

const Tree& Tree::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return *left_;
}

const Tree& Tree::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return *right_;
}

int Tree::node_count() const {
  return is_leaf() ? 1 : 1 + left_->node_count() + right_->node_count();
}

int Forest::node_count() const {
  int total = 0;
  for (const Tree& t : trees) total += t.node_count();
  return total;
}

int label_left_suffix(Tree& t, int next) {
  if (!t.is_leaf()) {
    next = label_left_suffix(*t.left_, next);
    next = label_left_suffix(*t.right_, next);
  }
  t.label_ = next;
  return next + 1;
}

int assign_left_suffix_labels(Forest& f) {
  int next = 1;
  for (Tree& t : f.trees) next = label_left_suffix(t, next);
  return next - 1;
}

Forest pinset_to_forest(const PinSet& s, int n) {
  if (n < 1) throw std::invalid_argument("forest requires n >= 1");
  if (!s.admissible()) throw std::invalid_argument("no forest for an inadmissible set");
  if (!s.empty() && s.max() > n) throw std::invalid_argument("forest requires n >= max(S)");

  struct Node {
    int label = 0;
    Node* left = nullptr;
    Node* right = nullptr;
  };
  std::deque<Node> pool;
  auto fresh = [&pool]() { pool.emplace_back(); return &pool.back(); };

  std::deque<Node*> roots{fresh()};
  std::vector<Node*> empties{roots.front()};  // stack; rightmost on top
  for (int k = n; k >= 1; --k) {
    if (empties.empty()) {
      roots.push_front(fresh());
      empties.push_back(roots.front());
    }
    Node* node = empties.back();
    empties.pop_back();
    node->label = k;
    if (s.contains(k)) {
      node->left = fresh();
      node->right = fresh();
      empties.push_back(node->left);
      empties.push_back(node->right);  // right child is the rightmost empty
    }
  }
  if (!empties.empty()) throw std::logic_error("forest construction left empty nodes");

  auto convert = [](auto&& self, const Node* node) -> Tree {
    Tree t = node->left ? Tree(self(self, node->left), self(self, node->right)) : Tree();
    t.set_label(node->label);
    return t;
  };
  Forest f;
  for (const Node* root : roots) f.trees.push_back(convert(convert, root));
  return f;
}

namespace {

void read_internal_labels(const Tree& t, int& next, std::vector<int>& internal) {
  if (t.is_leaf()) {
    ++next;
    return;
  }
  read_internal_labels(t.left(), next, internal);
  read_internal_labels(t.right(), next, internal);
  internal.push_back(++next);
}

}  // namespace

std::pair<PinSet, int> forest_to_pinset(const Forest& f) {
  int next = 0;
  std::vector<int> internal;
  for (const Tree& t : f.trees) read_internal_labels(t, next, internal);
  std::sort(internal.begin(), internal.end());
  return {PinSet(std::move(internal)), next};
}

std::string to_paren(const Tree& t) {
  if (t.is_leaf()) return "o";
  return "(" + to_paren(t.left()) + " " + to_paren(t.right()) + ")";
}

std::string to_paren(const Forest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += ' ';
    out += to_paren(f.trees[i]);
  }
  return out;
}

namespace {

Tree parse_tree(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos >= text.size()) throw std::invalid_argument("unexpected end of forest text");
  if (text[pos] == 'o') {
    ++pos;
    return Tree();
  }
  if (text[pos] != '(') {
    throw std::invalid_argument(std::string("unexpected character '") + text[pos] + "'");
  }
  ++pos;  // '('
  Tree left = parse_tree(text, pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos < text.size() && text[pos] == ')') {
    throw std::invalid_argument("malformed tree (one child)");
  }
  Tree right = parse_tree(text, pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos >= text.size() || text[pos] != ')') {
    throw std::invalid_argument("malformed tree (expected ')')");
  }
  ++pos;
  return Tree(std::move(left), std::move(right));
}

}  // namespace

Forest parse_paren(std::string_view text) {
  Forest f;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    f.trees.push_back(parse_tree(text, pos));
  }
  if (f.trees.empty()) throw std::invalid_argument("empty forest");
  return f;
}

namespace {

void render_tree(const Tree& t, const std::string& prefix, bool tail, bool root,
                 std::string& out) {
  out += prefix;
  if (!root) out += tail ? "`-- " : "|-- ";
  out += t.label() ? std::to_string(t.label()) : std::string("o");
  out += '\n';
  if (!t.is_leaf()) {
    const std::string child_prefix = root ? prefix : prefix + (tail ? "    " : "|   ");
    render_tree(t.left(), child_prefix, false, false, out);
    render_tree(t.right(), child_prefix, true, false, out);
  }
}

}  // namespace

std::string ascii_render(const Forest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += '\n';
    render_tree(f.trees[i], "", true, true, out);
  }
  return out;
}

namespace {

const std::vector<Tree>& trees_of_size(int nodes) {
  // deque keeps references to filled entries stable while growing
  static std::deque<std::vector<Tree>> cache;  // cache[m] = trees with m nodes
  if (static_cast<int>(cache.size()) > nodes) return cache[nodes];
  if (cache.empty()) {
    cache.emplace_back();            // no tree has 0 nodes
    cache.push_back({Tree()});
  }
  for (int m = static_cast<int>(cache.size()); m <= nodes; ++m) {
    std::vector<Tree> out;
    if (m % 2 == 1 && m >= 3) {
      for (int left = 1; left <= m - 2; left += 2) {
        for (const Tree& l : cache[left]) {
          for (const Tree& r : cache[m - 1 - left]) {
            out.emplace_back(Tree(l), Tree(r));
          }
        }
      }
    }
    cache.push_back(std::move(out));
  }
  return cache[nodes];
}

}  // namespace

std::vector<Forest> enumerate_forests(int nodes) {
  if (nodes < 0) throw std::invalid_argument("node count must be nonnegative");
  std::vector<Forest> out;
  if (nodes == 0) return out;
  for (int first = 1; first <= nodes; first += 2) {
    const std::vector<Tree>& heads = trees_of_size(first);
    if (heads.empty()) continue;
    const std::vector<Forest> rests =
        first == nodes ? std::vector<Forest>{} : enumerate_forests(nodes - first);
    for (const Tree& t : heads) {
      if (first == nodes) {
        Forest f;
        f.trees.push_back(t);
        out.push_back(std::move(f));
      } else {
        for (const Forest& rest : rests) {
          Forest f;
          f.trees.reserve(rest.trees.size() + 1);
          f.trees.push_back(t);
          for (const Tree& r : rest.trees) f.trees.push_back(r);
          out.push_back(std::move(f));
        }
      }
    }
  }
  return out;
}

BigInt p_of_forest(const Forest& f, CountEngine& engine) {
  auto [s, n] = forest_to_pinset(f);
  return engine.p(s, n);
}

namespace {

BigInt p_prime_of_forest(const Forest& f, CountEngine& engine) {
  auto [s, n] = forest_to_pinset(f);
  return engine.p_prime(s, n);
}

Forest drop_first_replacing_with_leaf(const Forest& f) {
  Forest out;
  out.trees.reserve(f.trees.size());
  out.trees.emplace_back();
  for (std::size_t i = 1; i < f.trees.size(); ++i) out.trees.push_back(f.trees[i]);
  return out;
}

}  // namespace

FactorizationCheck check_tree_factorization(const Forest& f, CountEngine& engine) {
  if (f.trees.empty()) throw std::invalid_argument("factorization check needs a nonempty forest");
  FactorizationCheck out;
  out.lhs = p_of_forest(f, engine);

  Forest head;
  head.trees.push_back(f.trees.front());
  out.rhs = p_of_forest(head, engine) * p_of_forest(drop_first_replacing_with_leaf(f), engine);
  out.equal = out.lhs == out.rhs;
  return out;
}

FactorizationCheck check_forest_conjecture(const Forest& f, CountEngine& engine) {
  if (f.trees.size() < 2 || !f.trees.front().is_leaf()) {
    throw std::invalid_argument("conjecture check needs (O, T2, ...) with >= 2 trees");
  }
  FactorizationCheck out;
  out.lhs = p_prime_of_forest(f, engine);

  Forest head;  // (O, T2)
  head.trees.emplace_back();
  head.trees.push_back(f.trees[1]);
  Forest tail;  // (O, O, T3, ..., Tr)
  tail.trees.emplace_back();
  tail.trees.emplace_back();
  for (std::size_t i = 2; i < f.trees.size(); ++i) tail.trees.push_back(f.trees[i]);

  out.rhs = p_prime_of_forest(head, engine) * p_prime_of_forest(tail, engine);
  out.equal = out.lhs == out.rhs;
  return out;
}

ForestScanReport scan_forests(int max_nodes, CountEngine& engine) {
  ForestScanReport report;
  report.max_nodes = max_nodes;
  for (int n = 1; n <= max_nodes; ++n) {
    const std::vector<Forest> forests = enumerate_forests(n);
    if (forests.size() != enumerate_pinsets(n).size()) ++report.count_mismatches;
    for (const Forest& f : forests) {
      ++report.forests_checked;
      auto [s, nodes] = forest_to_pinset(f);
      if (nodes != n || to_paren(pinset_to_forest(s, nodes)) != to_paren(f)) {
        ++report.roundtrip_failures;
      }
      if (!check_tree_factorization(f, engine).equal) ++report.proposition_failures;
      if (f.trees.size() >= 2 && f.trees.front().is_leaf()) {
        ++report.conjecture_checked;
        if (!check_forest_conjecture(f, engine).equal) {
          report.conjecture_mismatches.push_back(to_paren(f));
        }
      }
    }
  }
  return report;
}

}  // namespace pinnacle
