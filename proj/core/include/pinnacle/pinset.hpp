#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace pinnacle {

/// A candidate pinnacle set: strictly increasing integers, each >= 2.
/// The set may be inadmissible (no permutation realizes it); admissibility
/// is a query, not a construction constraint.
class PinSet {
 public:
  PinSet() = default;

  /// Takes a strictly increasing sequence with all elements >= 2.
  /// Throws std::invalid_argument otherwise.
  explicit PinSet(std::vector<int> ascending);

  const std::vector<int>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  int max() const;  // requires nonempty
  bool contains(int value) const;

  /// True iff s_i > 2i for every element (1-indexed, ascending).
  bool admissible() const;

  /// Brace notation, e.g. "{4,8,12}"; "{}" for the empty set.
  std::string to_string() const;

  friend bool operator==(const PinSet&, const PinSet&) = default;
  friend std::strong_ordering operator<=>(const PinSet& a, const PinSet& b) {
    return a.elems_ <=> b.elems_;
  }

 private:
  std::vector<int> elems_;
};

struct PinSetHash {
  std::size_t operator()(const PinSet& s) const noexcept;
};

/// S split at t = the largest value below max(S) that is not in S.
/// S = below ∪ {t+1, ..., run_end} with every element of below < t.
struct Decomposition {
  int t = 0;
  PinSet below;
  int run_begin = 0;  // t + 1
  int run_end = 0;    // max(S)
};

/// Throws std::invalid_argument on the empty set ("no decomposition of
/// empty set").
Decomposition decompose(const PinSet& s);

/// All admissible pinnacle sets (including {}) with maximum <= max_value,
/// in lexicographic order of their element sequences.
std::vector<PinSet> enumerate_pinsets(int max_value);

/// s_i <= s'_i for every position; requires equal sizes (throws
/// std::invalid_argument on mismatch).
bool componentwise_leq(const PinSet& a, const PinSet& b);

}  // namespace pinnacle
