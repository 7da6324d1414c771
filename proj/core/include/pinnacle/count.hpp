#pragma once

#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pinnacle/bigint.hpp"
#include "pinnacle/pinset.hpp"

namespace pinnacle {

struct RecursionStats {
  std::size_t memo_entries = 0;   // (set, n) keys stored by the three-term recursion
  std::size_t distinct_sets = 0;  // distinct pinnacle sets seen by any evaluation step
};

/// Memoized evaluator for p_n(S), the number of permutations of {1..n}
/// with pinnacle set exactly S, and its normalized companion
/// p'_n(S) = p_n(S) / 2^(n-1-|S|).
///
/// The memo persists for the lifetime of the instance and is keyed on the
/// canonical element sequence paired with n. One instance must stay
/// confined to a single execution context; distinct instances are
/// independent and results are deterministic either way.
class CountEngine {
 public:
  /// Evaluation order: inadmissible S, max(S) > n, or (S nonempty, n <= 2)
  /// give 0; empty S gives 2^(n-1) for n >= 1 and 0 for n = 0; n > max(S)
  /// scales as 2^(n-max(S)) * p(S, max(S)); otherwise the three-term
  /// recursion with coefficients 1, 2, 2(n-t) applies.
  /// Throws std::invalid_argument on n < 0.
  BigInt p(const PinSet& s, int n);

  /// Exact quotient p(S,n) / 2^(n-1-|S|); independent of n once
  /// n >= max(S). Requires n >= max(S) (n >= 1 for the empty set).
  /// Throws std::logic_error("divisibility violated") if the division is
  /// not exact — a checked invariant that must never fire.
  BigInt p_prime(const PinSet& s, int n);

  RecursionStats stats() const {
    return RecursionStats{memo_.size(), touched_.size()};
  }
  void clear();

 private:
  struct Key {
    std::vector<int> set;
    int n;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  BigInt eval(const PinSet& s, int n);

  std::unordered_map<Key, BigInt, KeyHash> memo_;
  std::unordered_set<PinSet, PinSetHash> touched_;
  long depth_ = 0;
  long depth_limit_ = 0;
};

/// Evaluates p with a fresh memo and reports the counters.
RecursionStats recursion_stats(const PinSet& s, int n);

/// 2^(n-2) * (2^(n-2) - 1) = p_n({n}); requires n >= 3.
BigInt closed_form_single(int n);

/// 2^(2n-l-5) * (3^(l-1) - 2^l + 1) - 2^(n-3) * (2^(l-2) - 1) = p_n({l,n});
/// requires 3 <= l < n.
BigInt closed_form_pair(int l, int n);

struct MonotonicityViolation {
  PinSet lower, upper;
  BigInt p_lower, p_upper;
};

struct MonotonicityReport {
  int n = 0;
  int set_size = 0;
  long pairs_checked = 0;
  std::vector<MonotonicityViolation> violations;
};

/// Checks p_n(S1) < p_n(S2) for every ordered pair S1 != S2 of admissible
/// sets of the given size with max <= n and S1 componentwise <= S2.
MonotonicityReport monotonicity_scan(int n, int set_size);

}  // namespace pinnacle
