#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "pinnacle/count.hpp"
#include "pinnacle/perm.hpp"
#include "pinnacle/pinset.hpp"

namespace pinnacle {

/// The canonical representatives of the Foata-Strehl orbits inside the
/// permutations with pinnacle set S: exactly the lexicographically minimal
/// orbit elements. |members| = p'_n(S).
struct RepSet {
  PinSet set;
  int n = 0;
  std::vector<Permutation> members;  // sorted lexicographically
};

/// Inductive construction of the representative sets.
///
/// Base: the identity for the empty set. For n > max(S), append n to every
/// member one size down. For n = max(S) with S = T ∪ {t+1,...,n}, take the
/// union of three images: (A1) swap the values t, t+1 in the set for
/// T ∪ {t,t+2,...,n}; (A2) relabel the set for T ∪ {t,...,n-1} by sending
/// t to the pair t,t+1 and shifting larger values up; (A3) from the set
/// for T ∪ {t,...,n-2}, for each q in {t,...,n-2} replace the letter q by
/// the triple t+1,t,q+2 shifting other letters >= t up by two, plus one
/// final map that only shifts and glues t+1,t on the right. All images are
/// disjoint; construction asserts this.
///
/// Sub-results are memoized per builder; sets with more members than the
/// cap are recomputed instead of stored, which bounds the memo to
/// (#keys) * cap words.
class RepSetBuilder {
 public:
  explicit RepSetBuilder(std::size_t memo_member_cap = 200000)
      : memo_member_cap_(memo_member_cap) {}

  /// Throws std::invalid_argument("no representatives") when S is
  /// inadmissible or n < max(S) (or n < 1).
  RepSet build(const PinSet& s, int n);

  /// Streaming form of build: emits every member exactly once (order
  /// unspecified) without materializing oversized sets.
  void for_each(const PinSet& s, int n,
                const std::function<void(const Permutation&)>& emit);

  std::size_t memoized_sets() const { return memo_.size(); }

 private:
  using Key = std::pair<std::vector<int>, int>;
  using MemberList = std::shared_ptr<const std::vector<Permutation>>;

  // Empty result for inadmissible sets; the induction passes through them.
  MemberList members(const PinSet& s, int n);
  void stream(const PinSet& s, int n,
              const std::function<void(const Permutation&)>& emit);

  std::map<Key, MemberList> memo_;
  std::size_t memo_member_cap_;
  CountEngine sizes_;  // predicts |result| = p'(S, n) for cap decisions
};

struct IdealViolation {
  Permutation member;
  Permutation missing_cover;
};

struct IdealCheckReport {
  int n = 0;
  std::size_t members = 0;
  long covers_checked = 0;
  std::vector<IdealViolation> violations;
};

/// Verifies that the union of all representative sets at size n is closed
/// downward under the left weak order cover relation.
IdealCheckReport check_lower_ideal(int n);

/// True iff no upward cover of sigma stays inside the representative
/// ideal. Requires sigma to be a member (throws std::invalid_argument
/// otherwise). Also evaluates the recursive characterization — cut at the
/// letter n, both standardized halves maximal, the right half an interval
/// [2,l] — and throws std::logic_error if the two definitions ever
/// disagree.
bool is_maximal(const Permutation& sigma);

/// M_n, the maximal elements: M_1 = {1}, M_2 = {12}, and every element of
/// M_n is a_(n-1-k) n b_k with a's values >= 2 shifted by k and b's values
/// shifted by 1, for k = 1..n-2. Sorted lexicographically.
std::vector<Permutation> build_max_set(int n);

}  // namespace pinnacle
