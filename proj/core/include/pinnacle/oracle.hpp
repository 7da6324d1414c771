#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pinnacle/perm.hpp"
#include "pinnacle/pinset.hpp"

namespace pinnacle {

/// Hard cap on brute-force enumeration (9! = 362880 permutations keeps
/// every full verification under a minute).
inline constexpr int kOracleMaxN = 9;

/// Exact classification of S_n by pinnacle set.
struct ClassifiedTable {
  int n = 0;
  std::map<PinSet, std::uint64_t> counts;
  std::map<PinSet, std::vector<Permutation>> members;  // only if requested
  std::uint64_t total() const;
};

/// Enumerates all of S_n. Throws std::out_of_range("oracle cap exceeded")
/// for n outside 1..9. Enumeration shards by first letter across up to
/// `threads` workers; the merged result is deterministic.
ClassifiedTable classify(int n, bool keep_members, int threads = 1);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  int n = 0;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Runs the brute-force cross-checks against the fast implementations.
/// Suites: "all", "p" (count agreement, completeness, key coverage),
/// "orbits" (partition and cardinality law), "reps" (representative sets
/// equal the lexicographic orbit minima; unique conditioned member per
/// orbit), "ideal" (downward closure), "maximal" (both maximality
/// definitions and the recursive M_n construction agree).
VerifyReport verify_all(int n, std::string_view suite = "all", int threads = 1);

}  // namespace pinnacle
