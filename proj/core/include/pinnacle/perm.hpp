#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pinnacle/pinset.hpp"

namespace pinnacle {

/// Factorization of a word around a letter k: word = alpha beta k gamma
/// delta, where beta (gamma) is the maximal run of letters < k immediately
/// left (right) of k.
struct Factorization {
  std::vector<int> alpha, beta, gamma, delta;
  int pivot = 0;
};

/// A permutation of {1..n}, stored as its one-line word.
class Permutation {
 public:
  /// Throws std::invalid_argument unless the word is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Accepts "1,4,2,3,6,5" for any n, or the compact digit form "142365"
  /// (single-digit values only, so n <= 9).
  static Permutation parse(std::string_view text);

  const std::vector<int>& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  int value_at(int position) const { return word_.at(position - 1); }  // 1-indexed

  /// Values strictly greater than both neighbors (interior positions only).
  PinSet pinnacle_set() const;

  /// 1-indexed interior positions i with w[i-1] < w[i] > w[i+1].
  std::vector<int> peak_positions() const;

  /// Values smaller than all of their one or two neighbors, endpoints
  /// included; ascending. Always one more vale than peaks.
  std::vector<int> vale_values() const;

  Factorization factorize(int k) const;  // throws if k does not occur

  /// The involution swapping beta_k and gamma_k around k. Fixes the word
  /// exactly when k is a vale. Preserves pinnacle and vale sets.
  Permutation phi(int k) const;

  /// phi over every value in xs (applied in ascending order; the maps
  /// commute, so any order gives the same result).
  Permutation phi_set(const std::vector<int>& xs) const;

  /// Closure of this word under all phi_k, via breadth-first search.
  /// Sorted lexicographically; size is 2^(n-1-|pinnacle set|).
  std::vector<Permutation> orbit() const;

  /// Same orbit, built as { phi_X : X subset of the non-vale values }.
  std::vector<Permutation> orbit_via_subsets() const;

  /// Begins with 1, has no double descent, and every pinnacle k satisfies
  /// min(beta_k) < min(gamma_k).
  bool satisfies_rep_conditions() const;

  Permutation lex_min_of_orbit() const;

  long inversions() const;

  /// All words reached by swapping the values i, i+1 with one fewer
  /// (covers_down) or one more (covers_up) inversion: the left weak order
  /// cover relations.
  std::vector<Permutation> covers_down() const;
  std::vector<Permutation> covers_up() const;

  std::string to_string() const;  // "1,4,2,3,6,5"
  std::string compact() const;    // "142365"; requires n <= 9

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  Permutation() = default;  // trusted internal construction
  static Permutation unchecked(std::vector<int> word);

  std::vector<int> word_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Order-isomorphic relabeling onto 1..length, e.g. 15726 -> 13524.
/// Throws std::invalid_argument on duplicate letters.
Permutation standardize(const std::vector<int>& word);

}  // namespace pinnacle
