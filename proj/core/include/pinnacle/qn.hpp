#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pinnacle/bigint.hpp"
#include "pinnacle/count.hpp"
#include "pinnacle/pinset.hpp"

namespace pinnacle {

/// A product x_{1,k_1} x_{2,k_2} ... x_{m,k_m}, one indexed variable per
/// level. indices[a-1] holds k_a; every k_a >= 1 (a variable with second
/// index 0 annihilates its monomial and is pruned on construction).
struct Monomial {
  std::vector<int> indices;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// A multiplicity-free sum of monomials sharing one top level, kept in
/// descending lexicographic order.
class FormalExpr {
 public:
  /// E_0 = 1 (the empty product); E_1 = x_{1,3} + x_{1,1};
  /// E_{2k} = f_o(E_{2k-1}), E_{2k+1} = f_e(E_{2k}).
  static FormalExpr build_E(int k);

  /// Assembles an expression from explicit monomials (fixture support).
  /// Rejects duplicates and ragged level counts.
  static FormalExpr from_monomials(std::vector<Monomial> monos);

  /// Extends every monomial by x_{a+1,(k+1)/2} + x_{a+1,(k-1)/2} where k
  /// is its top index. Requires every top index odd; throws
  /// std::domain_error("parity violation") otherwise. Zero-index branches
  /// are pruned.
  FormalExpr apply_fo() const;

  /// Extends every monomial by x_{a+1,2k+1} + x_{a+1,2k-1}.
  FormalExpr apply_fe() const;

  std::size_t term_count() const { return monos_.size(); }
  std::size_t levels() const;  // number of variables per monomial
  const std::vector<Monomial>& monomials() const { return monos_; }

  /// Fully expanded sum-of-products text, e.g.
  /// "x[1,3]*x[2,2] + x[1,3]*x[2,1] + x[1,1]*x[2,1]"; "1" for E_0.
  std::string to_string() const;

  /// Substitutes x_{i,j} -> j^(gaps[p-i-1]) with p-1 = levels(), i.e.
  /// level i reads the gap d_{p-i}. gaps.size() must equal levels().
  BigInt evaluate(std::span<const int> gaps) const;

  friend bool operator==(const FormalExpr&, const FormalExpr&) = default;

 private:
  explicit FormalExpr(std::vector<Monomial> monos);
  std::vector<Monomial> monos_;
};

/// D(S) = (s_1 - 1, s_2 - s_1, ..., s_{p-1} - s_{p-2}); p-1 entries.
/// Requires |S| >= 1.
std::vector<int> gap_vector(const PinSet& s);

/// ev(E_{|S|-1}) against D(S); defined as 1 for |S| <= 1 (including the
/// empty set). Depends only on the gap vector, not on n or max(S).
BigInt r_factor(const PinSet& s);

/// Exponent of the 2-power factor: (n-1) plus, reading S downward from its
/// maximum, alternately +(s-2) and -s. May be negative on inadmissible
/// input; never on admissible (tested).
long long q_prime_exponent(const PinSet& s, int n);

/// 2^q_prime_exponent. Requires n >= max(S); throws
/// std::domain_error("q' undefined") on a negative exponent.
BigInt q_prime(const PinSet& s, int n);

/// The defining weighted sum q_n(S) = sum over subsets I of S of
/// 2^|I| * p_n(I). Any PinSet is accepted; inadmissible subsets
/// contribute zero. Requires n >= 1.
BigInt q_def(const PinSet& s, int n, CountEngine& engine);

struct ConjectureCheck {
  BigInt lhs;  // q_def
  BigInt rhs;  // q_prime * r_factor
  bool equal = false;
};

/// Compares the defining sum against the conjectured product for an
/// admissible S at n >= max(S).
ConjectureCheck conjecture_check(const PinSet& s, int n, CountEngine& engine);

struct QScanMismatch {
  PinSet set;
  int n = 0;
  BigInt lhs, rhs;
};

struct QScanReport {
  int max_value = 0;
  long sets_checked = 0;
  std::vector<QScanMismatch> mismatches;      // a nonempty list is news
  std::vector<PinSet> exponent_flags;         // q' undefined (never seen)
};

/// Runs conjecture_check over every admissible S with max(S) <= max_value
/// at n = max(S) (n = 1 for the empty set). The doubling law
/// q_{n+1} = 2 q_n extends the verdict to all larger n.
QScanReport conjecture_scan(int max_value, CountEngine& engine);

}  // namespace pinnacle
