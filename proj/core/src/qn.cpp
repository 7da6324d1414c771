/*
  The weighted sum q_n(S) and its conjectured closed form q'_n(S) r_n(S).

  The r factor comes from a family of formal expressions: E_1 is
  x_{1,3} + x_{1,1} and deeper levels alternate the substitutions f_o
  (halving, odd indices only) and f_e (doubling). Evaluating E_{|S|-1}
  with x_{i,j} -> j^{d_{p-i}} against the gap vector D(S) yields r.
*/

#include "pinnacle/qn.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pinnacle {

FormalExpr::FormalExpr(std::vector<Monomial> monos) : monos_(std::move(monos)) {
  std::sort(monos_.begin(), monos_.end(),
            [](const Monomial& a, const Monomial& b) { return b < a; });
  if (std::adjacent_find(monos_.begin(), monos_.end()) != monos_.end()) {
    throw std::logic_error("duplicate monomials in formal expression");
  }
  for (const Monomial& m : monos_) {
    if (m.indices.size() != monos_.front().indices.size()) {
      throw std::logic_error("ragged monomials in formal expression");
    }
  }
}

std::size_t FormalExpr::levels() const {
  return monos_.empty() ? 0 : monos_.front().indices.size();
}

FormalExpr FormalExpr::apply_fo() const {
  std::vector<Monomial> out;
  out.reserve(monos_.size() * 2);
  for (const Monomial& m : monos_) {
    const int top = m.indices.empty() ? 0 : m.indices.back();
    if (top % 2 == 0) throw std::domain_error("parity violation");
    for (int next : {(top + 1) / 2, (top - 1) / 2}) {
      if (next == 0) continue;  // x_{a,0} = 0 annihilates the branch
      Monomial child = m;
      child.indices.push_back(next);
      out.push_back(std::move(child));
    }
  }
  return FormalExpr(std::move(out));
}

FormalExpr FormalExpr::apply_fe() const {
  std::vector<Monomial> out;
  out.reserve(monos_.size() * 2);
  for (const Monomial& m : monos_) {
    const int top = m.indices.empty() ? 0 : m.indices.back();
    for (int next : {2 * top + 1, 2 * top - 1}) {
      if (next <= 0) continue;
      Monomial child = m;
      child.indices.push_back(next);
      out.push_back(std::move(child));
    }
  }
  return FormalExpr(std::move(out));
}

FormalExpr FormalExpr::from_monomials(std::vector<Monomial> monos) {
  return FormalExpr(std::move(monos));
}

FormalExpr FormalExpr::build_E(int k) {
  if (k < 0) throw std::invalid_argument("build_E requires k >= 0");
  if (k == 0) return FormalExpr({Monomial{}});
  FormalExpr expr({Monomial{{3}}, Monomial{{1}}});
  for (int level = 2; level <= k; ++level) {
    expr = (level % 2 == 0) ? expr.apply_fo() : expr.apply_fe();
  }
  return expr;
}

std::string FormalExpr::to_string() const {
  if (monos_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    if (i) out += " + ";
    const Monomial& m = monos_[i];
    if (m.indices.empty()) {
      out += '1';
      continue;
    }
    for (std::size_t a = 0; a < m.indices.size(); ++a) {
      if (a) out += '*';
      out += "x[" + std::to_string(a + 1) + "," + std::to_string(m.indices[a]) + "]";
    }
  }
  return out;
}

BigInt FormalExpr::evaluate(std::span<const int> gaps) const {
  if (gaps.size() != levels()) {
    throw std::invalid_argument("gap vector length must match expression depth");
  }
  const std::size_t m = levels();
  BigInt total = 0;
  for (const Monomial& mono : monos_) {
    BigInt term = 1;
    for (std::size_t a = 0; a < m; ++a) {
      // level a+1 evaluates against d_{p-(a+1)} = gaps[m-a-1]
      const int d = gaps[m - a - 1];
      if (d < 0) throw std::invalid_argument("gap entries must be nonnegative");
      term *= ipow(mono.indices[a], static_cast<unsigned long>(d));
    }
    total += term;
  }
  return total;
}

std::vector<int> gap_vector(const PinSet& s) {
  if (s.empty()) throw std::invalid_argument("gap vector requires a nonempty set");
  const std::vector<int>& e = s.elements();
  std::vector<int> gaps;
  gaps.reserve(e.size() - 1);
  if (e.size() >= 2) {
    gaps.push_back(e[0] - 1);
    for (std::size_t i = 1; i + 1 < e.size(); ++i) gaps.push_back(e[i] - e[i - 1]);
  }
  return gaps;
}

BigInt r_factor(const PinSet& s) {
  if (s.size() <= 1) return 1;
  const std::vector<int> gaps = gap_vector(s);
  return FormalExpr::build_E(static_cast<int>(s.size()) - 1).evaluate(gaps);
}

long long q_prime_exponent(const PinSet& s, int n) {
  long long exp = n - 1;
  const std::vector<int>& e = s.elements();
  bool add_side = true;  // reading S downward: +(s-2), then -s, ...
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    exp += add_side ? (*it - 2) : -*it;
    add_side = !add_side;
  }
  return exp;
}

BigInt q_prime(const PinSet& s, int n) {
  if (!s.empty() && n < s.max()) {
    throw std::invalid_argument("q' requires n >= max(S)");
  }
  const long long exp = q_prime_exponent(s, n);
  if (exp < 0) throw std::domain_error("q' undefined");
  return pow2(exp);
}

BigInt q_def(const PinSet& s, int n, CountEngine& engine) {
  if (n < 1) throw std::invalid_argument("q requires n >= 1");
  const std::vector<int>& e = s.elements();
  if (e.size() > 24) throw std::length_error("subset sum too large");
  BigInt total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << e.size()); ++mask) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(e[i]);
    }
    const auto weight = static_cast<long long>(subset.size());
    total += pow2(weight) * engine.p(PinSet(std::move(subset)), n);
  }
  return total;
}

ConjectureCheck conjecture_check(const PinSet& s, int n, CountEngine& engine) {
  if (!s.admissible()) throw std::invalid_argument("conjecture_check requires an admissible set");
  if (!s.empty() && n < s.max()) throw std::invalid_argument("conjecture_check requires n >= max(S)");
  ConjectureCheck out;
  out.lhs = q_def(s, n, engine);
  out.rhs = q_prime(s, n) * r_factor(s);
  out.equal = out.lhs == out.rhs;
  return out;
}

QScanReport conjecture_scan(int max_value, CountEngine& engine) {
  QScanReport report;
  report.max_value = max_value;
  for (const PinSet& s : enumerate_pinsets(max_value)) {
    const int n = s.empty() ? 1 : s.max();
    ++report.sets_checked;
    BigInt rhs;
    try {
      rhs = q_prime(s, n) * r_factor(s);
    } catch (const std::domain_error&) {
      report.exponent_flags.push_back(s);
      continue;
    }
    const BigInt lhs = q_def(s, n, engine);
    if (lhs != rhs) {
      report.mismatches.push_back(QScanMismatch{s, n, lhs, rhs});
    }
  }
  return report;
}

}  // namespace pinnacle
