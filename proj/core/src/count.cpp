/*
  Exact evaluation of p_n(S).

  The recursion splits S = T ∪ {t+1,...,n} at t, the largest value below
  max(S) missing from S, and rewrites

      p_n(S) = p_n(T ∪ {t, t+2, ..., n})
             + 2 p_{n-1}(T ∪ {t, ..., n-1})
             + 2(n-t) p_{n-2}(T ∪ {t, ..., n-2}).

  Each right-hand set has a strictly smaller element sum, so iteration
  terminates on empty or inadmissible sets. Only results of this
  three-term step are memoized; base cases and the doubling shortcut
  p_n(S) = 2^(n-max(S)) p_{max(S)}(S) are recomputed on the fly.
*/

#include "pinnacle/count.hpp"

#include <algorithm>
#include <stdexcept>

namespace pinnacle {

std::size_t CountEngine::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int v : k.set) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ull;
  }
  h ^= static_cast<std::size_t>(k.n);
  h *= 0x100000001b3ull;
  return h;
}

void CountEngine::clear() {
  memo_.clear();
  touched_.clear();
  depth_ = 0;
  depth_limit_ = 0;
}

BigInt CountEngine::p(const PinSet& s, int n) {
  if (n < 0) throw std::invalid_argument("invalid size");
  // Safety net only; the element-sum argument already bounds the depth.
  depth_limit_ = std::max(10L * n * (static_cast<long>(s.size()) + 1), 16L);
  depth_ = 0;
  return eval(s, n);
}

BigInt CountEngine::eval(const PinSet& s, int n) {
  if (++depth_ > depth_limit_) {
    throw std::runtime_error("internal error: recursion depth guard exceeded");
  }
  struct DepthGuard {
    long& d;
    ~DepthGuard() { --d; }
  } guard{depth_};

  touched_.insert(s);
  if (!s.admissible()) return 0;
  if (!s.empty() && s.max() > n) return 0;
  if (s.empty()) return n >= 1 ? pow2(n - 1) : BigInt(0);
  if (n <= 2) return 0;
  if (n > s.max()) return pow2(n - s.max()) * eval(s, s.max());

  Key key{s.elements(), n};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const Decomposition d = decompose(s);
  const int t = d.t;
  const std::vector<int>& below = d.below.elements();

  // X = T ∪ {t, t+2, ..., n}; Y = T ∪ {t, ..., n-1}; Z = T ∪ {t, ..., n-2}
  std::vector<int> x(below), y(below), z(below);
  x.push_back(t);
  for (int v = t + 2; v <= n; ++v) x.push_back(v);
  for (int v = t; v <= n - 1; ++v) y.push_back(v);
  for (int v = t; v <= n - 2; ++v) z.push_back(v);

  BigInt res = eval(PinSet(std::move(x)), n);
  res += 2 * eval(PinSet(std::move(y)), n - 1);
  res += 2 * BigInt(n - t) * eval(PinSet(std::move(z)), n - 2);

  memo_.emplace(std::move(key), res);
  return res;
}

BigInt CountEngine::p_prime(const PinSet& s, int n) {
  if (s.empty() ? n < 1 : n < s.max()) {
    throw std::invalid_argument("p' requires n >= max(S) (n >= 1 for the empty set)");
  }
  const BigInt value = p(s, n);
  const long long exp = n - 1 - static_cast<long long>(s.size());
  const BigInt denom = pow2(exp);
  BigInt quot, rem;
  boost::multiprecision::divide_qr(value, denom, quot, rem);
  if (rem != 0) throw std::logic_error("divisibility violated");
  return quot;
}

RecursionStats recursion_stats(const PinSet& s, int n) {
  CountEngine engine;
  engine.p(s, n);
  return engine.stats();
}

BigInt closed_form_single(int n) {
  if (n < 3) throw std::invalid_argument("closed_form_single requires n >= 3");
  return pow2(n - 2) * (pow2(n - 2) - 1);
}

BigInt closed_form_pair(int l, int n) {
  if (l < 3 || l >= n) throw std::invalid_argument("closed_form_pair requires 3 <= l < n");
  return pow2(2 * n - l - 5) * (ipow(3, l - 1) - pow2(l) + 1) -
         pow2(n - 3) * (pow2(l - 2) - 1);
}

MonotonicityReport monotonicity_scan(int n, int set_size) {
  if (n < 0 || set_size < 0) throw std::invalid_argument("monotonicity_scan: bad arguments");
  MonotonicityReport report;
  report.n = n;
  report.set_size = set_size;

  std::vector<PinSet> sets;
  for (const PinSet& s : enumerate_pinsets(n)) {
    if (static_cast<int>(s.size()) == set_size) sets.push_back(s);
  }
  CountEngine engine;
  std::vector<BigInt> values;
  values.reserve(sets.size());
  for (const PinSet& s : sets) values.push_back(engine.p(s, n));

  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j || !componentwise_leq(sets[i], sets[j])) continue;
      ++report.pairs_checked;
      if (!(values[i] < values[j])) {
        report.violations.push_back(
            MonotonicityViolation{sets[i], sets[j], values[i], values[j]});
      }
    }
  }
  return report;
}

}  // namespace pinnacle
