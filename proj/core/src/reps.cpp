/*
  Representative sets and the weak-order structure on them.

  The three images A1/A2/A3 mirror the three terms of the p_n recursion;
  their sizes add up to p'_n(S), which the builder checks after every
  construction step along with pairwise disjointness.
*/

#include "pinnacle/reps.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace pinnacle {

namespace {

bool valid_rep_args(const PinSet& s, int n) {
  if (n < 1) return false;
  if (!s.admissible()) return false;
  return s.empty() || s.max() <= n;
}

std::vector<int> a1_swap(const std::vector<int>& w, int t) {
  std::vector<int> out(w);
  for (int& x : out) {
    if (x == t) x = t + 1;
    else if (x == t + 1) x = t;
  }
  return out;
}

std::vector<int> a2_expand(const std::vector<int>& w, int t) {
  std::vector<int> out;
  out.reserve(w.size() + 1);
  for (int x : w) {
    if (x < t) out.push_back(x);
    else if (x == t) { out.push_back(t); out.push_back(t + 1); }
    else out.push_back(x + 1);
  }
  return out;
}

std::vector<int> a3_insert(const std::vector<int>& w, int t, int q) {
  std::vector<int> out;
  out.reserve(w.size() + 2);
  for (int x : w) {
    if (x < t) out.push_back(x);
    else if (x == q) { out.push_back(t + 1); out.push_back(t); out.push_back(q + 2); }
    else out.push_back(x + 2);
  }
  return out;
}

std::vector<int> a3_glue(const std::vector<int>& w, int t) {
  std::vector<int> out;
  out.reserve(w.size() + 2);
  for (int x : w) out.push_back(x < t ? x : x + 2);
  out.push_back(t + 1);
  out.push_back(t);
  return out;
}

struct SubSets {
  int t;
  PinSet x, y, z;
};

SubSets recursion_sets(const PinSet& s) {
  const Decomposition d = decompose(s);
  const int t = d.t;
  const int n = d.run_end;
  std::vector<int> x(d.below.elements()), y(d.below.elements()), z(d.below.elements());
  x.push_back(t);
  for (int v = t + 2; v <= n; ++v) x.push_back(v);
  for (int v = t; v <= n - 1; ++v) y.push_back(v);
  for (int v = t; v <= n - 2; ++v) z.push_back(v);
  return SubSets{t, PinSet(std::move(x)), PinSet(std::move(y)), PinSet(std::move(z))};
}

}  // namespace

RepSetBuilder::MemberList RepSetBuilder::members(const PinSet& s, int n) {
  static const MemberList kEmpty = std::make_shared<const std::vector<Permutation>>();
  if (!valid_rep_args(s, n)) return kEmpty;

  Key key{s.elements(), n};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  std::vector<Permutation> result;
  if (s.empty()) {
    result.push_back(Permutation::identity(n));
  } else if (n > s.max()) {
    const MemberList below = members(s, n - 1);  // keep the list alive while iterating
    for (const Permutation& p : *below) {
      std::vector<int> w(p.word());
      w.push_back(n);
      result.emplace_back(std::move(w));
    }
  } else {
    const SubSets sub = recursion_sets(s);
    const int t = sub.t;
    std::unordered_set<Permutation, PermutationHash> dedupe;
    auto add = [&](std::vector<int> w) {
      Permutation p(std::move(w));
      if (!dedupe.insert(p).second) {
        throw std::logic_error("representative construction produced a duplicate");
      }
      result.push_back(std::move(p));
    };
    const MemberList a1 = members(sub.x, n);
    for (const Permutation& p : *a1) add(a1_swap(p.word(), t));
    const MemberList a2 = members(sub.y, n - 1);
    for (const Permutation& p : *a2) add(a2_expand(p.word(), t));
    {
      const MemberList a3 = members(sub.z, n - 2);
      for (int q = t; q <= n - 2; ++q) {
        for (const Permutation& p : *a3) add(a3_insert(p.word(), t, q));
      }
      for (const Permutation& p : *a3) add(a3_glue(p.word(), t));
    }
  }
  std::sort(result.begin(), result.end());

  auto shared = std::make_shared<const std::vector<Permutation>>(std::move(result));
  if (shared->size() <= memo_member_cap_) memo_.emplace(std::move(key), shared);
  return shared;
}

RepSet RepSetBuilder::build(const PinSet& s, int n) {
  if (!valid_rep_args(s, n)) throw std::invalid_argument("no representatives");
  RepSet out;
  out.set = s;
  out.n = n;
  out.members = *members(s, n);
  const BigInt expected = sizes_.p_prime(s, n);
  if (BigInt(out.members.size()) != expected) {
    throw std::logic_error("representative count does not match p'");
  }
  return out;
}

void RepSetBuilder::stream(const PinSet& s, int n,
                           const std::function<void(const Permutation&)>& emit) {
  if (!valid_rep_args(s, n)) return;

  if (auto it = memo_.find(Key{s.elements(), n}); it != memo_.end()) {
    for (const Permutation& p : *it->second) emit(p);
    return;
  }
  // small sets go through the memoized path; only oversized ones stream
  if (sizes_.p_prime(s, n) <= BigInt(memo_member_cap_)) {
    const MemberList list = members(s, n);
    for (const Permutation& p : *list) emit(p);
    return;
  }

  if (s.empty()) {
    emit(Permutation::identity(n));
    return;
  }
  if (n > s.max()) {
    stream(s, n - 1, [&](const Permutation& p) {
      std::vector<int> w(p.word());
      w.push_back(n);
      emit(Permutation(std::move(w)));
    });
    return;
  }
  const SubSets sub = recursion_sets(s);
  const int t = sub.t;
  stream(sub.x, n, [&](const Permutation& p) { emit(Permutation(a1_swap(p.word(), t))); });
  stream(sub.y, n - 1, [&](const Permutation& p) { emit(Permutation(a2_expand(p.word(), t))); });
  stream(sub.z, n - 2, [&](const Permutation& p) {
    for (int q = t; q <= n - 2; ++q) emit(Permutation(a3_insert(p.word(), t, q)));
    emit(Permutation(a3_glue(p.word(), t)));
  });
}

void RepSetBuilder::for_each(const PinSet& s, int n,
                             const std::function<void(const Permutation&)>& emit) {
  if (!valid_rep_args(s, n)) throw std::invalid_argument("no representatives");
  stream(s, n, emit);
}

IdealCheckReport check_lower_ideal(int n) {
  if (n < 1) throw std::invalid_argument("check_lower_ideal requires n >= 1");
  IdealCheckReport report;
  report.n = n;

  RepSetBuilder builder;
  std::unordered_set<Permutation, PermutationHash> all;
  for (const PinSet& s : enumerate_pinsets(n)) {
    for (const Permutation& p : builder.build(s, n).members) all.insert(p);
  }
  report.members = all.size();
  for (const Permutation& p : all) {
    for (const Permutation& down : p.covers_down()) {
      ++report.covers_checked;
      if (!all.contains(down)) report.violations.push_back(IdealViolation{p, down});
    }
  }
  return report;
}

namespace {

// M_n membership via the recursive cut at the largest letter.
bool maximal_by_structure(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  if (n <= 2) {
    for (int i = 0; i < n; ++i) {
      if (w[i] != i + 1) return false;
    }
    return true;
  }
  const auto top = std::find(w.begin(), w.end(), n);
  const std::vector<int> u(w.begin(), top);
  const std::vector<int> v(top + 1, w.end());
  if (u.empty() || v.empty()) return false;
  // v must carry exactly the values 2..|v|+1
  const int l = static_cast<int>(v.size()) + 1;
  std::vector<int> sorted_v(v);
  std::sort(sorted_v.begin(), sorted_v.end());
  for (int i = 0; i < l - 1; ++i) {
    if (sorted_v[i] != i + 2) return false;
  }
  return maximal_by_structure(standardize(u).word()) &&
         maximal_by_structure(standardize(v).word());
}

}  // namespace

bool is_maximal(const Permutation& sigma) {
  if (!sigma.satisfies_rep_conditions()) {
    throw std::invalid_argument("not a representative (fails the membership conditions)");
  }
  bool by_covers = true;
  for (const Permutation& up : sigma.covers_up()) {
    if (up.satisfies_rep_conditions()) {
      by_covers = false;
      break;
    }
  }
  const bool by_structure = maximal_by_structure(sigma.word());
  if (by_covers != by_structure) {
    throw std::logic_error("maximality definitions disagree on " + sigma.to_string());
  }
  return by_covers;
}

std::vector<Permutation> build_max_set(int n) {
  if (n < 1) throw std::invalid_argument("build_max_set requires n >= 1");
  std::vector<std::vector<std::vector<int>>> m(static_cast<std::size_t>(n) + 1);
  m[1] = {{1}};
  if (n >= 2) m[2] = {{1, 2}};
  for (int size = 3; size <= n; ++size) {
    for (int k = 1; k <= size - 2; ++k) {
      for (const std::vector<int>& a : m[size - 1 - k]) {
        std::vector<int> head;
        head.reserve(a.size());
        for (int x : a) head.push_back(x >= 2 ? x + k : x);
        for (const std::vector<int>& b : m[k]) {
          std::vector<int> w(head);
          w.push_back(size);
          for (int x : b) w.push_back(x + 1);
          m[size].push_back(std::move(w));
        }
      }
    }
  }
  std::vector<Permutation> out;
  out.reserve(m[n].size());
  for (std::vector<int>& w : m[n]) out.emplace_back(std::move(w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pinnacle
