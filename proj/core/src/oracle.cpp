#include "pinnacle/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "pinnacle/count.hpp"
#include "pinnacle/reps.hpp"

namespace pinnacle {

std::uint64_t ClassifiedTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [set, count] : counts) sum += count;
  return sum;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

PinSet pinnacles_of_word(const std::vector<int>& w) {
  std::vector<int> pins;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (w[i - 1] < w[i] && w[i] > w[i + 1]) pins.push_back(w[i]);
  }
  std::sort(pins.begin(), pins.end());
  return PinSet(std::move(pins));
}

struct Shard {
  std::map<PinSet, std::uint64_t> counts;
  std::map<PinSet, std::vector<Permutation>> members;
};

// every permutation of 1..n whose first letter lies in [first_lo, first_hi]
void enumerate_shard(int n, int first_lo, int first_hi, bool keep_members, Shard& shard) {
  for (int first = first_lo; first <= first_hi; ++first) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v) {
      if (v != first) rest.push_back(v);
    }
    std::vector<int> word(static_cast<std::size_t>(n));
    word[0] = first;
    do {
      std::copy(rest.begin(), rest.end(), word.begin() + 1);
      PinSet s = pinnacles_of_word(word);
      ++shard.counts[s];
      if (keep_members) shard.members[s].push_back(Permutation(word));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
}

}  // namespace

ClassifiedTable classify(int n, bool keep_members, int threads) {
  if (n < 1 || n > kOracleMaxN) throw std::out_of_range("oracle cap exceeded");
  threads = std::clamp(threads, 1, n);

  std::vector<Shard> shards(static_cast<std::size_t>(threads));
  if (threads == 1) {
    enumerate_shard(n, 1, n, keep_members, shards[0]);
  } else {
    std::vector<std::thread> workers;
    const int per = n / threads, extra = n % threads;
    int lo = 1;
    for (int i = 0; i < threads; ++i) {
      const int hi = lo + per - 1 + (i < extra ? 1 : 0);
      workers.emplace_back(enumerate_shard, n, lo, hi, keep_members, std::ref(shards[i]));
      lo = hi + 1;
    }
    for (std::thread& w : workers) w.join();
  }

  ClassifiedTable table;
  table.n = n;
  for (Shard& shard : shards) {
    for (auto& [set, count] : shard.counts) table.counts[set] += count;
    for (auto& [set, list] : shard.members) {
      auto& dst = table.members[set];
      dst.insert(dst.end(), std::make_move_iterator(list.begin()),
                 std::make_move_iterator(list.end()));
    }
  }
  for (auto& [set, list] : table.members) std::sort(list.begin(), list.end());
  return table;
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void check_p_agreement(int n, const ClassifiedTable& table, VerifyReport& report) {
  CountEngine engine;
  bool ok = true;
  std::string detail;
  const std::vector<PinSet> admissible = enumerate_pinsets(n);
  for (const PinSet& s : admissible) {
    const auto it = table.counts.find(s);
    const std::uint64_t observed = it == table.counts.end() ? 0 : it->second;
    if (engine.p(s, n) != BigInt(observed)) {
      ok = false;
      detail = "p mismatch at " + s.to_string();
      break;
    }
  }
  report.checks.push_back({"p-agreement", ok, detail});

  const bool complete = table.total() == factorial(n);
  report.checks.push_back(
      {"completeness", complete, complete ? "" : "counts do not total n!"});

  bool keys_ok = true;
  for (const auto& [set, count] : table.counts) {
    if (count > 0 && !std::binary_search(admissible.begin(), admissible.end(), set)) {
      keys_ok = false;
      break;
    }
  }
  report.checks.push_back(
      {"keys-admissible", keys_ok, keys_ok ? "" : "observed a non-admissible pinnacle set"});
}

void check_orbits(const ClassifiedTable& table, int n, VerifyReport& report) {
  bool size_ok = true, partition_ok = true, invariants_ok = true;
  std::string detail;
  std::uint64_t covered = 0;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& [set, list] : table.members) {
    for (const Permutation& p : list) {
      if (seen.contains(p)) continue;
      const std::vector<Permutation> orbit = p.orbit();
      const BigInt expected = pow2(n - 1 - static_cast<int>(set.size()));
      if (BigInt(orbit.size()) != expected) {
        size_ok = false;
        detail = "orbit size off at " + p.to_string();
      }
      for (const Permutation& q : orbit) {
        if (!seen.insert(q).second) partition_ok = false;
        if (q.pinnacle_set() != set || q.vale_values() != p.vale_values()) {
          invariants_ok = false;
        }
        ++covered;
      }
    }
  }
  if (covered != factorial(n)) partition_ok = false;
  report.checks.push_back({"orbit-cardinality", size_ok, detail});
  report.checks.push_back(
      {"orbit-partition", partition_ok, partition_ok ? "" : "orbits do not partition S_n"});
  report.checks.push_back(
      {"orbit-invariants", invariants_ok,
       invariants_ok ? "" : "pinnacle or vale set changed inside an orbit"});
}

void check_reps(const ClassifiedTable& table, int n, VerifyReport& report) {
  RepSetBuilder builder;
  bool equal_ok = true, unique_ok = true;
  std::string detail;
  for (const auto& [set, list] : table.members) {
    std::unordered_set<Permutation, PermutationHash> pending(list.begin(), list.end());
    std::vector<Permutation> minima;
    while (!pending.empty()) {
      const Permutation start = *pending.begin();
      const std::vector<Permutation> orbit = start.orbit();
      int conditioned = 0;
      for (const Permutation& q : orbit) {
        pending.erase(q);
        if (q.satisfies_rep_conditions()) ++conditioned;
      }
      if (conditioned != 1) {
        unique_ok = false;
        detail = "rep-condition count " + std::to_string(conditioned) + " in an orbit of " +
                 set.to_string();
      }
      minima.push_back(orbit.front());  // orbits are sorted
    }
    std::sort(minima.begin(), minima.end());
    if (builder.build(set, n).members != minima) {
      equal_ok = false;
      detail = "representative set differs from orbit minima at " + set.to_string();
    }
  }
  report.checks.push_back({"repset-equals-minima", equal_ok, equal_ok ? "" : detail});
  report.checks.push_back({"lexmin-uniqueness", unique_ok, unique_ok ? "" : detail});
}

void check_ideal(int n, VerifyReport& report) {
  const IdealCheckReport ideal = check_lower_ideal(n);
  report.checks.push_back({"ideal-closure", ideal.violations.empty(),
                           ideal.violations.empty()
                               ? ""
                               : std::to_string(ideal.violations.size()) + " open covers"});
}

void check_maximal(int n, VerifyReport& report) {
  bool ok = true;
  std::string detail;
  try {
    RepSetBuilder builder;
    std::vector<Permutation> maximal;
    for (const PinSet& s : enumerate_pinsets(n)) {
      for (const Permutation& p : builder.build(s, n).members) {
        if (is_maximal(p)) maximal.push_back(p);  // throws if definitions disagree
      }
    }
    std::sort(maximal.begin(), maximal.end());
    if (maximal != build_max_set(n)) {
      ok = false;
      detail = "filtered maxima differ from the recursive construction";
    }
  } catch (const std::logic_error& e) {
    ok = false;
    detail = e.what();
  }
  report.checks.push_back({"maximal-agreement", ok, detail});
}

}  // namespace

VerifyReport verify_all(int n, std::string_view suite, int threads) {
  if (n < 1 || n > kOracleMaxN) throw std::out_of_range("oracle cap exceeded");
  const bool all = suite == "all";
  if (!all && suite != "p" && suite != "orbits" && suite != "reps" && suite != "ideal" &&
      suite != "maximal") {
    throw std::invalid_argument("unknown suite: " + std::string(suite));
  }

  VerifyReport report;
  report.n = n;
  const bool need_members = all || suite == "orbits" || suite == "reps";
  ClassifiedTable table;
  if (all || suite == "p" || need_members) {
    table = classify(n, need_members, threads);
  }

  if (all || suite == "p") check_p_agreement(n, table, report);
  if (all || suite == "orbits") check_orbits(table, n, report);
  if (all || suite == "reps") check_reps(table, n, report);
  if (all || suite == "ideal") check_ideal(n, report);
  if (all || suite == "maximal") check_maximal(n, report);
  return report;
}

}  // namespace pinnacle
