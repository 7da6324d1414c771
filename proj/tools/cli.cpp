/*
  Command-line surface. Every subcommand speaks two dialects: a terse
  human one and, under --json, a single envelope object per invocation
  with command echo, inputs, results (big integers as decimal strings),
  timing, and version.
*/

#include "cli.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pinnacle/count.hpp"
#include "pinnacle/forest.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/perm.hpp"
#include "pinnacle/qn.hpp"
#include "pinnacle/reps.hpp"
#include "pinnacle/version.hpp"

namespace pinnacle::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Ctx {
  bool json_mode = false;
  bool quiet = false;
  int threads = 1;
  std::ostream* out = nullptr;
  json inputs;
  json results;
  Clock::time_point start = Clock::now();
  int exit_code = 0;

  void finish(const std::string& command) const {
    if (!json_mode) return;
    json envelope;
    envelope["command"] = command;
    envelope["inputs"] = inputs;
    envelope["results"] = results;
    envelope["timing_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    envelope["version"] = kVersion;
    *out << envelope.dump(2) << '\n';
  }
};

std::string big_str(const BigInt& v) { return v.str(); }

PinSet parse_set(const std::string& text) {
  if (text.empty()) return PinSet{};
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string piece = text.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      const int v = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument("");
      values.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--set", "'" + piece + "' is not an integer");
    }
    pos = next + 1;
  }
  try {
    return PinSet(values);  // enforces ascending, >= 2
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--set", e.what());
  }
}

Permutation parse_perm(const std::string& text) {
  try {
    return Permutation::parse(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("permutation", e.what());
  }
}

void cmd_pn(Ctx& ctx, const std::string& set_text, int n) {
  const PinSet s = parse_set(set_text);
  if (n < 0) throw CLI::ValidationError("--n", "must be nonnegative");
  CountEngine engine;
  const BigInt value = engine.p(s, n);
  const RecursionStats st = engine.stats();

  ctx.inputs = {{"set", s.to_string()}, {"n", n}};
  ctx.results = {{"value", big_str(value)},
                 {"admissible", s.admissible()},
                 {"memo_entries", st.memo_entries},
                 {"distinct_sets", st.distinct_sets}};
  if (!ctx.json_mode) {
    *ctx.out << value << '\n';
    if (!ctx.quiet && !s.admissible()) {
      *ctx.out << "note: " << s.to_string() << " is inadmissible; no permutation attains it\n";
    }
  }
}

void cmd_pprime(Ctx& ctx, const std::string& set_text, int n, bool n_given) {
  const PinSet s = parse_set(set_text);
  if (!n_given) n = s.empty() ? 1 : s.max();
  if (n < (s.empty() ? 1 : s.max())) {
    throw CLI::ValidationError("--n", "p' requires n >= max(S)");
  }
  CountEngine engine;
  const BigInt value = engine.p_prime(s, n);
  ctx.inputs = {{"set", s.to_string()}, {"n", n}};
  ctx.results = {{"value", big_str(value)}, {"admissible", s.admissible()}};
  if (!ctx.json_mode) *ctx.out << value << '\n';
}

void cmd_reps(Ctx& ctx, const std::string& set_text, int n, bool list) {
  const PinSet s = parse_set(set_text);
  RepSetBuilder builder;
  RepSet rs;
  try {
    rs = builder.build(s, n);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("reps", e.what());
  }
  ctx.inputs = {{"set", s.to_string()}, {"n", n}};
  ctx.results = {{"count", rs.members.size()}};
  if (list) {
    json members = json::array();
    for (const Permutation& p : rs.members) members.push_back(p.to_string());
    ctx.results["members"] = members;
  }
  if (!ctx.json_mode) {
    if (!ctx.quiet) {
      *ctx.out << rs.members.size() << " representatives of " << s.to_string() << " at n=" << n
               << '\n';
    } else {
      *ctx.out << rs.members.size() << '\n';
    }
    if (list) {
      for (const Permutation& p : rs.members) *ctx.out << p.to_string() << '\n';
    }
  }
}

void cmd_orbits(Ctx& ctx, int n, const std::string& of_text) {
  if (!of_text.empty()) {
    const Permutation sigma = parse_perm(of_text);
    if (sigma.size() > 16) {
      throw CLI::ValidationError("--of", "orbit closure is capped at n <= 16");
    }
    const auto orbit = sigma.orbit();
    ctx.inputs = {{"of", sigma.to_string()}};
    json members = json::array();
    for (const Permutation& p : orbit) members.push_back(p.to_string());
    ctx.results = {{"pinnacles", sigma.pinnacle_set().to_string()},
                   {"size", orbit.size()},
                   {"lex_min", orbit.front().to_string()},
                   {"members", members}};
    if (!ctx.json_mode) {
      if (!ctx.quiet) {
        *ctx.out << "orbit of " << sigma.to_string() << ": size " << orbit.size()
                 << ", pinnacles " << sigma.pinnacle_set().to_string() << '\n';
      }
      for (const Permutation& p : orbit) *ctx.out << p.to_string() << '\n';
    }
    return;
  }

  if (n < 1 || n > kOracleMaxN) {
    throw CLI::ValidationError("--n", "orbit listing is capped at 1 <= n <= 9");
  }
  const ClassifiedTable table = classify(n, true, ctx.threads);
  ctx.inputs = {{"n", n}};
  json orbits = json::array();
  long count = 0;
  std::ostringstream human;
  for (const auto& [set, list] : table.members) {
    std::set<Permutation> pending(list.begin(), list.end());
    while (!pending.empty()) {
      const auto orbit = pending.begin()->orbit();
      for (const Permutation& q : orbit) pending.erase(q);
      ++count;
      orbits.push_back({{"pinnacles", set.to_string()},
                        {"size", orbit.size()},
                        {"lex_min", orbit.front().to_string()}});
      human << orbit.front().to_string() << "  size=" << orbit.size() << "  pinnacles="
            << set.to_string() << '\n';
    }
  }
  ctx.results = {{"orbit_count", count}, {"orbits", orbits}};
  if (!ctx.json_mode) {
    if (!ctx.quiet) *ctx.out << count << " orbits of S_" << n << " (lex-min representatives)\n";
    *ctx.out << human.str();
  }
}

void cmd_maximal(Ctx& ctx, int n, bool count_only) {
  if (n < 1) throw CLI::ValidationError("--n", "must be >= 1");
  if (n > 14) throw CLI::ValidationError("--n", "maximal-element listing is capped at n <= 14");
  const std::vector<Permutation> maxima = build_max_set(n);
  ctx.inputs = {{"n", n}};
  ctx.results = {{"count", maxima.size()}};
  if (!count_only) {
    json members = json::array();
    for (const Permutation& p : maxima) members.push_back(p.to_string());
    ctx.results["members"] = members;
  }
  if (!ctx.json_mode) {
    *ctx.out << maxima.size() << '\n';
    if (!count_only) {
      for (const Permutation& p : maxima) *ctx.out << p.to_string() << '\n';
    }
  }
}

void cmd_qn(Ctx& ctx, const std::string& set_text, int n, const std::string& method) {
  const PinSet s = parse_set(set_text);
  if (n < 1) throw CLI::ValidationError("--n", "must be >= 1");
  CountEngine engine;
  ctx.inputs = {{"set", s.to_string()}, {"n", n}, {"method", method}};

  const bool want_def = method == "def" || method == "both";
  const bool want_conj = method == "conjecture" || method == "both";
  if (!want_def && !want_conj) {
    throw CLI::ValidationError("--method", "choose def, conjecture, or both");
  }
  if (want_conj && !s.empty() && n < s.max()) {
    throw CLI::ValidationError("--n", "the product form requires n >= max(S)");
  }

  BigInt def_value, conj_value;
  bool have_conj = false;
  if (want_def) {
    def_value = q_def(s, n, engine);
    ctx.results["definition"] = big_str(def_value);
  }
  if (want_conj) {
    try {
      conj_value = q_prime(s, n) * r_factor(s);
      have_conj = true;
      ctx.results["product"] = big_str(conj_value);
    } catch (const std::domain_error& e) {
      // only reachable off the admissible domain; informational
      ctx.results["product_error"] = e.what();
    }
    if (!s.admissible()) ctx.results["note"] = "inadmissible set: product form is informational";
  }
  if (want_def && have_conj) ctx.results["equal"] = def_value == conj_value;

  if (!ctx.json_mode) {
    if (want_def) *ctx.out << (ctx.quiet ? "" : "definition: ") << def_value << '\n';
    if (have_conj) *ctx.out << (ctx.quiet ? "" : "product:    ") << conj_value << '\n';
    if (want_conj && !have_conj) *ctx.out << "product:    undefined on this set\n";
    if (want_def && have_conj && !ctx.quiet) {
      *ctx.out << "equal:      " << (def_value == conj_value ? "yes" : "NO") << '\n';
    }
  }
  if (want_def && have_conj && def_value != conj_value && s.admissible()) {
    ctx.exit_code = 1;  // an admissible mismatch would refute the conjecture
  }
}

void cmd_scan_qn(Ctx& ctx, int max_value) {
  if (max_value < 0 || max_value > 24) {
    throw CLI::ValidationError("--max", "scan range must lie in 0..24");
  }
  CountEngine engine;
  const QScanReport report = conjecture_scan(max_value, engine);
  ctx.inputs = {{"max", max_value}};
  json mismatches = json::array();
  for (const QScanMismatch& m : report.mismatches) {
    mismatches.push_back({{"set", m.set.to_string()},
                          {"n", m.n},
                          {"definition", big_str(m.lhs)},
                          {"product", big_str(m.rhs)}});
  }
  ctx.results = {{"sets_checked", report.sets_checked}, {"mismatches", mismatches}};
  if (!ctx.json_mode) {
    *ctx.out << "checked " << report.sets_checked << " admissible sets (max <= " << max_value
             << "): " << report.mismatches.size() << " mismatches\n";
    for (const QScanMismatch& m : report.mismatches) {
      *ctx.out << "MISMATCH " << m.set.to_string() << " n=" << m.n << " definition=" << m.lhs
               << " product=" << m.rhs << '\n';
    }
  }
  if (!report.mismatches.empty()) ctx.exit_code = 1;
}

void cmd_forest(Ctx& ctx, const std::string& set_text, int n, bool ascii, bool paren) {
  const PinSet s = parse_set(set_text);
  Forest f;
  try {
    f = pinset_to_forest(s, n);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("forest", e.what());
  }
  ctx.inputs = {{"set", s.to_string()}, {"n", n}};
  json sizes = json::array();
  for (const Tree& t : f.trees) sizes.push_back(t.node_count());
  ctx.results = {{"paren", to_paren(f)}, {"tree_sizes", sizes}, {"trees", f.trees.size()}};
  if (!ctx.json_mode) {
    if (paren || !ascii) *ctx.out << to_paren(f) << '\n';
    if (ascii) *ctx.out << ascii_render(f);
    if (!ctx.quiet && !paren && !ascii) {
      *ctx.out << f.trees.size() << " trees, " << f.node_count() << " nodes, internal labels "
               << s.to_string() << '\n';
    }
  }
}

void cmd_scan_forest(Ctx& ctx, int max_nodes) {
  if (max_nodes < 1 || max_nodes > 16) {
    throw CLI::ValidationError("--max-nodes", "scan range must lie in 1..16");
  }
  CountEngine engine;
  const ForestScanReport report = scan_forests(max_nodes, engine);
  ctx.inputs = {{"max_nodes", max_nodes}};
  ctx.results = {{"forests_checked", report.forests_checked},
                 {"roundtrip_failures", report.roundtrip_failures},
                 {"count_mismatches", report.count_mismatches},
                 {"proposition_failures", report.proposition_failures},
                 {"conjecture_checked", report.conjecture_checked},
                 {"conjecture_mismatches", report.conjecture_mismatches}};
  if (!ctx.json_mode) {
    *ctx.out << "checked " << report.forests_checked << " forests (<= " << max_nodes
             << " nodes)\n"
             << "roundtrip failures:    " << report.roundtrip_failures << '\n'
             << "proposition failures:  " << report.proposition_failures << '\n'
             << "conjecture mismatches: " << report.conjecture_mismatches.size() << " of "
             << report.conjecture_checked << '\n';
    for (const std::string& m : report.conjecture_mismatches) {
      *ctx.out << "CONJECTURE MISMATCH " << m << '\n';
    }
  }
  if (report.roundtrip_failures || report.count_mismatches || report.proposition_failures ||
      !report.conjecture_mismatches.empty()) {
    ctx.exit_code = 1;
  }
}

void cmd_verify(Ctx& ctx, int n, const std::string& suite) {
  VerifyReport report;
  try {
    report = verify_all(n, suite, ctx.threads);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("verify", e.what());
  }
  ctx.inputs = {{"n", n}, {"suite", suite}};
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  ctx.results = {{"checks", checks}, {"all_passed", report.all_passed()}};
  if (!ctx.json_mode) {
    for (const CheckResult& c : report.checks) {
      if (ctx.quiet && c.passed) continue;
      *ctx.out << (c.passed ? "[ok]   " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) *ctx.out << "  (" << c.detail << ')';
      *ctx.out << '\n';
    }
    *ctx.out << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << " at n=" << n
             << '\n';
  }
  if (!report.all_passed()) ctx.exit_code = 1;
}

void cmd_bench(Ctx& ctx, const std::string& set_text, int n, int repeat) {
  const PinSet s = parse_set(set_text);
  if (n < 0) throw CLI::ValidationError("--n", "must be nonnegative");
  if (repeat < 1) throw CLI::ValidationError("--repeat", "must be >= 1");

  double best_ms = 0;
  BigInt value;
  RecursionStats st;
  for (int i = 0; i < repeat; ++i) {
    CountEngine engine;  // cold memo each round
    const auto t0 = Clock::now();
    value = engine.p(s, n);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (i == 0 || ms < best_ms) best_ms = ms;
    st = engine.stats();
  }
  ctx.inputs = {{"set", s.to_string()}, {"n", n}, {"repeat", repeat}};
  ctx.results = {{"best_ms", best_ms},
                 {"digits", big_str(value).size()},
                 {"memo_entries", st.memo_entries},
                 {"distinct_sets", st.distinct_sets}};
  if (!ctx.json_mode) {
    *ctx.out << "p(" << s.to_string() << ", " << n << "): " << big_str(value).size()
             << " digits, best of " << repeat << ": " << best_ms << " ms, memo "
             << st.memo_entries << " entries, " << st.distinct_sets << " distinct sets\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic for pinnacle sets of permutations"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Ctx ctx;
  ctx.out = &out;
  app.add_flag("--json", ctx.json_mode, "emit one JSON envelope on stdout");
  app.add_flag("--quiet", ctx.quiet, "suppress notes and summaries");
  app.add_option("--threads", ctx.threads, "worker threads for enumeration scans")
      ->check(CLI::Range(1, 64));

  struct {
    std::string set;
    int n = 0;
  } pn_args, pprime_args;
  struct {
    std::string set;
    int n = 0;
    bool list = false;
  } reps_args;
  struct {
    int n = 0;
    std::string of;
  } orbits_args;
  struct {
    int n = 0;
    bool count_only = false;
  } maximal_args;
  struct {
    std::string set;
    int n = 0;
    std::string method = "both";
  } qn_args;
  struct {
    std::string set;
    int n = 0;
    bool ascii = false;
    bool paren = false;
  } forest_args;
  struct {
    int n = 0;
    std::string suite = "all";
  } verify_args;
  struct {
    std::string set;
    int n = 0;
    int repeat = 5;
  } bench_args;
  int scan_qn_max = 0, scan_forest_max = 0;

  auto* pn = app.add_subcommand("pn", "p_n(S): permutations of 1..n with pinnacle set S");
  pn->add_option("--set", pn_args.set,
                 "comma-separated ascending values (omit for the empty set)");
  pn->add_option("--n", pn_args.n, "permutation size")->required();

  auto* pprime = app.add_subcommand("pprime", "p'_n(S) = p_n(S) / 2^(n-1-|S|)");
  pprime->add_option("--set", pprime_args.set, "pinnacle set");
  auto* pprime_n = pprime->add_option("--n", pprime_args.n, "size (defaults to max(S))");

  auto* reps = app.add_subcommand("reps", "representative permutations (lex-min orbit elements)");
  reps->add_option("--set", reps_args.set, "pinnacle set");
  reps->add_option("--n", reps_args.n, "permutation size")->required();
  reps->add_flag("--list", reps_args.list, "print the members");

  auto* orbits = app.add_subcommand("orbits", "orbit structure of the value-swap action");
  orbits->add_option("--n", orbits_args.n, "list all orbits of S_n (n <= 9)");
  orbits->add_option("--of", orbits_args.of,
                     "orbit of one permutation (e.g. 14253 or 1,4,2,5,3)");

  auto* maximal = app.add_subcommand("maximal", "maximal representatives M_n");
  maximal->add_option("--n", maximal_args.n, "size")->required();
  maximal->add_flag("--count-only", maximal_args.count_only, "print the count only");

  auto* qn = app.add_subcommand("qn", "weighted sum q_n(S) and its conjectured product form");
  qn->add_option("--set", qn_args.set, "pinnacle set");
  qn->add_option("--n", qn_args.n, "size")->required();
  qn->add_option("--method", qn_args.method, "def | conjecture | both");

  auto* scan_qn = app.add_subcommand("scan-qn", "compare definition and product over all sets");
  scan_qn->add_option("--max", scan_qn_max, "largest admitted max(S)")->required();

  auto* forest = app.add_subcommand("forest", "the complete-binary-tree forest for (S, n)");
  forest->add_option("--set", forest_args.set, "pinnacle set");
  forest->add_option("--n", forest_args.n, "total node count")->required();
  forest->add_flag("--ascii", forest_args.ascii, "labeled tree rendering");
  forest->add_flag("--paren", forest_args.paren, "shape-only parenthesis form");

  auto* scan_forest = app.add_subcommand("scan-forest", "bijection and factorization checks");
  scan_forest->add_option("--max-nodes", scan_forest_max, "largest forest size")->required();

  auto* verify = app.add_subcommand("verify", "brute-force cross-checks (n <= 9)");
  verify->add_option("--n", verify_args.n, "symmetric group size")->required();
  verify->add_option("--suite", verify_args.suite, "all | p | orbits | reps | ideal | maximal");

  auto* bench = app.add_subcommand("bench", "time the p recursion from a cold memo");
  bench->add_option("--set", bench_args.set, "pinnacle set");
  bench->add_option("--n", bench_args.n, "size")->required();
  bench->add_option("--repeat", bench_args.repeat, "rounds");

  // allow the global flags to appear after the subcommand as well
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("pinnacle");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    std::string command;
    if (pn->parsed()) {
      command = "pn";
      cmd_pn(ctx, pn_args.set, pn_args.n);
    } else if (pprime->parsed()) {
      command = "pprime";
      cmd_pprime(ctx, pprime_args.set, pprime_args.n, pprime_n->count() > 0);
    } else if (reps->parsed()) {
      command = "reps";
      cmd_reps(ctx, reps_args.set, reps_args.n, reps_args.list);
    } else if (orbits->parsed()) {
      command = "orbits";
      cmd_orbits(ctx, orbits_args.n, orbits_args.of);
    } else if (maximal->parsed()) {
      command = "maximal";
      cmd_maximal(ctx, maximal_args.n, maximal_args.count_only);
    } else if (qn->parsed()) {
      command = "qn";
      cmd_qn(ctx, qn_args.set, qn_args.n, qn_args.method);
    } else if (scan_qn->parsed()) {
      command = "scan-qn";
      cmd_scan_qn(ctx, scan_qn_max);
    } else if (forest->parsed()) {
      command = "forest";
      cmd_forest(ctx, forest_args.set, forest_args.n, forest_args.ascii, forest_args.paren);
    } else if (scan_forest->parsed()) {
      command = "scan-forest";
      cmd_scan_forest(ctx, scan_forest_max);
    } else if (verify->parsed()) {
      command = "verify";
      cmd_verify(ctx, verify_args.n, verify_args.suite);
    } else if (bench->parsed()) {
      command = "bench";
      cmd_bench(ctx, bench_args.set, bench_args.n, bench_args.repeat);
    }
    ctx.finish(command);
    return ctx.exit_code;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pinnacle::cli
