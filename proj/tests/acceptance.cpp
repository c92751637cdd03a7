// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-red 2,3,12]
//
// Without --expect-red the exit status is 1 when any criterion fails. With it,
// the status is 0 exactly when the failing set equals the listed set, so a
// known-red criterion turning green is reported as well.

#include "fcone/harness.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

using namespace fcone;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::filesystem::path scratch_cache() {
  auto dir = std::filesystem::temp_directory_path() / "fcone_acceptance_cache";
  std::filesystem::create_directories(dir);
  return dir;
}

RunOptions options() {
  RunOptions o;
  o.cache_dir = scratch_cache();
  return o;
}

std::string first_failure(const VerificationReport& r) {
  for (const auto& it : r.items)
    if (it.status == ItemStatus::Fail)
      return "(" + std::to_string(it.g) + "," + std::to_string(it.n) + ") " + it.curve + " expected " + it.expected +
             ", got " + it.got;
  return "";
}

// Runs the named suites (optionally only rows whose verdict starts with
// `verdict_prefix`) and requires every row to pass with nothing refused.
Outcome suites(const std::vector<std::string>& names, const std::string& verdict_prefix = "",
               double limit_s = 0) {
  auto t0 = Clock::now();
  Outcome o{true, ""};
  std::string fail;
  std::size_t pass = 0, failed = 0;
  for (const auto& name : names) {
    auto spec = load_suite(default_suite_dir() / (name + ".tsv"));
    if (!verdict_prefix.empty())
      std::erase_if(spec.rows, [&](const SuiteRow& r) { return r.verdict.rfind(verdict_prefix, 0) != 0; });
    auto r = run_suite(spec, options());
    pass += r.count(ItemStatus::Pass);
    failed += r.count(ItemStatus::Fail);
    if (!r.complete) o.pass = false;
    if (r.count(ItemStatus::Pass) == 0) o.pass = false;
    if (fail.empty()) fail = first_failure(r);
  }
  double dt = seconds_since(t0);
  if (failed > 0) o.pass = false;
  if (limit_s > 0 && dt > limit_s) o.pass = false;
  std::ostringstream s;
  s << pass << " rows passed, " << failed << " failed";
  if (!fail.empty()) s << "; first: " << fail;
  s << " [" << dt << " s";
  if (limit_s > 0) s << ", limit " << limit_s << " s";
  s << "]";
  o.detail = s.str();
  return o;
}

// Contexts with 3g-3+n <= 9 and g <= 5.
std::vector<Context> pairing_grid() {
  std::vector<Context> out;
  for (int g = 0; g <= 5; ++g)
    for (int n = 0; 3 * g - 3 + n <= 9; ++n) {
      Context ctx{g, n};
      if (ctx.valid()) out.push_back(ctx);
    }
  return out;
}

Outcome kappa_oracle() {
  auto t0 = Clock::now();
  std::size_t curves = 0;
  for (const auto& ctx : pairing_grid()) {
    DivisorClass k = kappa(ctx);
    for (const auto& f : enumerate_fcurves(ctx)) {
      ++curves;
      Rational v = intersect(k, f);
      if (v != 1) return {false, to_string(ctx) + " " + render(f) + " pairs to " + to_pq_string(v)};
    }
  }
  double dt = seconds_since(t0);
  std::ostringstream s;
  s << curves << " curves on " << pairing_grid().size() << " spaces [" << dt << " s, limit 60 s]";
  return {dt <= 60, s.str()};
}

Outcome lambda_oracle() {
  std::size_t curves = 0;
  std::string first;
  for (const auto& ctx : pairing_grid()) {
    if (ctx.g == 0) continue;
    DivisorClass l = lambda_class(ctx);
    for (const auto& f : enumerate_fcurves(ctx)) {
      ++curves;
      Rational want = f.is_elliptic() ? 12 : 0;
      Rational v = intersect(l, f);
      if (v != want && first.empty())
        first = to_string(ctx) + " " + render(f) + " pairs to " + to_pq_string(v) + ", expected " + to_pq_string(want);
    }
  }
  if (first.empty()) return {true, std::to_string(curves) + " curves"};
  return {false, first};
}

Outcome catalog_certification() {
  auto t0 = Clock::now();
  std::size_t checked = 0, refused = 0;
  for (int g = 0; g <= 6; ++g)
    for (int n = 0; n <= 6; ++n) {
      Context ctx{g, n};
      if (!ctx.valid() || catalog(ctx).empty()) continue;
      std::shared_ptr<const FConeSpace> space;
      try {
        space = FConeSpace::build_cached(ctx, false, scratch_cache());
      } catch (const BudgetExceeded&) {
        ++refused;
        continue;
      }
      for (const auto& c : certify_catalog(*space)) {
        ++checked;
        if (!c.problem.empty()) return {false, to_string(ctx) + " " + c.name + " " + c.parameters + ": " + c.problem};
      }
    }
  std::ostringstream s;
  s << checked << " instances certified, " << refused << " spaces over budget [" << seconds_since(t0) << " s]";
  return {checked > 0, s.str()};
}

bool in_f_corpus_scope(const std::string& id) {
  for (const char* family : {"f3-genus", "f31n-", "genus2-", "genus3-", "genus4"})
    if (id.rfind(family, 0) == 0) return true;
  return false;
}

Outcome f_identity_corpus() {
  std::size_t rows = 0, failed = 0;
  std::string first;
  for (const auto& id : load_f_identities(default_f_identity_file())) {
    if (!in_f_corpus_scope(id.id)) continue;
    ++rows;
    auto r = check_f_identity(id);
    if (r.pass) continue;
    ++failed;
    if (first.empty()) first = id.id + " " + r.detail;
  }
  std::ostringstream s;
  s << rows - failed << " of " << rows << " identities hold";
  if (!first.empty()) s << "; first failure: " << first;
  return {rows >= 20 && failed == 0, s.str()};
}

Outcome simplex_oracle() {
  using namespace fcone::oracle;
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> mdist(1, 4), ndist(2, 8);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t m = mdist(rng), n = ndist(rng);
    LinearProgram lp;
    lp.num_vars = n;
    lp.objective = random_vector(rng, n, -5, 5);
    std::vector<RationalVector> eq;
    RationalVector rhs;
    for (std::size_t i = 0; i < m; ++i) {
      auto row = random_vector(rng, n, -3, 3);
      Rational b = random_vector(rng, 1, -4, 6)[0];
      lp.constraints.push_back({row, Relation::Equal, b});
      row.push_back(0);
      eq.push_back(row);
      rhs.push_back(b);
    }
    RationalVector ones(n, 1);
    lp.constraints.push_back({ones, Relation::LessEq, 10});
    ones.push_back(1);
    eq.push_back(ones);
    rhs.push_back(10);
    auto obj = lp.objective;
    obj.push_back(0);
    auto o = vertex_oracle(eq, rhs, obj);
    auto r = lp_solve(lp);
    bool ok = o.feasible ? (r.status == LpStatus::Optimal && r.value == o.best) : r.status == LpStatus::Infeasible;
    if (!ok) return {false, "LP trial " + std::to_string(trial) + " disagrees with vertex enumeration"};
  }
  return {true, "100 LPs"};
}

Outcome rank_oracle() {
  using namespace fcone::oracle;
  std::mt19937 rng(102);
  std::uniform_int_distribution<int> dim(1, 6), sparse(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    std::vector<RationalVector> m;
    for (std::size_t i = 0; i < r; ++i) {
      auto row = random_vector(rng, c, -3, 3);
      if (sparse(rng) == 0 && i > 0) row = m[i - 1];
      m.push_back(row);
    }
    if (rank(m, c) != minor_rank(m, c)) return {false, "rank trial " + std::to_string(trial)};
  }
  return {true, "100 matrices"};
}

// Source spaces of the grid whose one-point extension fits in the budget.
Outcome projection_oracle(std::size_t& spaces) {
  std::mt19937 rng(103);
  std::uniform_int_distribution<int> num(-6, 6), coin(0, 1);
  for (const auto& up : pairing_grid()) {
    if (up.n == 0) continue;
    Context ctx{up.g, up.n - 1};
    if (!ctx.valid()) continue;
    std::vector<FCurve> curves;
    try {
      curves = enumerate_fcurves(up, kMaxCurvesInBudget);
    } catch (const BudgetExceeded&) {
      continue;
    }
    ++spaces;
    auto gens = generating_set(ctx);
    for (int trial = 0; trial < 50; ++trial) {
      DivisorClass d(ctx);
      for (const auto& s : gens)
        if (coin(rng)) d.add_term(s, num(rng));
      int i = 1 + trial % up.n;
      DivisorClass pulled = pullback_forget(d, i);
      for (const auto& c : curves) {
        auto img = pushforward_forget(c, i);
        Rational rhs = img ? intersect(d, *img) : Rational(0);
        if (intersect(pulled, c) != rhs) return {false, to_string(up) + " " + render(c) + " forgetting " + std::to_string(i)};
      }
    }
  }
  return {true, ""};
}

Outcome engine_oracles() {
  auto t0 = Clock::now();
  for (auto* f : {simplex_oracle, rank_oracle}) {
    auto o = f();
    if (!o.pass) return o;
  }
  std::size_t spaces = 0;
  auto p = projection_oracle(spaces);
  if (!p.pass) return p;
  double dt = seconds_since(t0);
  std::ostringstream s;
  s << "100 LPs, 100 matrices, 50 divisors on each of " << spaces << " spaces [" << dt << " s, limit 60 s]";
  return {dt <= 60, s.str()};
}

Outcome determinism() {
  auto spec = load_suite(default_suite_dir() / "knudsen.tsv");
  auto o = options();
  run_suite(spec, o);
  auto a = strip_timing(report_json(run_suite(spec, o)));
  auto b = strip_timing(report_json(run_suite(spec, o)));
  return {a == b, a == b ? std::to_string(a.size()) + " bytes identical" : "reports differ"};
}

std::set<int> parse_ids(const char* text) {
  std::set<int> out;
  std::stringstream s(text);
  std::string tok;
  while (std::getline(s, tok, ',')) out.insert(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::set<int>> expect_red;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-red") == 0 && i + 1 < argc) {
      expect_red = parse_ids(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--expect-red 2,3,12]\n";
      return 2;
    }
  }

  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all = {
      {1, "kappa pairs to 1 with every F-curve", kappa_oracle},
      {2, "lambda pairs to 12 with F1 and 0 with every other F-curve", lambda_oracle},
      {3, "relation suite", [] { return suites({"relations", "genus6-relation"}, "", 30); }},
      {4, "genus 2 regular extremality", [] { return suites({"genus2"}); }},
      {5, "genus 3 regular extremality and exception", [] { return suites({"genus3"}); }},
      {6, "genus 4 exception list", [] { return suites({"genus4"}); }},
      {7, "index of F3[1]([n]) is floor(g/2)", [] { return suites({"f31n"}, "index="); }},
      {8, "implications on (4,1) and (5,1)", [] { return suites({"f31n"}, "implies:"); }},
      {9, "Knudsen-type curves are regular extremal", [] { return suites({"knudsen"}); }},
      {10, "genus 0 and 1 curves are regular extremal", [] { return suites({"genus01"}); }},
      {11, "kappa catalog certification", catalog_certification},
      {12, "f-image identity corpus", f_identity_corpus},
      {13, "engine oracles", engine_oracles},
      {14, "determinism on a warm cache", determinism},
  };

  std::set<int> red;
  for (const auto& c : all) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) red.insert(c.id);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (c.id < 10 ? " " : "") << c.id << "  " << c.name;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  std::cout << all.size() - red.size() << " of " << all.size() << " criteria pass" << std::endl;
  if (!expect_red) return red.empty() ? 0 : 1;
  if (red == *expect_red) return 0;
  std::cout << "failing set differs from the expected one" << std::endl;
  return 1;
}
