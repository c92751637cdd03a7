#include "fcone/extremality.hpp"
#include "fcone/harness.hpp"
#include "fcone/kappa_knudsen.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace fcone;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int g = -1;
  int n = 0;
  bool json = false;
  bool csv = false;
  std::string cache_dir;
  bool no_cache = false;
  unsigned workers = 0;
  bool allow_large = false;
};

void add_common(CLI::App* sub, Common& c, bool needs_space = true) {
  if (needs_space) {
    sub->add_option("-g,--genus", c.g, "genus")->required();
    sub->add_option("-n,--markings", c.n, "number of marked points")->default_val(0);
  }
  sub->add_flag("--json", c.json, "JSON output");
  sub->add_flag("--csv", c.csv, "CSV output");
  sub->add_option("--cache-dir", c.cache_dir, "pairing-matrix cache directory (FCONE_CACHE_DIR overrides)");
  sub->add_flag("--no-cache", c.no_cache, "neither read nor write the cache");
  sub->add_option("--workers", c.workers, "worker threads (0 = logical cores)")->default_val(0);
  sub->add_flag("--allow-large", c.allow_large, "lift the size budget");
}

std::filesystem::path cache_dir(const Common& c) {
  if (const char* env = std::getenv("FCONE_CACHE_DIR"); env && *env) return env;
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "fcone";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "fcone";
  return ".fcone-cache";
}

Context context(const Common& c) {
  Context ctx{c.g, c.n};
  if (!ctx.valid()) throw UsageError("unsupported space " + to_string(ctx) + ": need 3g-3+n >= 1, g >= 0, n <= 24");
  return ctx;
}

std::shared_ptr<const FConeSpace> space(const Common& c) {
  Context ctx = context(c);
  if (c.no_cache) return FConeSpace::build(ctx, c.allow_large);
  std::string warning;
  auto s = FConeSpace::build_cached(ctx, c.allow_large, cache_dir(c), &warning);
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  return s;
}

FCurve curve_arg(const Context& ctx, const std::string& text) {
  try {
    return parse_curve(ctx, text);
  } catch (const std::exception& e) {
    throw UsageError("bad curve '" + text + "': " + e.what());
  }
}

DivisorClass divisor_arg(const Context& ctx, const std::string& text) {
  try {
    return parse_divisor(ctx, text);
  } catch (const std::exception& e) {
    throw UsageError("bad divisor '" + text + "': " + e.what());
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

int cmd_enumerate(const Common& c) {
  Context ctx = context(c);
  auto curves = enumerate_fcurves(ctx, c.allow_large ? std::numeric_limits<std::size_t>::max() : kMaxCurvesInBudget);
  if (c.json) {
    std::cout << enumeration_json(ctx, curves) << "\n";
  } else if (c.csv) {
    std::cout << "index,type,curve\n";
    for (std::size_t i = 0; i < curves.size(); ++i)
      std::cout << i << "," << curves[i].type() << "," << csv_quote(render(curves[i])) << "\n";
  } else {
    for (const auto& f : curves) std::cout << render(f) << "\n";
    std::cerr << curves.size() << " F-curves on " << to_string(ctx) << "\n";
  }
  return kOk;
}

int cmd_pair(const Common& c, const std::string& div, const std::vector<std::string>& curves) {
  Context ctx = context(c);
  DivisorClass d = divisor_arg(ctx, div);
  std::vector<FCurve> targets;
  for (const auto& t : curves) targets.push_back(curve_arg(ctx, t));
  if (targets.empty())
    targets = enumerate_fcurves(ctx, c.allow_large ? std::numeric_limits<std::size_t>::max() : kMaxCurvesInBudget);
  if (c.json) {
    ojson j;
    j["divisor"] = render(d);
    auto arr = ojson::array();
    for (const auto& f : targets) arr.push_back({{"curve", render(f)}, {"value", to_pq_string(intersect(d, f))}});
    j["pairings"] = arr;
    std::cout << j.dump(2) << "\n";
  } else if (c.csv) {
    std::cout << "curve,value\n";
    for (const auto& f : targets) std::cout << csv_quote(render(f)) << "," << to_pq_string(intersect(d, f)) << "\n";
  } else if (targets.size() == 1 && !curves.empty()) {
    std::cout << to_display_string(intersect(d, targets[0])) << "\n";
  } else {
    for (const auto& f : targets) std::cout << render(f) << "\t" << to_display_string(intersect(d, f)) << "\n";
  }
  return kOk;
}

int cmd_fnef(const Common& c, const std::string& div) {
  auto s = space(c);
  DivisorClass d = divisor_arg(s->context(), div);
  FnefResult r = is_fnef(*s, d);
  if (c.json) {
    ojson j;
    j["divisor"] = render(d);
    j["fnef"] = r.nef;
    j["witness"] = r.witness ? ojson(render(*r.witness)) : ojson();
    j["value"] = r.witness ? ojson(to_pq_string(r.value)) : ojson();
    std::cout << j.dump(2) << "\n";
  } else if (r.nef) {
    std::cout << "F-nef\n";
  } else {
    std::cout << "not F-nef: " << render(*r.witness) << " pairs to " << to_display_string(r.value) << "\n";
  }
  return kOk;
}

int cmd_index(const Common& c, const std::string& curve) {
  auto s = space(c);
  FCurve f = curve_arg(s->context(), curve);
  std::size_t idx = index_of_extremality(*s, f);
  if (c.json) {
    ojson j;
    j["curve"] = render(f);
    j["index"] = idx;
    j["conditional"] = !in_verified_range(s->context());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << idx << "\n";
  }
  return kOk;
}

int cmd_extremal(const Common& c, const std::string& curve) {
  auto s = space(c);
  FCurve f = curve_arg(s->context(), curve);
  ExtremalityReport r = regular_extremal_report(*s, f);
  if (c.csv) {
    std::cout << "curve,extremal,regular,index,decomposition\n" << csv_quote(render(f)) << "," << r.extremal << ","
              << r.regular << "," << r.index << ",";
    std::string dec;
    for (const auto& t : r.decomposition) dec += (dec.empty() ? "" : " + ") + to_pq_string(t.coeff) + " " + render(t.curve);
    std::cout << csv_quote(dec) << "\n";
  } else {
    std::cout << report_json(r, true) << "\n";
  }
  return kOk;
}

int cmd_implies(const Common& c, const std::string& curve, const std::vector<std::string>& targets) {
  auto s = space(c);
  FCurve f = curve_arg(s->context(), curve);
  bool all = true;
  auto arr = ojson::array();
  for (const auto& t : targets) {
    FCurve target = curve_arg(s->context(), t);
    Rational v = implication_value(*s, f, target);
    all = all && v == 0;
    if (c.json) {
      arr.push_back({{"target", render(target)}, {"lp_max", to_pq_string(v)}, {"implied", v == 0}});
    } else {
      std::cout << render(target) << "\t" << (v == 0 ? "implied" : "not implied") << "\tmax " << to_display_string(v)
                << "\n";
    }
  }
  if (c.json) {
    ojson j;
    j["contracted"] = render(f);
    j["targets"] = arr;
    std::cout << j.dump(2) << "\n";
  }
  return all ? kOk : kVerifyFailed;
}

int cmd_knudsen(const Common& c, int p, int q, const std::vector<std::string>& divisors) {
  Context ctx = context(c);
  if (ctx.n < 2) throw UsageError("knudsen needs n >= 2");
  if (p < 1 || q < 1 || p > ctx.n || q > ctx.n || p == q) throw UsageError("need distinct markings 1 <= p,q <= n");
  KnudsenSet k = knudsen_set(ctx, p, q);
  ojson j;
  j["pair"] = {p, q};
  auto curves = ojson::array();
  for (const auto& f : k.curves) curves.push_back(render(f));
  j["curves"] = curves;
  auto images = ojson::array();
  for (const auto& text : divisors) {
    DivisorClass d = divisor_arg(ctx, text);
    FImage im = f_image(d, k);
    ojson coords = ojson::object();
    for (std::size_t i = 0; i < im.labels.size(); ++i)
      coords[im.labels[i]] = im.defined[i] ? ojson(to_pq_string(im.coords[i])) : ojson();
    images.push_back({{"divisor", render(d)}, {"image", render(im)}, {"coords", coords}});
    if (!c.json) std::cout << "f(" << render(d) << ") = " << render(im) << "\n";
  }
  j["images"] = images;
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else if (divisors.empty()) {
    for (const auto& f : k.curves) std::cout << render(f) << "\n";
  }
  return kOk;
}

int cmd_catalog(const Common& c, bool certify) {
  Context ctx = context(c);
  if (!certify) {
    if (c.json) {
      std::cout << catalog_json(ctx) << "\n";
    } else {
      for (const auto& inst : catalog(ctx)) {
        std::cout << inst.name << (inst.parameters.empty() ? "" : " [" + inst.parameters + "]") << ": "
                  << render(inst.divisor);
        if (!inst.contracts.empty()) {
          std::cout << "  contracts";
          for (const auto& f : inst.contracts) std::cout << " " << render(f);
        }
        std::cout << "\n";
      }
    }
    return kOk;
  }
  auto s = space(c);
  int bad = 0;
  for (const auto& chk : certify_catalog(*s)) {
    std::cout << (chk.problem.empty() ? "ok   " : "FAIL ") << chk.name
              << (chk.parameters.empty() ? "" : " [" + chk.parameters + "]")
              << (chk.problem.empty() ? "" : "  " + chk.problem) << "\n";
    bad += !chk.problem.empty();
  }
  return bad ? kVerifyFailed : kOk;
}

int cmd_verify(const Common& c, std::vector<std::string> suites, const std::string& dir, const std::string& out) {
  std::filesystem::path suite_dir = dir.empty() ? default_suite_dir() : std::filesystem::path(dir);
  if (suites.empty()) suites = suite_names(suite_dir);
  if (suites.empty()) throw UsageError("no suites found in " + suite_dir.string());
  RunOptions opts;
  opts.allow_large = c.allow_large;
  opts.workers = c.workers;
  if (!c.no_cache) opts.cache_dir = cache_dir(c);
  bool ok = true;
  auto all = ojson::array();
  for (const auto& name : suites) {
    std::filesystem::path file = suite_dir / (name + ".tsv");
    if (!std::filesystem::exists(file)) throw UsageError("unknown suite '" + name + "'");
    VerificationReport r = run_suite(load_suite(file), opts);
    ok = ok && r.all_pass();
    all.push_back(ojson::parse(report_json(r, true)));
    if (!c.json) std::cout << report_table(r);
  }
  std::string text = (all.size() == 1 ? all[0] : all).dump(2);
  if (c.json) std::cout << text << "\n";
  if (!out.empty()) std::ofstream(out) << text << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_cache(const Common& c, const std::string& action) {
  std::filesystem::path dir = cache_dir(c);
  if (action == "path") {
    std::cout << dir.string() << "\n";
  } else if (action == "list") {
    if (std::filesystem::is_directory(dir))
      for (const auto& e : std::filesystem::directory_iterator(dir))
        std::cout << e.path().filename().string() << "\t" << e.file_size() << "\n";
  } else if (action == "clear") {
    std::size_t removed = 0;
    if (std::filesystem::is_directory(dir))
      for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().filename().string().rfind("pairing_", 0) == 0) removed += std::filesystem::remove(e.path());
    std::cout << "removed " << removed << " files\n";
  } else if (action == "warm") {
    if (c.g < 0) throw UsageError("cache warm needs -g");
    auto s = space(c);
    std::cout << cache_file(dir, s->context()).string() << "\n";
  } else {
    throw UsageError("cache action must be path, list, clear or warm");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fcone: exact F-curve and F-nef computations on moduli of pointed stable curves"};
  app.require_subcommand(1);
  Common c;
  std::string divisor;
  std::vector<std::string> curves;
  std::string curve;
  std::vector<std::string> targets;
  int p = 1;
  int q = 2;
  std::vector<std::string> divisors;
  bool certify = false;
  std::vector<std::string> suites;
  std::string suite_dir;
  std::string out;
  std::string action;

  auto* enumerate = app.add_subcommand("enumerate", "list the F-curves of a space");
  add_common(enumerate, c);
  auto* pair = app.add_subcommand("pair", "intersect a divisor with curves");
  add_common(pair, c);
  pair->add_option("--divisor", divisor, "divisor expression")->required();
  pair->add_option("--curve", curves, "curve (repeatable; default all)");
  auto* fnef = app.add_subcommand("fnef", "decide F-nefness of a divisor");
  add_common(fnef, c);
  fnef->add_option("--divisor", divisor, "divisor expression")->required();
  auto* index = app.add_subcommand("index", "index of extremality of a curve");
  add_common(index, c);
  index->add_option("--curve", curve, "curve")->required();
  auto* extremal = app.add_subcommand("extremal", "extremality report for a curve");
  add_common(extremal, c);
  extremal->add_option("--curve", curve, "curve")->required();
  auto* implies = app.add_subcommand("implies", "does contracting --curve force contracting each --target");
  add_common(implies, c);
  implies->add_option("--curve", curve, "contracted curve")->required();
  implies->add_option("--target", targets, "target curve (repeatable)")->required();
  auto* knudsen = app.add_subcommand("knudsen", "Knudsen curve set and f-images");
  add_common(knudsen, c);
  knudsen->add_option("-p", p, "first marking")->default_val(1);
  knudsen->add_option("-q", q, "second marking")->default_val(2);
  knudsen->add_option("--divisor", divisors, "divisor to map (repeatable)");
  auto* kcat = app.add_subcommand("kappa-catalog", "semigroup kappa divisors applicable to a space");
  add_common(kcat, c);
  kcat->add_flag("--certify", certify, "check F-nefness and contractions");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, c, false);
  verify->add_option("--suite", suites, "suite name (repeatable; default all)");
  verify->add_option("--suite-dir", suite_dir, "directory of suite tables");
  verify->add_option("--out", out, "write the JSON report to a file");
  auto* cache = app.add_subcommand("cache", "inspect or manage the pairing-matrix cache");
  add_common(cache, c, false);
  cache->add_option("action", action, "path | list | clear | warm")->required();
  cache->add_option("-g,--genus", c.g, "genus (warm)");
  cache->add_option("-n,--markings", c.n, "number of marked points (warm)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (c.json && c.csv) {
    std::cerr << "error: --json and --csv are exclusive\n";
    return kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(c);
    if (*pair) return cmd_pair(c, divisor, curves);
    if (*fnef) return cmd_fnef(c, divisor);
    if (*index) return cmd_index(c, curve);
    if (*extremal) return cmd_extremal(c, curve);
    if (*implies) return cmd_implies(c, curve, targets);
    if (*knudsen) return cmd_knudsen(c, p, q, divisors);
    if (*kcat) return cmd_catalog(c, certify);
    if (*verify) return cmd_verify(c, suites, suite_dir, out);
    if (*cache) return cmd_cache(c, action);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << " (use --allow-large)\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
