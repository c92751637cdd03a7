#include "fcone/harness.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#ifndef FCONE_SUITE_DIR
#define FCONE_SUITE_DIR "data/suites"
#endif

namespace fcone {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, '\t')) out.push_back(cell);
  if (!line.empty() && line.back() == '\t') out.emplace_back();
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_extremality_verdict(const std::string& v) {
  return v == "regular" || v == "extremal" || v == "not_extremal" || v.rfind("index=", 0) == 0;
}

bool selects(const std::string& selector, const FCurve& f) {
  if (selector == "all") return true;
  if (selector == "knudsen") return is_knudsen_type(f);
  if (selector.rfind("type:", 0) == 0) return f.type() == std::stoi(selector.substr(5));
  return false;
}

bool is_wildcard(const std::string& selector) {
  return selector == "all" || selector == "knudsen" || selector.rfind("type:", 0) == 0;
}

// One unit of work inside a context.
struct Task {
  const SuiteRow* row = nullptr;
  std::optional<FCurve> curve;
  ItemResult result;
};

void evaluate(const FConeSpace& space, Task& t) {
  auto t0 = Clock::now();
  ItemResult& r = t.result;
  const std::string& v = t.row->verdict;
  try {
    if (!t.curve) t.curve = parse_curve(space.context(), t.row->selector);
    const FCurve& f = *t.curve;
    r.curve = render(f);
    if (v.rfind("index=", 0) == 0) {
      std::size_t expected = std::stoul(v.substr(6));
      std::size_t got = index_of_extremality(space, f);
      r.got = "index=" + std::to_string(got);
      r.status = got == expected ? ItemStatus::Pass : ItemStatus::Fail;
    } else if (is_extremality_verdict(v)) {
      ExtremalityReport rep = regular_extremal_report(space, f);
      if (!rep.extremal) {
        r.got = "not_extremal";
        std::string dec;
        for (const auto& term : rep.decomposition) {
          if (!dec.empty()) dec += " + ";
          dec += to_display_string(term.coeff) + " " + render(term.curve);
        }
        r.witness = dec;
      } else {
        r.got = rep.regular ? "regular" : "extremal";
        r.witness = "index=" + std::to_string(rep.index);
      }
      bool ok = v == "extremal" ? rep.extremal : r.got == v;
      r.status = ok ? ItemStatus::Pass : ItemStatus::Fail;
    } else if (v.rfind("equals:", 0) == 0) {
      CurveCombination rhs = parse_combination(space.context(), std::string_view(v).substr(7));
      std::map<BasisSymbol, Rational> diff;
      for (const auto& [s, x] : curve_vector(f)) diff[s] += x;
      for (const auto& [coeff, c] : rhs.terms)
        for (const auto& [s, x] : curve_vector(c)) diff[s] -= coeff * x;
      auto bad = std::find_if(diff.begin(), diff.end(), [](const auto& e) { return e.second != 0; });
      if (bad == diff.end()) {
        r.got = "equal";
        r.status = ItemStatus::Pass;
      } else {
        r.got = "unequal";
        r.witness = "difference " + to_display_string(bad->second) + " on " + render(bad->first);
        r.status = ItemStatus::Fail;
      }
    } else if (v.rfind("implies:", 0) == 0) {
      FCurve target = parse_curve(space.context(), std::string_view(v).substr(8));
      Rational value = implication_value(space, f, target);
      r.got = value == 0 ? "implied" : "not_implied";
      r.witness = "lp_max=" + to_pq_string(value);
      r.status = value == 0 ? ItemStatus::Pass : ItemStatus::Fail;
    } else {
      throw std::invalid_argument("unknown verdict '" + v + "'");
    }
  } catch (const std::exception& e) {
    if (r.curve.empty()) r.curve = t.row->selector;
    r.got = "error";
    r.witness = e.what();
    r.status = ItemStatus::Fail;
  }
  r.elapsed_ms = ms_since(t0);
}

void run_parallel(const FConeSpace& space, std::vector<Task>& tasks, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) evaluate(space, tasks[i]);
  };
  if (workers <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
}

}  // namespace

std::string to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass: return "pass";
    case ItemStatus::Fail: return "fail";
    case ItemStatus::Skipped: return "skipped";
  }
  return "?";
}

std::size_t VerificationReport::count(ItemStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [s](const ItemResult& r) { return r.status == s; }));
}

bool is_knudsen_type(const FCurve& f) {
  if (f.is_elliptic()) return false;
  int zero_tails = 0;
  for (const auto& gr : f.groups())
    if (gr.size == 1 && gr.genus == 0) ++zero_tails;
  if (f.type() == 5) return zero_tails == 2;
  return f.type() == 6 && zero_tails >= 2;
}

CurveCombination parse_combination(const Context& ctx, std::string_view text) {
  CurveCombination out;
  std::string_view rest = trim(text);
  if (rest.empty()) throw std::invalid_argument("empty curve combination");
  while (!rest.empty()) {
    std::size_t plus = rest.find(" + ");
    std::string_view term = trim(rest.substr(0, plus));
    rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus + 3);
    Rational coeff = 1;
    if (!term.empty() && term.front() != 'F') {
      std::size_t sp = term.find(' ');
      if (sp == std::string_view::npos) throw std::invalid_argument("term without curve: " + std::string(term));
      coeff = parse_rational(term.substr(0, sp));
      term = trim(term.substr(sp + 1));
    }
    out.terms.emplace_back(coeff, parse_curve(ctx, term));
  }
  return out;
}

SuiteSpec load_suite(const std::filesystem::path& tsv) {
  std::ifstream in(tsv);
  if (!in) throw std::runtime_error("cannot open suite file " + tsv.string());
  SuiteSpec spec;
  spec.name = tsv.stem().string();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto cells = split_tabs(line);
    if (lineno == 1 && !cells.empty() && cells[0] == "suite") continue;
    if (cells.size() != 7)
      throw std::runtime_error(tsv.string() + ":" + std::to_string(lineno) + ": expected 7 columns");
    SuiteRow row;
    row.suite = cells[0];
    try {
      row.g = std::stoi(cells[1]);
      row.n = std::stoi(cells[2]);
    } catch (const std::exception&) {
      throw std::runtime_error(tsv.string() + ":" + std::to_string(lineno) + ": bad g or n");
    }
    row.selector = cells[3];
    row.verdict = cells[4];
    row.anchor = cells[5];
    row.scope = cells[6];
    if (row.scope != "default" && row.scope != "large")
      throw std::runtime_error(tsv.string() + ":" + std::to_string(lineno) + ": bad scope");
    if (row.anchor.empty())
      throw std::runtime_error(tsv.string() + ":" + std::to_string(lineno) + ": missing anchor");
    spec.rows.push_back(std::move(row));
  }
  return spec;
}

std::vector<std::string> suite_names(const std::filesystem::path& dir) {
  std::vector<std::string> out;
  if (!std::filesystem::is_directory(dir)) return out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".tsv") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::filesystem::path default_suite_dir() { return FCONE_SUITE_DIR; }

VerificationReport run_suite(const SuiteSpec& spec, const RunOptions& options) {
  auto t0 = Clock::now();
  VerificationReport report;
  report.suite = spec.name;
  report.allow_large = options.allow_large;
  if (options.cache_dir) report.cache_dir = options.cache_dir->string();

  // contexts in order of first appearance
  std::vector<std::pair<int, int>> contexts;
  for (const auto& row : spec.rows)
    if (std::find(contexts.begin(), contexts.end(), std::pair{row.g, row.n}) == contexts.end())
      contexts.emplace_back(row.g, row.n);

  for (auto [g, n] : contexts) {
    Context ctx{g, n};
    std::vector<const SuiteRow*> rows;
    for (const auto& row : spec.rows)
      if (row.g == g && row.n == n) rows.push_back(&row);

    auto skip_all = [&](const std::string& why) {
      for (const SuiteRow* row : rows) {
        ItemResult r;
        r.g = g;
        r.n = n;
        r.curve = row->selector;
        r.expected = row->verdict;
        r.anchor = row->anchor;
        r.got = "skipped";
        r.witness = why;
        report.items.push_back(std::move(r));
      }
    };

    std::vector<const SuiteRow*> active;
    std::vector<const SuiteRow*> opt_in;
    for (const SuiteRow* row : rows) (row->scope == "large" && !options.allow_large ? opt_in : active).push_back(row);
    if (!opt_in.empty()) {
      std::swap(rows, opt_in);
      skip_all("opt-in: needs --allow-large");
      std::swap(rows, opt_in);
    }
    if (active.empty()) continue;
    rows = active;

    std::shared_ptr<const FConeSpace> space;
    try {
      ctx.require_valid();
      if (!options.allow_large) enumerate_fcurves(ctx, spec.max_curves);
      space = options.cache_dir ? FConeSpace::build_cached(ctx, options.allow_large, *options.cache_dir)
                                : FConeSpace::build(ctx, options.allow_large);
      if (!options.allow_large && space->rank() > spec.max_rank)
        throw BudgetExceeded(to_string(ctx) + " has rank " + std::to_string(space->rank()));
    } catch (const BudgetExceeded& e) {
      report.complete = false;
      skip_all(std::string("budget: ") + e.what());
      continue;
    } catch (const std::exception& e) {
      for (const SuiteRow* row : rows) {
        ItemResult r{g, n, row->selector, row->verdict, "error", e.what(), row->anchor, ItemStatus::Fail, 0};
        report.items.push_back(std::move(r));
      }
      continue;
    }

    // explicit extremality rows override wildcard ones for the same curve
    std::map<FCurve, const SuiteRow*> verdict_for;
    std::vector<Task> tasks;
    for (const SuiteRow* row : rows) {
      if (!is_extremality_verdict(row->verdict) || !is_wildcard(row->selector)) continue;
      for (const FCurve& f : space->curves())
        if (selects(row->selector, f)) verdict_for[f] = row;
    }
    for (const SuiteRow* row : rows) {
      if (!is_extremality_verdict(row->verdict) || is_wildcard(row->selector)) continue;
      try {
        verdict_for[parse_curve(ctx, row->selector)] = row;
      } catch (const std::exception&) {
        Task t;
        t.row = row;
        tasks.push_back(std::move(t));
      }
    }
    for (const auto& [curve, row] : verdict_for) {
      Task t;
      t.row = row;
      t.curve = curve;
      tasks.push_back(std::move(t));
    }
    for (const SuiteRow* row : rows) {
      if (is_extremality_verdict(row->verdict)) continue;
      Task t;
      t.row = row;
      tasks.push_back(std::move(t));
    }
    for (Task& t : tasks) {
      t.result.g = g;
      t.result.n = n;
      t.result.expected = t.row->verdict;
      t.result.anchor = t.row->anchor;
    }
    run_parallel(*space, tasks, options.workers);
    for (Task& t : tasks) report.items.push_back(std::move(t.result));
  }
  report.elapsed_ms = ms_since(t0);
  return report;
}

std::string report_json(const VerificationReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["complete"] = r.complete;
  j["environment"] = {{"cache_format_version", kMatrixCacheFormatVersion},
                      {"enumeration_format_version", kEnumerationFormatVersion},
                      {"allow_large", r.allow_large},
                      {"cache_dir", r.cache_dir.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.cache_dir)}};
  j["summary"] = {{"total", r.items.size()},
                  {"passed", r.count(ItemStatus::Pass)},
                  {"failed", r.count(ItemStatus::Fail)},
                  {"skipped", r.count(ItemStatus::Skipped)}};
  auto items = nlohmann::ordered_json::array();
  for (const auto& it : r.items) {
    nlohmann::ordered_json e;
    e["g"] = it.g;
    e["n"] = it.n;
    e["curve"] = it.curve;
    e["expected"] = it.expected;
    e["got"] = it.got;
    e["status"] = to_string(it.status);
    e["witness"] = it.witness;
    e["anchor"] = it.anchor;
    if (include_timing) e["elapsed_ms"] = it.elapsed_ms;
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2);
}

std::string strip_timing(const std::string& json_text) {
  auto j = nlohmann::ordered_json::parse(json_text);
  auto strip = [](auto& self, nlohmann::ordered_json& node) -> void {
    if (node.is_object()) {
      node.erase("elapsed_ms");
      for (auto& [k, v] : node.items()) self(self, v);
    } else if (node.is_array()) {
      for (auto& v : node) self(self, v);
    }
  };
  strip(strip, j);
  return j.dump(2);
}

std::string report_table(const VerificationReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << (r.complete ? "" : " (incomplete)") << "\n";
  std::size_t w = 5;
  for (const auto& it : r.items) w = std::max(w, it.curve.size());
  w = std::min<std::size_t>(w, 48);
  for (const auto& it : r.items) {
    out << "  " << (it.status == ItemStatus::Pass ? "PASS" : it.status == ItemStatus::Fail ? "FAIL" : "SKIP") << "  ("
        << it.g << "," << it.n << ")  " << it.curve;
    if (it.curve.size() < w) out << std::string(w - it.curve.size(), ' ');
    out << "  " << it.got;
    if (it.status == ItemStatus::Fail) {
      out << "  expected " << it.expected;
      if (!it.witness.empty()) out << "  [" << it.witness << "]";
      out << "  claim: " << it.anchor;
    } else if (it.status == ItemStatus::Skipped) {
      out << "  (" << it.witness << ")";
    }
    out << "\n";
  }
  out << "  " << r.count(ItemStatus::Pass) << " passed, " << r.count(ItemStatus::Fail) << " failed, "
      << r.count(ItemStatus::Skipped) << " skipped\n";
  return out.str();
}

std::vector<CatalogCheck> certify_catalog(const FConeSpace& space) {
  std::vector<CatalogCheck> out;
  for (const auto& inst : catalog(space.context())) {
    CatalogCheck c{inst.name, inst.parameters, {}};
    FnefResult r = is_fnef(space, inst.divisor);
    if (!r.nef) c.problem = "not F-nef on " + render(*r.witness);
    for (const auto& f : inst.contracts)
      if (Rational v = intersect(inst.divisor, f); v != 0)
        c.problem += (c.problem.empty() ? "" : "; ") + render(f) + " pairs to " + to_display_string(v);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace fcone
