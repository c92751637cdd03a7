#include "fcone/pairing.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace fcone {

namespace {

class Accumulator {
 public:
  explicit Accumulator(const Context& ctx) : ctx_(ctx) {}

  void add(const BasisSymbol& s, long long v) {
    auto& slot = acc_[s];
    slot += v;
  }
  void add_boundary(int a, MarkSet set, long long v) {
    SignedSymbol s = canonical_boundary(ctx_, a, set);
    add(s.symbol, s.sign * v);
  }
  CurveVector finish() const {
    CurveVector out;
    for (const auto& [s, v] : acc_) {
      if (v != 0) out.emplace_back(s, v);
    }
    return out;
  }

 private:
  Context ctx_;
  std::map<BasisSymbol, long long> acc_;
};

}  // namespace

CurveVector curve_vector(const FCurve& f) {
  const Context& ctx = f.context();
  Accumulator acc(ctx);
  if (f.is_elliptic()) {
    acc.add(BasisSymbol::lambda(), 1);
    acc.add(BasisSymbol::delta_irr(), 12);
    acc.add_boundary(1, 0, -1);
    return acc.finish();
  }
  const auto& groups = f.groups();
  // owner[h] = group index of spine attaching point h
  std::vector<int> owner;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const Group& gr = groups[k];
    for (int h = 0; h < gr.size; ++h) owner.push_back(static_cast<int>(k));
    if (gr.size == 1) {
      if (gr.genus == 0 && cardinality(gr.marks) == 1) {
        acc.add(BasisSymbol::psi(min_element(gr.marks)), 1);
      } else {
        acc.add_boundary(gr.genus, gr.marks, -1);
      }
    } else {
      acc.add(BasisSymbol::delta_irr(), -gr.size);
    }
  }
  // the three boundary points of the spine: {0,x} | rest
  for (int x = 1; x <= 3; ++x) {
    std::vector<int> side(groups.size(), -1);
    bool separating = true;
    for (int h = 0; h < 4; ++h) {
      int s = (h == 0 || h == x) ? 0 : 1;
      int& slot = side[owner[h]];
      if (slot == -1) {
        slot = s;
      } else if (slot != s) {
        separating = false;
      }
    }
    if (!separating) {
      acc.add(BasisSymbol::delta_irr(), 1);
      continue;
    }
    int genus = 0;
    MarkSet marks = 0;
    for (std::size_t k = 0; k < groups.size(); ++k) {
      if (side[k] == 0) {
        genus += groups[k].genus + groups[k].size - 1;
        marks |= groups[k].marks;
      }
    }
    acc.add_boundary(genus, marks, 1);
  }
  return acc.finish();
}

Rational intersect(const DivisorClass& d, const CurveVector& v) {
  Rational s = 0;
  for (const auto& [sym, val] : v) {
    auto it = d.terms().find(sym);
    if (it != d.terms().end()) s += it->second * val;
  }
  return s;
}

Rational intersect(const DivisorClass& d, const FCurve& f) {
  if (d.context() != f.context()) {
    throw std::invalid_argument("divisor on " + to_string(d.context()) + " but curve on " +
                                to_string(f.context()));
  }
  return intersect(d, curve_vector(f));
}

PairingMatrix pairing_matrix(const Context& ctx) {
  PairingMatrix m;
  m.ctx = ctx;
  m.generators = generating_set(ctx);
  m.curves = enumerate_fcurves(ctx);
  std::map<BasisSymbol, std::size_t> row;
  for (std::size_t r = 0; r < m.generators.size(); ++r) row[m.generators[r]] = r;
  m.entries.assign(m.generators.size(), std::vector<Rational>(m.curves.size()));
  for (std::size_t c = 0; c < m.curves.size(); ++c) {
    for (const auto& [s, v] : curve_vector(m.curves[c])) m.entries[row.at(s)][c] = v;
  }
  return m;
}

std::string to_cache_json(const PairingMatrix& m) {
  nlohmann::ordered_json j;
  j["format_version"] = kMatrixCacheFormatVersion;
  j["g"] = m.ctx.g;
  j["n"] = m.ctx.n;
  auto gens = nlohmann::ordered_json::array();
  for (const auto& s : m.generators) gens.push_back(render(s));
  j["generators"] = std::move(gens);
  auto curves = nlohmann::ordered_json::array();
  for (const auto& f : m.curves) curves.push_back(render(f));
  j["curves"] = std::move(curves);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : m.entries) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& v : r) row.push_back(to_pq_string(v));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

PairingMatrix from_cache_json(const Context& ctx, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("cache is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format_version").get<int>() != kMatrixCacheFormatVersion) {
      throw std::runtime_error("cache format version mismatch");
    }
    if (j.at("g").get<int>() != ctx.g || j.at("n").get<int>() != ctx.n) {
      throw std::runtime_error("cache belongs to another (g,n)");
    }
    PairingMatrix m;
    m.ctx = ctx;
    m.generators = generating_set(ctx);
    const auto& gens = j.at("generators");
    if (gens.size() != m.generators.size()) throw std::runtime_error("generator count mismatch");
    for (std::size_t r = 0; r < gens.size(); ++r) {
      if (gens[r].get<std::string>() != render(m.generators[r])) {
        throw std::runtime_error("generator mismatch at row " + std::to_string(r));
      }
    }
    for (const auto& c : j.at("curves")) m.curves.push_back(parse_curve(ctx, c.get<std::string>()));
    const auto& rows = j.at("entries");
    if (rows.size() != m.generators.size()) throw std::runtime_error("row count mismatch");
    for (const auto& row : rows) {
      if (row.size() != m.curves.size()) throw std::runtime_error("column count mismatch");
      std::vector<Rational> r;
      r.reserve(row.size());
      for (const auto& v : row) r.push_back(parse_rational(v.get<std::string>()));
      m.entries.push_back(std::move(r));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed cache: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed cache: ") + e.what());
  }
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const Context& ctx) {
  return dir / ("pairing_g" + std::to_string(ctx.g) + "_n" + std::to_string(ctx.n) + "_v" +
                std::to_string(kMatrixCacheFormatVersion) + ".json");
}

namespace {

void write_atomically(const std::filesystem::path& target, const std::string& text) {
  std::filesystem::create_directories(target.parent_path());
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

PairingMatrix cached_pairing_matrix(const Context& ctx, const std::filesystem::path& dir,
                                    std::string* warning) {
  const auto path = cache_file(dir, ctx);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return from_cache_json(ctx, buf.str());
    } catch (const std::exception& e) {
      if (warning) *warning = "recomputing corrupt cache " + path.string() + ": " + e.what();
    }
  }
  PairingMatrix m = pairing_matrix(ctx);
  write_atomically(path, to_cache_json(m));
  return m;
}

}  // namespace fcone
