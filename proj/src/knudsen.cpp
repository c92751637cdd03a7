#include "fcone/kappa_knudsen.hpp"
#include "fcone/pairing.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#ifndef FCONE_DATA_DIR
#define FCONE_DATA_DIR "data"
#endif

namespace fcone {

KnudsenSet knudsen_set(const Context& ctx, int p, int q) {
  ctx.require_valid();
  if (ctx.n < 2) throw std::invalid_argument("Knudsen set needs n >= 2");
  if (p == q || p < 1 || q < 1 || p > ctx.n || q > ctx.n) {
    throw std::invalid_argument("Knudsen pair must be two distinct markings");
  }
  KnudsenSet k{ctx, p, q, {}};
  const MarkSet R = ctx.all() & ~(singleton(p) | singleton(q));
  if (ctx.g >= 1) k.curves.push_back(make_F5(ctx, 0, 0, singleton(p), singleton(q)));
  std::vector<FCurve> f6;
  for (int a = 0; 2 * a <= ctx.g; ++a) {
    MarkSet A = R;
    while (true) {
      MarkSet B = R & ~A;
      bool stable = (a > 0 || A != 0) && (ctx.g - a > 0 || B != 0);
      if (stable) {
        FCurve f = make_F6(ctx, {0, singleton(p)}, {0, singleton(q)}, {a, A}, {ctx.g - a, B});
        bool dup = false;
        for (const auto& h : f6) dup = dup || h == f;
        if (!dup) f6.push_back(f);
      }
      if (A == 0) break;
      A = (A - 1) & R;
    }
  }
  std::sort(f6.begin(), f6.end());
  k.curves.insert(k.curves.end(), f6.begin(), f6.end());
  return k;
}

FImage f_image(const DivisorClass& d, const KnudsenSet& k) {
  if (d.context() != k.ctx) throw std::invalid_argument("divisor and Knudsen set on different spaces");
  const Context& ctx = k.ctx;
  FImage out;
  if (ctx.n == 2) {
    out.by_curve = true;
    for (const auto& f : k.curves) {
      out.labels.push_back(render(f));
      out.coords.push_back(intersect(d, f));
      out.defined.push_back(true);
    }
    return out;
  }
  const int top = ctx.g / 2;
  out.coords.assign(top + 1, 0);
  out.defined.assign(top + 1, true);
  if (ctx.g % 2 == 0 && ctx.n % 2 == 1) out.defined[top] = false;
  for (int a = 0; a <= top; ++a) out.labels.push_back("e_" + std::to_string(a));
  const MarkSet spine = singleton(k.p) | singleton(k.q);
  for (const auto& f : k.curves) {
    if (f.type() != 6) continue;
    // legs other than the two spine markings
    std::vector<Group> legs;
    for (const auto& gr : f.groups()) {
      if (!(gr.genus == 0 && (gr.marks == singleton(k.p) || gr.marks == singleton(k.q)))) {
        legs.push_back(gr);
      }
    }
    if (legs.size() != 2 || (legs[0].marks | legs[1].marks) != (ctx.all() & ~spine)) {
      throw std::logic_error("unexpected Knudsen curve " + render(f));
    }
    const Group& low = legs[0].genus <= legs[1].genus ? legs[0] : legs[1];
    const int a = low.genus;
    if (!out.defined[a]) continue;
    Rational v = intersect(d, f);
    out.coords[a] += cardinality(low.marks) % 2 == 0 ? v : Rational(-v);
  }
  return out;
}

std::string render(const FImage& f) {
  std::string out;
  for (std::size_t k = 0; k < f.coords.size(); ++k) {
    if (!f.defined[k] || f.coords[k].is_zero()) continue;
    Rational c = f.coords[k];
    bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (c != 1) out += to_display_string(c) + " ";
    out += f.labels[k];
  }
  return out.empty() ? "0" : out;
}

std::map<std::string, Rational> parse_image_expression(std::string_view text) {
  std::map<std::string, Rational> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  int sign = 1;
  std::optional<Rational> coeff;
  bool expecting_term = true;
  while (in >> tok) {
    if (tok == "+" || tok == "-") {
      if (expecting_term && !out.empty()) throw std::invalid_argument("two operators in a row");
      sign = tok == "-" ? -1 : 1;
      expecting_term = true;
      continue;
    }
    if (tok == "0" && out.empty() && !coeff) continue;
    if (tok.rfind("e_", 0) == 0 || tok.rfind("F", 0) == 0) {
      if (!expecting_term) throw std::invalid_argument("missing operator before " + tok);
      out[tok] += sign * coeff.value_or(Rational(1));
      coeff.reset();
      sign = 1;
      expecting_term = false;
      continue;
    }
    if (coeff || !expecting_term) throw std::invalid_argument("unexpected token " + tok);
    coeff = parse_rational(tok);
  }
  if (coeff) throw std::invalid_argument("coefficient without label");
  return out;
}

FIdentityCheck check_f_identity(const FIdentity& id) {
  FIdentityCheck r;
  try {
    DivisorClass d = parse_divisor(id.ctx, id.divisor);
    FImage im = f_image(d, knudsen_set(id.ctx, id.p, id.q));
    r.got = render(im);
    auto expected = parse_image_expression(id.expected);
    for (const auto& [label, c] : expected)
      if (std::find(im.labels.begin(), im.labels.end(), label) == im.labels.end())
        throw std::invalid_argument("no coordinate " + label);
    r.pass = true;
    for (std::size_t k = 0; k < im.labels.size(); ++k) {
      if (!im.defined[k]) continue;
      auto it = expected.find(im.labels[k]);
      Rational want = it == expected.end() ? Rational(0) : it->second;
      if (want != im.coords[k]) {
        r.pass = false;
        r.detail += (r.detail.empty() ? "" : "; ") + im.labels[k] + ": expected " + to_display_string(want) +
                    ", got " + to_display_string(im.coords[k]);
      }
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

std::vector<FIdentity> load_f_identities(const std::filesystem::path& tsv) {
  std::ifstream in(tsv);
  if (!in) throw std::runtime_error("cannot open " + tsv.string());
  std::vector<FIdentity> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    if (lineno == 1 && !cells.empty() && cells[0] == "id") continue;
    if (cells.size() != 10) throw std::runtime_error(tsv.string() + ":" + std::to_string(lineno) + ": expected 10 columns");
    FIdentity id;
    id.id = cells[0];
    id.ctx = Context{std::stoi(cells[1]), std::stoi(cells[2])};
    id.p = std::stoi(cells[3]);
    id.q = std::stoi(cells[4]);
    id.divisor = cells[5];
    id.expected = cells[6];
    id.predicate = cells[7];
    id.printed = cells[8];
    id.claim = cells[9];
    out.push_back(std::move(id));
  }
  return out;
}

std::filesystem::path default_f_identity_file() { return std::filesystem::path(FCONE_DATA_DIR) / "f_identities.tsv"; }

}  // namespace fcone
