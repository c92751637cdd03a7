#include "fcone/classes.hpp"

#include <algorithm>
#include <cctype>

namespace fcone {

std::strong_ordering operator<=>(const BasisSymbol& x, const BasisSymbol& y) {
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.index <=> y.index; c != 0) return c;
  return compare_sets(x.set, y.set);
}

std::string render(const BasisSymbol& s) {
  switch (s.kind) {
    case SymbolKind::Lambda: return "lambda";
    case SymbolKind::Psi: return "psi_" + std::to_string(s.index);
    case SymbolKind::DeltaIrr: return "delta_irr";
    case SymbolKind::Boundary:
      return "delta[" + std::to_string(s.index) + "," + render_set(s.set) + "]";
  }
  return "?";
}

namespace {

void check_boundary_label(const Context& ctx, int a, MarkSet set) {
  if (a < 0 || a > ctx.g) {
    throw std::invalid_argument("boundary genus " + std::to_string(a) + " outside [0," +
                                std::to_string(ctx.g) + "]");
  }
  if ((set & ~ctx.all()) != 0) {
    throw std::invalid_argument("boundary set " + render_set(set) + " not contained in [" +
                                std::to_string(ctx.n) + "]");
  }
  MarkSet comp = ctx.all() & ~set;
  if ((a == 0 && set == 0) || (a == ctx.g && comp == 0)) {
    throw std::invalid_argument("delta[" + std::to_string(a) + "," + render_set(set) +
                                "] is not a boundary divisor of " + to_string(ctx));
  }
}

}  // namespace

bool is_canonical_boundary(const Context& ctx, int a, MarkSet set) {
  if (a < 0 || a > ctx.g || (set & ~ctx.all()) != 0) return false;
  MarkSet comp = ctx.all() & ~set;
  int b = ctx.g - a;
  if (a == 0 && cardinality(set) < 2) return false;
  if (b == 0 && cardinality(comp) < 2) return false;
  if (a < b) return true;
  return a == b && compare_sets(set, comp) <= 0;
}

SignedSymbol canonical_boundary(const Context& ctx, int a, MarkSet set) {
  check_boundary_label(ctx, a, set);
  MarkSet comp = ctx.all() & ~set;
  int b = ctx.g - a;
  if (a == 0 && cardinality(set) == 1) return {BasisSymbol::psi(min_element(set)), -1};
  if (b == 0 && cardinality(comp) == 1) return {BasisSymbol::psi(min_element(comp)), -1};
  if (is_canonical_boundary(ctx, a, set)) return {BasisSymbol::boundary(a, set), 1};
  return {BasisSymbol::boundary(b, comp), 1};
}

std::vector<BasisSymbol> generating_set(const Context& ctx) {
  ctx.require_valid();
  std::vector<BasisSymbol> out;
  if (ctx.g >= 1) out.push_back(BasisSymbol::lambda());
  for (int k = 1; k <= ctx.n; ++k) out.push_back(BasisSymbol::psi(k));
  if (ctx.g >= 1) out.push_back(BasisSymbol::delta_irr());
  std::vector<BasisSymbol> bnd;
  for (int a = 0; a <= ctx.g; ++a) {
    for (MarkSet s = 0; s <= ctx.all(); ++s) {
      if (is_canonical_boundary(ctx, a, s)) bnd.push_back(BasisSymbol::boundary(a, s));
      if (s == ctx.all()) break;
    }
  }
  std::sort(bnd.begin(), bnd.end());
  out.insert(out.end(), bnd.begin(), bnd.end());
  return out;
}

Rational DivisorClass::coeff(const BasisSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DivisorClass::add_term(const BasisSymbol& s, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DivisorClass::add_boundary(int a, MarkSet set, const Rational& c) {
  SignedSymbol s = canonical_boundary(ctx_, a, set);
  add_term(s.symbol, s.sign > 0 ? c : Rational(-c));
}

void DivisorClass::require_same_context(const DivisorClass& other) const {
  if (other.ctx_ != ctx_) {
    throw std::invalid_argument("divisor classes live on different spaces " + to_string(ctx_) +
                                " and " + to_string(other.ctx_));
  }
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same_context(other);
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same_context(other);
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
DivisorClass operator*(const Rational& c, DivisorClass d) { return d *= c; }

DivisorClass lambda_class(const Context& ctx) {
  if (ctx.g == 0) throw std::invalid_argument("lambda is not a generator in genus 0");
  DivisorClass d(ctx);
  d.add_term(BasisSymbol::lambda(), 1);
  return d;
}

DivisorClass psi_class(const Context& ctx, int k) {
  if (k < 1 || k > ctx.n) {
    throw std::invalid_argument("psi_" + std::to_string(k) + " out of range for " + to_string(ctx));
  }
  DivisorClass d(ctx);
  d.add_term(BasisSymbol::psi(k), 1);
  return d;
}

DivisorClass delta_irr_class(const Context& ctx) {
  if (ctx.g == 0) throw std::invalid_argument("delta_irr is not a generator in genus 0");
  DivisorClass d(ctx);
  d.add_term(BasisSymbol::delta_irr(), 1);
  return d;
}

DivisorClass boundary_class(const Context& ctx, int a, MarkSet set) {
  DivisorClass d(ctx);
  d.add_boundary(a, set, 1);
  return d;
}

DivisorClass kappa(const Context& ctx) {
  DivisorClass d(ctx);
  for (const auto& s : generating_set(ctx)) {
    switch (s.kind) {
      case SymbolKind::Lambda: d.add_term(s, 12); break;
      case SymbolKind::Psi: d.add_term(s, 1); break;
      case SymbolKind::DeltaIrr: d.add_term(s, -1); break;
      case SymbolKind::Boundary: d.add_term(s, -1); break;
    }
  }
  return d;
}

DivisorClass pullback_forget(const DivisorClass& d, int i) {
  const Context src = d.context();
  const Context dst{src.g, src.n + 1};
  dst.require_valid();
  if (i < 1 || i > dst.n) throw std::invalid_argument("forgotten marking out of range");
  auto lift_index = [i](int k) { return k < i ? k : k + 1; };
  auto lift_set = [&](MarkSet s) {
    MarkSet out = 0;
    for (int k : elements(s)) out |= singleton(lift_index(k));
    return out;
  };
  DivisorClass out(dst);
  for (const auto& [s, c] : d.terms()) {
    switch (s.kind) {
      case SymbolKind::Lambda:
      case SymbolKind::DeltaIrr: out.add_term(s, c); break;
      case SymbolKind::Psi: {
        int k = lift_index(s.index);
        out.add_term(BasisSymbol::psi(k), c);
        out.add_boundary(0, singleton(k) | singleton(i), -c);
        break;
      }
      case SymbolKind::Boundary: {
        MarkSet t = lift_set(s.set);
        out.add_boundary(s.index, t, c);
        // with n = 0 and g = 2a both lifts can be the same divisor
        if (canonical_boundary(dst, s.index, t).symbol != canonical_boundary(dst, s.index, t | singleton(i)).symbol)
          out.add_boundary(s.index, t | singleton(i), c);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class DivisorParser {
 public:
  DivisorParser(const Context& ctx, std::string_view text) : ctx_(ctx) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        origin_.push_back(i);
      }
    }
    origin_.push_back(text.size());
  }

  DivisorClass parse() {
    DivisorClass out(ctx_);
    if (chars_.empty()) fail("empty divisor expression");
    if (chars_ == "0") return out;
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    parse_term(out, sign);
    while (pos_ < chars_.size()) {
      char c = take();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'", pos_ - 1);
      parse_term(out, c == '-' ? -1 : 1);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, origin_[std::min(at, origin_.size() - 1)]);
  }

  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }
  char take() {
    if (pos_ >= chars_.size()) fail("unexpected end of input");
    return chars_[pos_++];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(std::string_view word) {
    if (chars_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(chars_.substr(start, pos_ - start));
  }

  int small_integer() {
    std::size_t start = pos_;
    Integer v = integer();
    if (v > 1000) fail("index too large", start);
    return v.convert_to<int>();
  }

  Rational coefficient() {
    std::size_t start = pos_;
    if (peek() == '(') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      Integer p = integer();
      expect('/');
      Integer q = integer();
      expect(')');
      if (q == 0) fail("zero denominator", start);
      Rational r(p, q);
      return neg ? Rational(-r) : r;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer p = integer();
      if (peek() == '/') {
        ++pos_;
        Integer q = integer();
        if (q == 0) fail("zero denominator", start);
        return Rational(p, q);
      }
      return Rational(p);
    }
    return Rational(1);
  }

  MarkSet set() {
    std::size_t start = pos_;
    expect('{');
    MarkSet s = 0;
    if (peek() != '}') {
      while (true) {
        std::size_t at = pos_;
        int k = small_integer();
        if (k < 1 || k > ctx_.n) fail("marking " + std::to_string(k) + " out of range", at);
        if (contains(s, k)) fail("repeated marking " + std::to_string(k), at);
        s |= singleton(k);
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    if (peek() != '}') fail("expected '}' closing set opened", start);
    ++pos_;
    return s;
  }

  void parse_term(DivisorClass& out, int sign) {
    Rational c = coefficient();
    if (sign < 0) c = -c;
    std::size_t at = pos_;
    try {
      if (accept("lambda")) {
        out += c * lambda_class(ctx_);
      } else if (accept("kappa")) {
        out += c * kappa(ctx_);
      } else if (accept("delta_irr")) {
        out += c * delta_irr_class(ctx_);
      } else if (accept("psi_")) {
        int k = small_integer();
        out += c * psi_class(ctx_, k);
      } else if (accept("delta[")) {
        int a = small_integer();
        expect(',');
        MarkSet s = set();
        expect(']');
        out.add_boundary(a, s, c);
      } else {
        fail("unknown symbol");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(e.what(), at);
    }
  }

  Context ctx_;
  std::string chars_;
  std::vector<std::size_t> origin_;
  std::size_t pos_ = 0;
};

}  // namespace

DivisorClass parse_divisor(const Context& ctx, std::string_view text) {
  ctx.require_valid();
  return DivisorParser(ctx, text).parse();
}

std::string render(const DivisorClass& d) {
  if (d.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : d.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) {
      if (denominator(mag) == 1) {
        out += numerator(mag).str() + " ";
      } else {
        out += "(" + to_display_string(mag) + ") ";
      }
    }
    out += render(s);
  }
  return out;
}

}  // namespace fcone
