#pragma once

#include "fcone/context.hpp"
#include "fcone/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fcone {

enum class SymbolKind : std::uint8_t { Lambda, Psi, DeltaIrr, Boundary };

/// One generator of the tautological divisor group.  For Psi, `index` is the
/// marking; for Boundary, `index` is the genus a of delta[a,set].
struct BasisSymbol {
  SymbolKind kind = SymbolKind::Lambda;
  int index = 0;
  MarkSet set = 0;

  static BasisSymbol lambda() { return {SymbolKind::Lambda, 0, 0}; }
  static BasisSymbol psi(int k) { return {SymbolKind::Psi, k, 0}; }
  static BasisSymbol delta_irr() { return {SymbolKind::DeltaIrr, 0, 0}; }
  static BasisSymbol boundary(int a, MarkSet s) { return {SymbolKind::Boundary, a, s}; }

  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
  friend std::strong_ordering operator<=>(const BasisSymbol& x, const BasisSymbol& y);
};

std::string render(const BasisSymbol& s);

/// A boundary divisor delta[a,I] either is canonical, or equals -psi_k when
/// (a,I) = (0,{k}), or is rewritten via (a,I) ~ (g-a, I^c).
struct SignedSymbol {
  BasisSymbol symbol;
  int sign = 1;
};

/// Throws std::invalid_argument when (a,I) names no boundary divisor.
SignedSymbol canonical_boundary(const Context& ctx, int a, MarkSet set);

bool is_canonical_boundary(const Context& ctx, int a, MarkSet set);

/// Ordered list: lambda (g>=1), psi_1..psi_n, delta_irr (g>=1), canonical
/// boundary divisors sorted by (a, set).
std::vector<BasisSymbol> generating_set(const Context& ctx);

class DivisorClass {
 public:
  explicit DivisorClass(Context ctx) : ctx_(ctx) {}

  const Context& context() const { return ctx_; }
  const std::map<BasisSymbol, Rational>& terms() const { return terms_; }

  Rational coeff(const BasisSymbol& s) const;
  /// Adds c*s; `s` must already be canonical for the context.
  void add_term(const BasisSymbol& s, const Rational& c);
  /// Adds c*delta[a,set], canonicalizing first.
  void add_boundary(int a, MarkSet set, const Rational& c);

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& c);

  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  void require_same_context(const DivisorClass& other) const;

  Context ctx_;
  std::map<BasisSymbol, Rational> terms_;
};

DivisorClass operator+(DivisorClass a, const DivisorClass& b);
DivisorClass operator-(DivisorClass a, const DivisorClass& b);
DivisorClass operator*(const Rational& c, DivisorClass d);

DivisorClass lambda_class(const Context& ctx);
DivisorClass psi_class(const Context& ctx, int k);
DivisorClass delta_irr_class(const Context& ctx);
DivisorClass boundary_class(const Context& ctx, int a, MarkSet set);

/// kappa = 12 lambda - delta_irr - (sum of boundary divisors) + (sum of psi).
DivisorClass kappa(const Context& ctx);

/// Pullback along the map forgetting marking i of (g, n+1).  Markings k >= i
/// of the source context are renumbered k+1.
DivisorClass pullback_forget(const DivisorClass& d, int i);

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

/// Grammar: term (("+"|"-") term)*, term := [coeff] symbol, whitespace-free
/// after stripping.  Symbols: lambda, kappa, delta_irr, psi_k, delta[a,{..}].
DivisorClass parse_divisor(const Context& ctx, std::string_view text);

std::string render(const DivisorClass& d);

}  // namespace fcone
