#include "doctest.h"
#include "fcone/classes.hpp"

#include <random>
#include <set>
#include <utility>

using namespace fcone;

namespace {

// Unordered pairs {(a,I),(g-a,I^c)} with both sides stable, counted directly.
std::size_t boundary_count(const Context& ctx) {
  std::set<std::pair<std::pair<int, MarkSet>, std::pair<int, MarkSet>>> seen;
  for (int a = 0; a <= ctx.g; ++a)
    for (MarkSet s = 0; s <= ctx.all(); ++s) {
      MarkSet c = ctx.all() & ~s;
      bool ok1 = a > 0 || cardinality(s) >= 2;
      bool ok2 = ctx.g - a > 0 || cardinality(c) >= 2;
      if (!ok1 || !ok2) continue;
      auto x = std::make_pair(a, s), y = std::make_pair(ctx.g - a, c);
      seen.insert(x < y ? std::make_pair(x, y) : std::make_pair(y, x));
    }
  return seen.size();
}

DivisorClass random_divisor(const Context& ctx, std::mt19937& rng) {
  auto gens = generating_set(ctx);
  std::uniform_int_distribution<int> coin(0, 2), num(-9, 9), den(1, 4);
  DivisorClass d(ctx);
  for (const auto& s : gens)
    if (coin(rng) == 0) d.add_term(s, Rational(num(rng), den(rng)));
  return d;
}

}  // namespace

TEST_CASE("generating set has lambda, psi, delta_irr and one symbol per boundary divisor") {
  for (int g = 0; g <= 4; ++g)
    for (int n = 0; n <= 5; ++n) {
      Context ctx{g, n};
      if (!ctx.valid()) continue;
      std::size_t extra = (g >= 1 ? 2 : 0) + static_cast<std::size_t>(n);
      CHECK_MESSAGE(generating_set(ctx).size() == extra + boundary_count(ctx), to_string(ctx));
    }
}

TEST_CASE("boundary canonical forms") {
  Context ctx{3, 2};
  auto a = canonical_boundary(ctx, 2, 0b01);
  auto b = canonical_boundary(ctx, 1, 0b10);
  CHECK(a.symbol == b.symbol);
  CHECK(a.sign == 1);
  auto psi = canonical_boundary(ctx, 0, 0b01);
  CHECK(psi.symbol == BasisSymbol::psi(1));
  CHECK(psi.sign == -1);
  CHECK_THROWS_AS(canonical_boundary(ctx, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(canonical_boundary(ctx, 4, 0), std::invalid_argument);
  CHECK(is_canonical_boundary(ctx, 1, 0));
  CHECK_FALSE(is_canonical_boundary(ctx, 2, 0b11));
}

TEST_CASE("middle genus boundary picks the smaller marking set") {
  Context ctx{2, 2};
  auto a = canonical_boundary(ctx, 1, 0b01);
  auto b = canonical_boundary(ctx, 1, 0b10);
  CHECK(a.symbol == b.symbol);
  CHECK(a.symbol.set == 0b01);
}

TEST_CASE("kappa expands as 12 lambda - delta + psi") {
  Context ctx{2, 1};
  DivisorClass k = kappa(ctx);
  CHECK(k.coeff(BasisSymbol::lambda()) == 12);
  CHECK(k.coeff(BasisSymbol::psi(1)) == 1);
  CHECK(k.coeff(BasisSymbol::delta_irr()) == -1);
  CHECK(k.coeff(BasisSymbol::boundary(1, 0)) == -1);
}

TEST_CASE("parser handles coefficients and signs") {
  Context ctx{3, 2};
  auto d = parse_divisor(ctx, "2 lambda - 1/2 psi_1 + (3/4) delta[1,{2}] - delta_irr");
  CHECK(d.coeff(BasisSymbol::lambda()) == 2);
  CHECK(d.coeff(BasisSymbol::psi(1)) == Rational(-1, 2));
  CHECK(d.coeff(BasisSymbol::boundary(1, 0b10)) == Rational(3, 4));
  CHECK(d.coeff(BasisSymbol::delta_irr()) == -1);
  CHECK(parse_divisor(ctx, "delta[0,{1}]") == -1 * psi_class(ctx, 1));
  CHECK(parse_divisor(ctx, "delta[2,{1}]") == boundary_class(ctx, 1, 0b10));
  CHECK(parse_divisor(ctx, "psi_1 - psi_1").is_zero());
}

TEST_CASE("parser errors carry a position") {
  Context ctx{2, 1};
  CHECK_THROWS_AS(parse_divisor(ctx, "psi_2"), ParseError);
  CHECK_THROWS_AS(parse_divisor(ctx, "delta[1,{1}"), ParseError);
  CHECK_THROWS_AS(parse_divisor(ctx, "lambda +"), ParseError);
  CHECK_THROWS_AS(parse_divisor(ctx, "omega"), ParseError);
}

TEST_CASE("property: render then parse is the identity") {
  std::mt19937 rng(5);
  for (int g = 0; g <= 3; ++g)
    for (int n = 0; n <= 4; ++n) {
      Context ctx{g, n};
      if (!ctx.valid()) continue;
      for (int k = 0; k < 20; ++k) {
        DivisorClass d = random_divisor(ctx, rng);
        CHECK(parse_divisor(ctx, render(d)) == d);
      }
    }
}

TEST_CASE("arithmetic is linear and context checked") {
  Context ctx{2, 2};
  DivisorClass a = lambda_class(ctx), b = psi_class(ctx, 2);
  CHECK((a + b) - b == a);
  CHECK(Rational(3) * a == a + a + a);
  DivisorClass other = lambda_class(Context{2, 1});
  CHECK_THROWS(a += other);
}

TEST_CASE("pullback of tautological classes") {
  Context ctx{2, 1};
  CHECK(pullback_forget(lambda_class(ctx), 2) == lambda_class(Context{2, 2}));
  CHECK(pullback_forget(delta_irr_class(ctx), 1) == delta_irr_class(Context{2, 2}));
  // psi_1 pulls back to psi_1 - delta_{0,{1,2}} when marking 2 is forgotten
  Context up{2, 2};
  CHECK(pullback_forget(psi_class(ctx, 1), 2) == psi_class(up, 1) - boundary_class(up, 0, 0b11));
  // forgetting marking 1 renumbers the old marking to 2
  CHECK(pullback_forget(psi_class(ctx, 1), 1) == psi_class(up, 2) - boundary_class(up, 0, 0b11));
}

TEST_CASE("pullback of a boundary divisor splits over the new marking") {
  Context ctx{3, 1};
  Context up{3, 2};
  DivisorClass d = boundary_class(ctx, 1, 0);
  CHECK(pullback_forget(d, 2) == boundary_class(up, 1, 0) + boundary_class(up, 1, 0b10));
}
