#include "doctest.h"
#include "fcone/pairing.hpp"

#include <filesystem>
#include <fstream>
#include <random>

using namespace fcone;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("fcone_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("kappa pairs to one with every F-curve") {
  for (int g = 0; g <= 4; ++g)
    for (int n = 0; n <= 5; ++n) {
      Context ctx{g, n};
      if (!ctx.valid() || ctx.dimension() > 8) continue;
      DivisorClass k = kappa(ctx);
      for (const auto& f : enumerate_fcurves(ctx)) CHECK_MESSAGE(intersect(k, f) == 1, render(f));
    }
}

TEST_CASE("lambda is one on the elliptic tail and zero elsewhere") {
  for (int g = 1; g <= 4; ++g)
    for (int n = 0; n <= 3; ++n) {
      Context ctx{g, n};
      if (!ctx.valid()) continue;
      DivisorClass l = lambda_class(ctx);
      for (const auto& f : enumerate_fcurves(ctx)) CHECK(intersect(l, f) == (f.is_elliptic() ? 1 : 0));
    }
}

TEST_CASE("elliptic tail against delta_irr and the genus one boundary") {
  Context ctx{3, 1};
  auto f = make_F1(ctx);
  CHECK(intersect(delta_irr_class(ctx), f) == 12);
  CHECK(intersect(boundary_class(ctx, 1, 0), f) == -1);
  CHECK(intersect(psi_class(ctx, 1), f) == 0);
}

TEST_CASE("type 3 and type 5 against random divisors in the printed coefficient form") {
  // D = a lambda - b_irr delta_irr - sum b_{i,I} delta_{i,I}:
  //   D.F3[1]([n]) = b_{1,[n]},  D.F5[1,i]([n],{}) = b_{i,{}} + b_{1,[n]} - b_{i+1,[n]}
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int g = 3; g <= 5; ++g)
    for (int n = 1; n <= 2; ++n) {
      Context ctx{g, n};
      MarkSet all = ctx.all();
      for (int trial = 0; trial < 20; ++trial) {
        DivisorClass d = num(rng) * lambda_class(ctx) - Rational(num(rng)) * delta_irr_class(ctx);
        std::map<std::pair<int, MarkSet>, Rational> b;
        for (int a = 0; a <= g; ++a)
          for (MarkSet s = 0; s <= all; ++s)
            if (is_canonical_boundary(ctx, a, s)) {
              Rational c = num(rng);
              b[{a, s}] = c;
              d -= c * boundary_class(ctx, a, s);
            }
        auto coeff = [&](int a, MarkSet s) -> Rational {
          auto sym = canonical_boundary(ctx, a, s);
          for (const auto& [key, c] : b)
            if (canonical_boundary(ctx, key.first, key.second).symbol == sym.symbol) return c * sym.sign;
          return Rational(0);
        };
        CHECK(intersect(d, make_F3(ctx, 1, all)) == coeff(1, all));
        for (int i = 1; i <= g - 2; ++i)
          CHECK(intersect(d, make_F5(ctx, 1, i, all, 0)) == coeff(i, 0) + coeff(1, all) - coeff(i + 1, all));
      }
    }
}

TEST_CASE("curve vectors agree with the divisor pairing") {
  Context ctx{2, 2};
  for (const auto& f : enumerate_fcurves(ctx)) {
    auto v = curve_vector(f);
    DivisorClass k = kappa(ctx);
    CHECK(intersect(k, v) == intersect(k, f));
    for (const auto& [s, x] : v) CHECK(x != 0);
  }
}

TEST_CASE("pairing matrix shape") {
  Context ctx{1, 2};
  auto m = pairing_matrix(ctx);
  CHECK(m.generators.size() == generating_set(ctx).size());
  CHECK(m.entries.size() == m.generators.size());
  for (const auto& row : m.entries) CHECK(row.size() == m.curves.size());
}

TEST_CASE("cache round trip") {
  Context ctx{2, 1};
  auto m = pairing_matrix(ctx);
  auto back = from_cache_json(ctx, to_cache_json(m));
  CHECK(back.curves == m.curves);
  CHECK(back.generators == m.generators);
  CHECK(back.entries == m.entries);
  CHECK_THROWS(from_cache_json(Context{2, 2}, to_cache_json(m)));
  CHECK_THROWS(from_cache_json(ctx, "{"));
}

TEST_CASE("disk cache is written, reused and repaired") {
  Context ctx{1, 3};
  auto dir = fresh_dir("pairing");
  std::string warning;
  auto first = cached_pairing_matrix(ctx, dir, &warning);
  CHECK(warning.empty());
  REQUIRE(std::filesystem::exists(cache_file(dir, ctx)));
  auto second = cached_pairing_matrix(ctx, dir, &warning);
  CHECK(second.entries == first.entries);
  CHECK(warning.empty());
  {
    std::ofstream out(cache_file(dir, ctx), std::ios::trunc);
    out << "{\"format_version\": 1, \"g\": 1";
  }
  auto third = cached_pairing_matrix(ctx, dir, &warning);
  CHECK_FALSE(warning.empty());
  CHECK(third.entries == first.entries);
  warning.clear();
  cached_pairing_matrix(ctx, dir, &warning);
  CHECK(warning.empty());
  std::filesystem::remove_all(dir);
}
