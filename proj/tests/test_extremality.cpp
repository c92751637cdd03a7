#include "doctest.h"
#include "fcone/extremality.hpp"

#include <filesystem>
#include <random>

using namespace fcone;

namespace {

std::shared_ptr<const FConeSpace> space(int g, int n) { return FConeSpace::build(Context{g, n}); }

}  // namespace

TEST_CASE("coordinates reproduce every pairing") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> num(-4, 4);
  for (auto [g, n] : {std::pair{1, 3}, {2, 2}, {3, 1}}) {
    auto s = space(g, n);
    for (int trial = 0; trial < 10; ++trial) {
      DivisorClass d(s->context());
      for (const auto& sym : generating_set(s->context())) d.add_term(sym, num(rng));
      auto y = s->divisor_coordinates(d);
      for (const auto& c : s->curves()) CHECK(dot(y, s->coordinates(c)) == intersect(d, c));
      auto back = s->divisor_from_coordinates(y);
      for (const auto& c : s->curves()) CHECK(intersect(back, c) == intersect(d, c));
    }
  }
}

TEST_CASE("rank of small spaces") {
  CHECK(space(0, 4)->rank() == 1);
  CHECK(space(0, 5)->rank() == 5);
  CHECK(space(2, 0)->rank() == 2);
  CHECK(space(3, 0)->rank() == 3);
}

TEST_CASE("F-nef test with witnesses") {
  auto s = space(2, 2);
  const Context& ctx = s->context();
  CHECK(is_fnef(*s, kappa(ctx)).nef);
  CHECK(is_fnef(*s, lambda_class(ctx)).nef);
  auto r = is_fnef(*s, Rational(-1) * kappa(ctx));
  CHECK_FALSE(r.nef);
  REQUIRE(r.witness.has_value());
  CHECK(r.value == -1);
}

TEST_CASE("F2 on genus 3 decomposes as half F3 plus half F4") {
  auto s = space(3, 0);
  auto rep = regular_extremal_report(*s, make_F2(s->context()));
  CHECK_FALSE(rep.extremal);
  RationalVector sum(s->rank(), 0);
  for (const auto& t : rep.decomposition) {
    CHECK(t.coeff > 0);
    auto v = s->coordinates(t.curve);
    for (std::size_t j = 0; j < v.size(); ++j) sum[j] += t.coeff * v[j];
  }
  CHECK(sum == s->coordinates(make_F2(s->context())));
}

TEST_CASE("regular extremal report carries a sound certificate") {
  auto s = space(2, 1);
  auto f = make_F3(s->context(), 0, 0b1);
  auto rep = regular_extremal_report(*s, f);
  CHECK(rep.extremal);
  CHECK(rep.regular);
  CHECK(rep.index == 1);
  CHECK(rep.certificate.size() + 1 == s->rank());
  std::vector<RationalVector> rows;
  for (const auto& d : rep.certificate) {
    CHECK(is_fnef(*s, d).nef);
    CHECK(intersect(d, f) == 0);
    rows.push_back(s->divisor_coordinates(d));
  }
  CHECK(rank(rows, s->rank()) == rep.certificate.size());
  CHECK_FALSE(rep.conditional);
}

TEST_CASE("index of F3[1]([n]) is floor(g/2)") {
  CHECK(index_of_extremality(*space(3, 1), make_F3(Context{3, 1}, 1, 0b1)) == 1);
  CHECK(index_of_extremality(*space(4, 1), make_F3(Context{4, 1}, 1, 0b1)) == 2);
}

TEST_CASE("implication by LP maximum") {
  auto s = space(4, 1);
  const Context& ctx = s->context();
  auto c = make_F3(ctx, 1, 0b1);
  for (int i = 1; i <= 2; ++i) {
    CHECK(implication_value(*s, c, make_F5(ctx, 1, i, 0b1, 0)) == 0);
    CHECK(implication_check(*s, c, make_F5(ctx, 1, i, 0b1, 0)));
  }
  CHECK(implication_value(*s, c, make_F1(ctx)) > 0);
}

TEST_CASE("contracting face basis and projection") {
  auto s = space(3, 1);
  const Context& ctx = s->context();
  auto c = make_F3(ctx, 1, 0b1);
  auto basis = contracting_face_basis(*s, {c});
  CHECK(basis.size() + index_of_extremality(*s, c) == s->rank());
  for (const auto& d : basis) {
    CHECK(is_fnef(*s, d).nef);
    CHECK(intersect(d, c) == 0);
  }
  auto m = nspan_projection(*s, {c}, {c, make_F1(ctx)});
  CHECK(m.rows() == basis.size());
  CHECK(m.cols() == 2);
  for (std::size_t r = 0; r < m.rows(); ++r) CHECK(m(r, 0) == 0);
}

TEST_CASE("budget and verified range") {
  CHECK_THROWS_AS(check_budget(Context{6, 6}, kMaxCurvesInBudget + 1, 10, false), BudgetExceeded);
  CHECK_THROWS_AS(check_budget(Context{6, 6}, 10, kMaxRankInBudget + 1, false), BudgetExceeded);
  CHECK_NOTHROW(check_budget(Context{6, 6}, kMaxCurvesInBudget + 1, kMaxRankInBudget + 1, true));
  // only the quoted F-conjecture ranges count as verified
  CHECK(in_verified_range(Context{2, 5}));
  CHECK(in_verified_range(Context{4, 3}));
  CHECK_FALSE(in_verified_range(Context{3, 5}));
  CHECK_FALSE(in_verified_range(Context{0, 6}));
}

TEST_CASE("cached build matches a fresh build") {
  auto dir = std::filesystem::temp_directory_path() / "fcone_test_extremality";
  std::filesystem::remove_all(dir);
  Context ctx{2, 2};
  auto a = FConeSpace::build(ctx);
  auto b = FConeSpace::build_cached(ctx, false, dir);
  auto c = FConeSpace::build_cached(ctx, false, dir);
  CHECK(a->classes() == b->classes());
  CHECK(b->classes() == c->classes());
  CHECK(a->basis_rows() == c->basis_rows());
  std::filesystem::remove_all(dir);
}

TEST_CASE("report json is stable without timing") {
  auto s = space(3, 0);
  auto rep = regular_extremal_report(*s, make_F2(s->context()));
  auto a = report_json(rep, false);
  rep.elapsed_ms = 123;
  CHECK(report_json(rep, false) == a);
  CHECK(a.find("elapsed_ms") == std::string::npos);
  CHECK(report_json(rep, true).find("elapsed_ms") != std::string::npos);
}
