#include "fcone/kappa_knudsen.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace fcone {

namespace {

std::string set_param(const char* name, MarkSet s) { return std::string(name) + "=" + render_set(s); }

std::vector<MarkSet> all_subsets(MarkSet universe) {
  std::vector<MarkSet> out;
  MarkSet s = universe;
  while (true) {
    out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & universe;
  }
  std::sort(out.begin(), out.end(), [](MarkSet a, MarkSet b) { return compare_sets(a, b) < 0; });
  return out;
}

DivisorClass kappa_plus(const Context& ctx, std::initializer_list<std::tuple<Rational, int, MarkSet>> terms) {
  DivisorClass d = kappa(ctx);
  for (const auto& [c, a, s] : terms) d.add_boundary(a, s, c);
  return d;
}

/// C_n = { F3[1]([n]), F5[1,i]([n],{}) : 1 <= i <= g-2 }.
std::vector<FCurve> f31_family(const Context& ctx) {
  std::vector<FCurve> out{make_F3(ctx, 1, ctx.all())};
  for (int i = 1; i <= ctx.g - 2; ++i) out.push_back(make_F5(ctx, 1, i, ctx.all(), 0));
  return out;
}

/// F5[i,j](I,J) over nonempty I disjoint from the fixed J (I may be empty when i > 0).
std::vector<FCurve> f5_with_fixed_leg(const Context& ctx, int i, int j, MarkSet J) {
  std::vector<FCurve> out;
  for (MarkSet I : all_subsets(ctx.all() & ~J)) {
    if (i == 0 && I == 0) continue;
    if (j == 0 && J == 0) continue;
    out.push_back(make_F5(ctx, i, j, I, J));
  }
  return out;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> e;

  e.push_back({"kappa", "kappa pairs to 1 with every F-curve", "g>=0", "n>=0", "none",
               [](const Context&) { return true; },
               [](const Context& ctx) {
                 return std::vector<CatalogInstance>{{"kappa", "", kappa(ctx), {}}};
               }});

  e.push_back({"genus2_D", "nef on genus 2, contracts the type-3 curve carrying all markings", "g=2", "n>=2", "none",
               [](const Context& ctx) { return ctx.g == 2 && ctx.n >= 2; },
               [](const Context& ctx) {
                 CatalogInstance c{"genus2_D", "", kappa_plus(ctx, {{1, 1, 0}, {1, 2, 0}}), {}};
                 c.contracts.push_back(make_F3(ctx, 0, ctx.all()));
                 for (MarkSet I : all_subsets(ctx.all())) {
                   if (I != 0) c.contracts.push_back(make_F5(ctx, 0, 1, I, 0));
                 }
                 return std::vector<CatalogInstance>{c};
               }});

  e.push_back({"genus3_D", "nef on genus 3, contracts F3[1]([n])", "g=3", "n>=2", "none",
               [](const Context& ctx) { return ctx.g == 3 && ctx.n >= 2; },
               [](const Context& ctx) {
                 return std::vector<CatalogInstance>{
                     {"genus3_D", "", kappa_plus(ctx, {{1, 2, 0}}), {make_F3(ctx, 1, ctx.all())}}};
               }});

  e.push_back({"top_tail", "nef on (g,1), contracts F3[1]({1}) and its companions F5[1,i]({1},{})", "g>=3", "n=1", "none",
               [](const Context& ctx) { return ctx.g >= 3 && ctx.n == 1; },
               [](const Context& ctx) {
                 return std::vector<CatalogInstance>{
                     {"top_tail", "", kappa_plus(ctx, {{1, ctx.g - 1, 0}}), f31_family(ctx)}};
               }});

  e.push_back({"quarter", "nef on (g,1), contracts F3[1]({1}) and its companions F5[1,i]({1},{})", "g>=3", "n=1", "1<=i<=floor((g-1)/2)",
               [](const Context& ctx) { return ctx.g >= 3 && ctx.n == 1; },
               [](const Context& ctx) {
                 std::vector<CatalogInstance> out;
                 for (int i = 1; i <= (ctx.g - 1) / 2; ++i) {
                   Rational q(1, 4);
                   out.push_back({"quarter", "i=" + std::to_string(i),
                                  kappa_plus(ctx, {{1, 1, singleton(1)}, {q, i, 0}, {q, ctx.g - 1 - i, 0}}),
                                  f31_family(ctx)});
                 }
                 return out;
               }});

  e.push_back({"all_markings_tail", "nef, contracts F3[1]([n]) and its companions F5[1,i]([n],{})", "g>=3", "n>=1", "none",
               [](const Context& ctx) { return ctx.g >= 3 && ctx.n >= 1; },
               [](const Context& ctx) {
                 return std::vector<CatalogInstance>{
                     {"all_markings_tail", "", kappa_plus(ctx, {{1, 1, ctx.all()}}), f31_family(ctx)}};
               }});

  e.push_back({"all_markings_tail_plus", "nef, contracts F3[1]([n]) and its companions F5[1,i]([n],{})", "g>=4", "n>=2", "2<=i<=floor(g/2)",
               [](const Context& ctx) { return ctx.g >= 4 && ctx.n >= 2; },
               [](const Context& ctx) {
                 std::vector<CatalogInstance> out;
                 for (int i = 2; i <= ctx.g / 2; ++i) {
                   out.push_back({"all_markings_tail_plus", "i=" + std::to_string(i),
                                  kappa_plus(ctx, {{1, 1, ctx.all()}, {1, i, singleton(1)}}), f31_family(ctx)});
                 }
                 return out;
               }});

  e.push_back({"genus3_thirds", "nef on genus 3, contracts F5[1,1]({},{})", "g=3", "n>=0", "none",
               [](const Context& ctx) { return ctx.g == 3; },
               [](const Context& ctx) {
                 return std::vector<CatalogInstance>{
                     {"genus3_thirds", "", kappa_plus(ctx, {{Rational(2, 3), 1, 0}, {Rational(1, 3), 2, 0}}),
                      {make_F5(ctx, 1, 1, 0, 0)}}};
               }});

  e.push_back({"genus4_even", "nef on genus 4, contracts F5[0,2](I,{})", "g=4", "n>=2", "none",
               [](const Context& ctx) { return ctx.g == 4 && ctx.n >= 2; },
               [](const Context& ctx) {
                 CatalogInstance c{"genus4_even", "", kappa_plus(ctx, {{1, 2, 0}, {1, 4, 0}}), {}};
                 for (MarkSet I : all_subsets(ctx.all())) {
                   if (I != 0 && I != ctx.all()) c.contracts.push_back(make_F5(ctx, 0, 2, I, 0));
                 }
                 return std::vector<CatalogInstance>{c};
               }});

  e.push_back({"genus4_halves", "nef on genus 4, contracts F5[1,2]({},{})", "g=4", "n>=1", "none",
               [](const Context& ctx) { return ctx.g == 4 && ctx.n >= 1; },
               [](const Context& ctx) {
                 return std::vector<CatalogInstance>{
                     {"genus4_halves", "", kappa_plus(ctx, {{Rational(1, 2), 1, 0}, {Rational(1, 2), 2, 0}}),
                      {make_F5(ctx, 2, 1, 0, 0)}}};
               }});

  e.push_back({"genus4_psi", "nef on genus 4, contracts F5[0,2](I,{})", "g=4", "n>=2", "1<=i<=n",
               [](const Context& ctx) { return ctx.g == 4 && ctx.n >= 2; },
               [](const Context& ctx) {
                 std::vector<CatalogInstance> out;
                 Rational h(1, 2);
                 for (int i = 1; i <= ctx.n; ++i) {
                   DivisorClass d = kappa_plus(ctx, {{h, 2, 0}, {h, 4, 0}, {h, 1, singleton(i)}});
                   d += Rational(-1, 2) * psi_class(ctx, i);
                   out.push_back({"genus4_psi", "i=" + std::to_string(i), d,
                                  {make_F5(ctx, 0, 2, singleton(i), 0)}});
                 }
                 return out;
               }});

  e.push_back({"genus4_sum", "nef on genus 4, contracts F5[0,3](I,{})", "g=4", "n>=2", "none",
               [](const Context& ctx) { return ctx.g == 4 && ctx.n >= 2; },
               [](const Context& ctx) {
                 CatalogInstance c{"genus4_sum", "", kappa_plus(ctx, {{1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {1, 4, 0}}), {}};
                 for (MarkSet I : all_subsets(ctx.all())) {
                   if (I != 0) c.contracts.push_back(make_F5(ctx, 0, 3, I, 0));
                 }
                 return std::vector<CatalogInstance>{c};
               }});

  for (int a = 1; a <= 3; ++a) {
    std::string name = "kappa_delta" + std::to_string(a) + "J";
    e.push_back({name, "nef, contracts F5[0,a](I,J) for the fixed J",
                 "g>=" + std::to_string(a + 1), "n>=1", "J subset of [n], J nonempty unless a=g-1",
                 [a](const Context& ctx) { return ctx.g >= a + 1 && ctx.n >= 1; },
                 [a, name](const Context& ctx) {
                   std::vector<CatalogInstance> out;
                   for (MarkSet J : all_subsets(ctx.all())) {
                     // the empty J only for the top genus a = g-1
                     if (J == ctx.all() || (J == 0 && (a != ctx.g - 1 || ctx.g < 3))) continue;
                     out.push_back({name, set_param("J", J), kappa_plus(ctx, {{1, a, J}}),
                                    f5_with_fixed_leg(ctx, 0, a, J)});
                   }
                   return out;
                 }});
  }

  e.push_back({"kappa_delta0J", "nef, contracts F5[0,0](I,J) for the fixed pair part", "g>=1", "n>=3", "J subset of [n], 2<=|J|<n",
               [](const Context& ctx) { return ctx.g >= 1 && ctx.n >= 3; },
               [](const Context& ctx) {
                 std::vector<CatalogInstance> out;
                 for (MarkSet J : all_subsets(ctx.all())) {
                   if (cardinality(J) < 2 || J == ctx.all()) continue;
                   out.push_back({"kappa_delta0J", set_param("J", J), kappa_plus(ctx, {{1, 0, J}}),
                                  f5_with_fixed_leg(ctx, 0, 0, J)});
                 }
                 return out;
               }});

  e.push_back({"three_point", "nef on (g,3), contracts F5[0,0]({p},{q,r}) and F6[0,0,i,g-i]({p},{q,r},{},{})", "g>=3", "n=3", "{p,q,r}=[3], 0<j<g/2",
               [](const Context& ctx) { return ctx.g >= 3 && ctx.n == 3; },
               [](const Context& ctx) {
                 std::vector<CatalogInstance> out;
                 for (int p = 1; p <= 3; ++p) {
                   MarkSet qr = ctx.all() & ~singleton(p);
                   for (int j = 1; 2 * j < ctx.g; ++j) {
                     CatalogInstance c{"three_point", "p=" + std::to_string(p) + ",j=" + std::to_string(j),
                                       kappa_plus(ctx, {{1, 0, qr}, {1, j, singleton(p)}, {1, ctx.g - j, 0}}),
                                       {make_F5(ctx, 0, 0, singleton(p), qr)}};
                     for (int i = 1; 2 * i <= ctx.g; ++i) {
                       c.contracts.push_back(make_F6(ctx, {0, singleton(p)}, {0, qr}, {i, 0}, {ctx.g - i, 0}));
                     }
                     out.push_back(std::move(c));
                   }
                 }
                 return out;
               }});

  e.push_back({"many_point", "nef, contracts F5[0,0](I,J) for the fixed pair part", "g>=2", "n>=4", "p,q,r distinct, 1<=j<=g/2",
               [](const Context& ctx) { return ctx.g >= 2 && ctx.n >= 4; },
               [](const Context& ctx) {
                 std::vector<CatalogInstance> out;
                 for (int p = 1; p <= ctx.n; ++p) {
                   for (int q = 1; q <= ctx.n; ++q) {
                     for (int r = q + 1; r <= ctx.n; ++r) {
                       if (p == q || p == r) continue;
                       MarkSet qr = singleton(q) | singleton(r);
                       MarkSet rest = ctx.all() & ~(qr | singleton(p));
                       for (int j = 1; 2 * j <= ctx.g; ++j) {
                         out.push_back({"many_point",
                                        "p=" + std::to_string(p) + ",q=" + std::to_string(q) + ",r=" +
                                            std::to_string(r) + ",j=" + std::to_string(j),
                                        kappa_plus(ctx, {{1, 0, qr}, {1, j, singleton(p)}, {1, ctx.g - j, rest}}),
                                        {make_F5(ctx, 0, 0, singleton(p), qr)}});
                       }
                     }
                   }
                 }
                 return out;
               }});

  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

std::vector<CatalogInstance> catalog(const Context& ctx) {
  ctx.require_valid();
  std::vector<CatalogInstance> out;
  for (const auto& e : catalog_entries()) {
    if (!e.applies(ctx)) continue;
    for (auto& inst : e.instances(ctx)) out.push_back(std::move(inst));
  }
  return out;
}

std::string catalog_json(const Context& ctx) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : catalog_entries()) {
    if (!e.applies(ctx)) continue;
    for (const auto& inst : e.instances(ctx)) {
      nlohmann::ordered_json j;
      j["name"] = inst.name;
      j["g_range"] = e.g_range;
      j["n_range"] = e.n_range;
      j["parameters"] = inst.parameters.empty() ? e.parameters : inst.parameters;
      j["divisor_expression"] = render(inst.divisor);
      auto contracts = nlohmann::ordered_json::array();
      for (const auto& f : inst.contracts) contracts.push_back(render(f));
      j["contracts"] = std::move(contracts);
      arr.push_back(std::move(j));
    }
  }
  return arr.dump(2);
}

}  // namespace fcone
