#include "fcone/fcurve.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fcone {

std::strong_ordering operator<=>(const Group& x, const Group& y) {
  if (auto c = x.size <=> y.size; c != 0) return c;
  if (auto c = x.genus <=> y.genus; c != 0) return c;
  return compare_sets(x.marks, y.marks);
}

namespace {

int type_of_sizes(const std::vector<Group>& groups) {
  switch (groups.size()) {
    case 1: return 2;
    case 2: return groups[0].size == 1 ? 3 : 4;
    case 3: return 5;
    case 4: return 6;
  }
  return 0;
}

std::string group_label(const Group& gr) {
  return "(" + std::to_string(gr.genus) + "," + render_set(gr.marks) + ")";
}

}  // namespace

int FCurve::type() const { return elliptic_ ? 1 : type_of_sizes(groups_); }

std::strong_ordering operator<=>(const FCurve& x, const FCurve& y) {
  if (auto c = x.ctx_ <=> y.ctx_; c != 0) return c;
  if (auto c = x.type() <=> y.type(); c != 0) return c;
  return std::lexicographical_compare_three_way(x.groups_.begin(), x.groups_.end(),
                                                y.groups_.begin(), y.groups_.end());
}

FCurve FCurve::elliptic(const Context& ctx) {
  ctx.require_valid();
  if (ctx.g < 1) throw std::invalid_argument("F1 needs genus >= 1");
  return FCurve(ctx, true, {});
}

FCurve FCurve::from_groups(const Context& ctx, std::vector<Group> groups) {
  ctx.require_valid();
  int half_edges = 0;
  int genus = 0;
  MarkSet seen = 0;
  for (const auto& gr : groups) {
    if (gr.size < 1 || gr.genus < 0) {
      throw std::invalid_argument("malformed spine group " + group_label(gr));
    }
    if ((gr.marks & ~ctx.all()) != 0) {
      throw std::invalid_argument("markings of " + group_label(gr) + " exceed n=" +
                                  std::to_string(ctx.n));
    }
    if ((gr.marks & seen) != 0) {
      throw std::invalid_argument("marking sets overlap at " + group_label(gr));
    }
    if (gr.size == 1 && gr.genus == 0 && gr.marks == 0) {
      throw std::invalid_argument("unstable tail (0,{}): a genus 0 tail needs a marking");
    }
    seen |= gr.marks;
    half_edges += gr.size;
    genus += gr.genus + gr.size - 1;
  }
  if (half_edges != 4) {
    throw std::invalid_argument("spine needs exactly 4 attaching points, got " +
                                std::to_string(half_edges));
  }
  if (seen != ctx.all()) throw std::invalid_argument("markings do not cover [n]");
  if (genus != ctx.g) {
    throw std::invalid_argument("components sum to genus " + std::to_string(genus) +
                                " but g=" + std::to_string(ctx.g));
  }
  std::sort(groups.begin(), groups.end());
  return FCurve(ctx, false, std::move(groups));
}

FCurve make_F1(const Context& ctx) { return FCurve::elliptic(ctx); }

FCurve make_F2(const Context& ctx) {
  if (ctx.g < 3) throw std::invalid_argument("F2 needs g >= 3");
  return FCurve::from_groups(ctx, {{4, ctx.g - 3, ctx.all()}});
}

FCurve make_F3(const Context& ctx, int i, MarkSet I) {
  if (i < 0 || i > ctx.g - 2) {
    throw std::invalid_argument("F3 index i=" + std::to_string(i) + " violates 0 <= i <= g-2");
  }
  return FCurve::from_groups(ctx, {{1, i, I}, {3, ctx.g - 2 - i, ctx.all() & ~I}});
}

FCurve make_F4(const Context& ctx, int i, MarkSet I) {
  if (i < 1 || i > ctx.g - 1) {
    throw std::invalid_argument("F4 index i=" + std::to_string(i) + " violates 1 <= i <= g-1");
  }
  return FCurve::from_groups(ctx, {{2, i - 1, I}, {2, ctx.g - 1 - i, ctx.all() & ~I}});
}

FCurve make_F5(const Context& ctx, int i, int j, MarkSet I, MarkSet J) {
  if (i < 0 || j < 0 || i + j > ctx.g - 1) {
    throw std::invalid_argument("F5 indices violate i,j >= 0 and i+j <= g-1");
  }
  if ((I & J) != 0) throw std::invalid_argument("F5 marking sets overlap");
  return FCurve::from_groups(ctx,
                             {{1, i, I}, {1, j, J}, {2, ctx.g - 1 - i - j, ctx.all() & ~(I | J)}});
}

FCurve make_F6(const Context& ctx, const Leg& a, const Leg& b, const Leg& c, const Leg& d) {
  return FCurve::from_groups(ctx, {{1, a.genus, a.marks},
                                   {1, b.genus, b.marks},
                                   {1, c.genus, c.marks},
                                   {1, d.genus, d.marks}});
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class Enumerator {
 public:
  Enumerator(const Context& ctx, std::vector<FCurve>& out, std::size_t limit)
      : ctx_(ctx), out_(out), limit_(limit) {}

  void run(const std::vector<int>& sizes) {
    sizes_ = sizes;
    chosen_.clear();
    int min_genus = 0;
    for (int s : sizes_) min_genus += s - 1;
    if (min_genus > ctx_.g) return;
    recurse(0, ctx_.g, ctx_.all());
  }

 private:
  bool ordered_after_previous(const Group& gr) const {
    return chosen_.empty() || !(gr < chosen_.back());
  }

  void recurse(std::size_t slot, int genus_left, MarkSet marks_left) {
    const int s = sizes_[slot];
    if (slot + 1 == sizes_.size()) {
      Group gr{s, genus_left - (s - 1), marks_left};
      if (gr.genus < 0 || (s == 1 && gr.genus == 0 && gr.marks == 0)) return;
      if (!ordered_after_previous(gr)) return;
      chosen_.push_back(gr);
      out_.push_back(FCurve::from_groups(ctx_, chosen_));
      chosen_.pop_back();
      if (out_.size() > limit_)
        throw BudgetExceeded(to_string(ctx_) + " has more than " + std::to_string(limit_) + " F-curves");
      return;
    }
    int reserve = 0;
    for (std::size_t k = slot + 1; k < sizes_.size(); ++k) reserve += sizes_[k] - 1;
    for (int c = 0; c + (s - 1) + reserve <= genus_left; ++c) {
      // every submask of the remaining markings, including the empty set
      MarkSet sub = marks_left;
      while (true) {
        Group gr{s, c, sub};
        if (!(s == 1 && c == 0 && sub == 0) && ordered_after_previous(gr)) {
          chosen_.push_back(gr);
          recurse(slot + 1, genus_left - c - (s - 1), marks_left & ~sub);
          chosen_.pop_back();
        }
        if (sub == 0) break;
        sub = (sub - 1) & marks_left;
      }
    }
  }

  Context ctx_;
  std::vector<FCurve>& out_;
  std::size_t limit_;
  std::vector<int> sizes_;
  std::vector<Group> chosen_;
};

}  // namespace

std::vector<FCurve> enumerate_fcurves(const Context& ctx, std::size_t limit) {
  ctx.require_valid();
  std::vector<FCurve> out;
  if (ctx.g >= 1) out.push_back(FCurve::elliptic(ctx));
  Enumerator e(ctx, out, limit);
  for (const auto& sizes : std::vector<std::vector<int>>{{4}, {1, 3}, {2, 2}, {1, 1, 2}, {1, 1, 1, 1}}) {
    e.run(sizes);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Symmetries and forgetful maps

FCurve act_permutation(const FCurve& f, const std::vector<int>& sigma) {
  const Context& ctx = f.context();
  if (static_cast<int>(sigma.size()) != ctx.n) {
    throw std::invalid_argument("permutation length differs from n");
  }
  MarkSet image = 0;
  for (int v : sigma) {
    if (v < 1 || v > ctx.n || contains(image, v)) throw std::invalid_argument("not a permutation");
    image |= singleton(v);
  }
  if (f.is_elliptic()) return f;
  std::vector<Group> groups = f.groups();
  for (auto& gr : groups) {
    MarkSet m = 0;
    for (int k : elements(gr.marks)) m |= singleton(sigma[k - 1]);
    gr.marks = m;
  }
  return FCurve::from_groups(ctx, std::move(groups));
}

std::optional<FCurve> pushforward_forget(const FCurve& f, int i) {
  const Context& ctx = f.context();
  if (i < 1 || i > ctx.n) throw std::invalid_argument("forgotten marking out of range");
  Context dst{ctx.g, ctx.n - 1};
  if (!dst.valid()) return std::nullopt;
  if (f.is_elliptic()) return FCurve::elliptic(dst);
  auto drop = [i](MarkSet s) {
    MarkSet low = s & (singleton(i) - 1);
    MarkSet high = s >> i;
    return low | (high << (i - 1));
  };
  std::vector<Group> groups;
  for (const auto& gr : f.groups()) {
    if (gr.size == 1 && gr.genus == 0 && gr.marks == singleton(i)) return std::nullopt;
    groups.push_back({gr.size, gr.genus, drop(gr.marks)});
  }
  return FCurve::from_groups(dst, std::move(groups));
}

// ---------------------------------------------------------------------------
// Text form

std::string render(const FCurve& f) {
  if (f.is_elliptic()) return "F1";
  const auto& gs = f.groups();
  switch (f.type()) {
    case 2: return "F2";
    case 3: return "F3[" + std::to_string(gs[0].genus) + "](" + render_set(gs[0].marks) + ")";
    case 4: return "F4[" + std::to_string(gs[0].genus + 1) + "](" + render_set(gs[0].marks) + ")";
    case 5:
      return "F5[" + std::to_string(gs[0].genus) + "," + std::to_string(gs[1].genus) + "](" +
             render_set(gs[0].marks) + "," + render_set(gs[1].marks) + ")";
    case 6: {
      std::string out = "F6[";
      for (int k = 0; k < 4; ++k) out += (k ? "," : "") + std::to_string(gs[k].genus);
      out += "](";
      for (int k = 0; k < 4; ++k) out += (k ? "|" : "") + render_set(gs[k].marks);
      return out + ")";
    }
  }
  return "?";
}

namespace {

class CurveParser {
 public:
  CurveParser(const Context& ctx, std::string_view text) : ctx_(ctx) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  FCurve parse() {
    expect('F');
    int t = number();
    if (t < 1 || t > 6) fail("curve type must be 1..6");
    FCurve out = build(t);
    if (pos_ != s_.size()) fail("trailing characters");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse curve '" + s_ + "': " + what);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 4) fail("expected a small integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  std::vector<int> indices(std::size_t count) {
    std::vector<int> out;
    expect('[');
    for (std::size_t k = 0; k < count; ++k) {
      if (k) expect(',');
      out.push_back(number());
    }
    expect(']');
    return out;
  }
  MarkSet set() {
    expect('{');
    MarkSet m = 0;
    if (peek() != '}') {
      while (true) {
        int k = number();
        if (k < 1 || k > ctx_.n) fail("marking " + std::to_string(k) + " out of range");
        if (contains(m, k)) fail("repeated marking");
        m |= singleton(k);
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect('}');
    return m;
  }
  std::vector<MarkSet> sets(std::size_t count) {
    std::vector<MarkSet> out;
    expect('(');
    for (std::size_t k = 0; k < count; ++k) {
      if (k) {
        if (peek() == '|' || peek() == ',') {
          ++pos_;
        } else {
          fail("expected separator between sets");
        }
      }
      out.push_back(set());
    }
    expect(')');
    return out;
  }

  FCurve build(int t) {
    switch (t) {
      case 1: return make_F1(ctx_);
      case 2: return make_F2(ctx_);
      case 3: {
        auto i = indices(1);
        auto I = sets(1);
        return make_F3(ctx_, i[0], I[0]);
      }
      case 4: {
        auto i = indices(1);
        auto I = sets(1);
        return make_F4(ctx_, i[0], I[0]);
      }
      case 5: {
        auto i = indices(2);
        auto I = sets(2);
        return make_F5(ctx_, i[0], i[1], I[0], I[1]);
      }
      default: {
        auto i = indices(4);
        auto I = sets(4);
        return make_F6(ctx_, {i[0], I[0]}, {i[1], I[1]}, {i[2], I[2]}, {i[3], I[3]});
      }
    }
  }

  Context ctx_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

FCurve parse_curve(const Context& ctx, std::string_view text) {
  ctx.require_valid();
  return CurveParser(ctx, text).parse();
}

std::string enumeration_json(const Context& ctx, const std::vector<FCurve>& curves) {
  nlohmann::ordered_json j;
  j["g"] = ctx.g;
  j["n"] = ctx.n;
  j["count"] = curves.size();
  j["format_version"] = kEnumerationFormatVersion;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : curves) arr.push_back(render(f));
  j["curves"] = std::move(arr);
  return j.dump(2);
}

}  // namespace fcone
