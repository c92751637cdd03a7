#include "fcone/context.hpp"

#include <stdexcept>

namespace fcone {

std::vector<int> elements(MarkSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(__builtin_ctz(s) + 1);
    s &= s - 1;
  }
  return out;
}

std::strong_ordering compare_sets(MarkSet a, MarkSet b) {
  while (a != 0 && b != 0) {
    int x = __builtin_ctz(a);
    int y = __builtin_ctz(b);
    if (x != y) return x <=> y;
    a &= a - 1;
    b &= b - 1;
  }
  if (a == 0 && b == 0) return std::strong_ordering::equal;
  return a == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string render_set(MarkSet s) {
  std::string out = "{";
  bool first = true;
  for (int k : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

void Context::require_valid() const {
  if (g < 0 || n < 0) throw std::invalid_argument("negative genus or marking count");
  if (n > kMaxMarkings) {
    throw std::invalid_argument("n=" + std::to_string(n) + " exceeds supported maximum " +
                                std::to_string(kMaxMarkings));
  }
  if (3 * g - 3 + n < 1) {
    throw std::invalid_argument("unstable or trivial space " + to_string(*this) +
                                ": need 3g-3+n >= 1");
  }
}

std::string to_string(const Context& ctx) {
  return "(g=" + std::to_string(ctx.g) + ",n=" + std::to_string(ctx.n) + ")";
}

}  // namespace fcone
