#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fcone {

inline constexpr int kMaxMarkings = 24;

/// Bitmask over markings 1..n; bit (k-1) stands for marking k.
using MarkSet = std::uint32_t;

inline MarkSet singleton(int k) { return MarkSet{1} << (k - 1); }
inline MarkSet full_set(int n) { return n == 0 ? 0 : (MarkSet{1} << n) - 1; }
inline bool contains(MarkSet s, int k) { return (s >> (k - 1)) & 1u; }
inline int cardinality(MarkSet s) { return __builtin_popcount(s); }
inline int min_element(MarkSet s) { return s == 0 ? 0 : __builtin_ctz(s) + 1; }

std::vector<int> elements(MarkSet s);

/// Order of the sorted element lists, compared lexicographically ({} first).
std::strong_ordering compare_sets(MarkSet a, MarkSet b);

/// "{1,3}" / "{}".
std::string render_set(MarkSet s);

struct Context {
  int g = 0;
  int n = 0;

  /// Stable range: 3g-3+n >= 1 and n within the supported bound.
  bool valid() const { return g >= 0 && n >= 0 && n <= kMaxMarkings && 3 * g - 3 + n >= 1; }
  /// Throws std::invalid_argument naming the offending pair.
  void require_valid() const;

  int dimension() const { return 3 * g - 3 + n; }
  MarkSet all() const { return full_set(n); }

  friend bool operator==(const Context&, const Context&) = default;
  friend auto operator<=>(const Context&, const Context&) = default;
};

std::string to_string(const Context& ctx);

}  // namespace fcone
