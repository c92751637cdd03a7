#pragma once

#include "fcone/context.hpp"

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fcone {

/// The half-edges of the rational spine are split into groups; a group of
/// `size` half-edges attaches to one component of genus `genus` carrying the
/// markings `marks`.  A tail (size 1) of genus 0 holding one marking means the
/// marking sits directly on the spine.  A size-2 group with genus 0 and no
/// markings is a self-loop of the spine.
struct Group {
  int size = 1;
  int genus = 0;
  MarkSet marks = 0;

  friend bool operator==(const Group&, const Group&) = default;
  friend std::strong_ordering operator<=>(const Group& x, const Group& y);
};

/// Either the elliptic-tail curve F1, or a spine datum with groups sorted
/// canonically.  Types: {4}->2, {1,3}->3, {2,2}->4, {1,1,2}->5, {1,1,1,1}->6.
class FCurve {
 public:
  static FCurve elliptic(const Context& ctx);
  /// Validates and canonicalizes; throws std::invalid_argument on violation.
  static FCurve from_groups(const Context& ctx, std::vector<Group> groups);

  const Context& context() const { return ctx_; }
  bool is_elliptic() const { return elliptic_; }
  const std::vector<Group>& groups() const { return groups_; }
  int type() const;

  friend bool operator==(const FCurve&, const FCurve&) = default;
  /// Deterministic order: type, then groups lexicographically.
  friend std::strong_ordering operator<=>(const FCurve& x, const FCurve& y);

 private:
  FCurve(Context ctx, bool elliptic, std::vector<Group> groups)
      : ctx_(ctx), elliptic_(elliptic), groups_(std::move(groups)) {}

  Context ctx_;
  bool elliptic_ = false;
  std::vector<Group> groups_;
};

/// Tail of a type 3/5/6 curve in the usual F-curve notation.
struct Leg {
  int genus = 0;
  MarkSet marks = 0;
};

FCurve make_F1(const Context& ctx);
FCurve make_F2(const Context& ctx);
FCurve make_F3(const Context& ctx, int i, MarkSet I);
FCurve make_F4(const Context& ctx, int i, MarkSet I);
FCurve make_F5(const Context& ctx, int i, int j, MarkSet I, MarkSet J);
FCurve make_F6(const Context& ctx, const Leg& a, const Leg& b, const Leg& c, const Leg& d);

/// Raised when a space is larger than the caller's size budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All F-curves of the space in the canonical order.  Throws BudgetExceeded
/// as soon as more than `limit` curves have been produced.
std::vector<FCurve> enumerate_fcurves(const Context& ctx,
                                      std::size_t limit = std::numeric_limits<std::size_t>::max());

/// sigma[k-1] is the image of marking k; must be a permutation of 1..n.
FCurve act_permutation(const FCurve& f, const std::vector<int>& sigma);

/// Image under the map forgetting marking i; nullopt when the image is a
/// point (the curve is contracted).
std::optional<FCurve> pushforward_forget(const FCurve& f, int i);

FCurve parse_curve(const Context& ctx, std::string_view text);
std::string render(const FCurve& f);

inline constexpr int kEnumerationFormatVersion = 1;

/// {"g","n","count","format_version","curves":[...]} with fixed key order.
std::string enumeration_json(const Context& ctx, const std::vector<FCurve>& curves);

}  // namespace fcone
