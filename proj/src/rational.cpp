#include "fcone/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fcone {

std::string to_pq_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_display_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

Integer parse_integer(std::string_view text, bool allow_sign) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw std::invalid_argument("sign without digits");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not an integer: " + std::string(text));
    }
  }
  std::string digits(text);
  if (digits[0] == '+') digits.erase(0, 1);
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  Integer p = parse_integer(text.substr(0, slash), true);
  Integer q = parse_integer(text.substr(slash + 1), false);
  if (q == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(p, q);
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

}  // namespace fcone
