#include "respgraph/rational.hpp"

#include <cctype>

#include "respgraph/error.hpp"

namespace rg {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(Errc::ParseError, "not an integer: '" + std::string(s) + "'");
  BigInt value{std::string(s)};
  if (negative) value = -value;
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error(Errc::ParseError, "empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    bool negative = text.front() == '-';
    std::string_view body = text;
    if (body.front() == '-' || body.front() == '+') body.remove_prefix(1);
    dot = body.find('.');
    std::string_view head = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!all_digits(frac) || (!head.empty() && !all_digits(head))) {
      throw Error(Errc::ParseError, "bad decimal literal '" + std::string(text) + "'");
    }
    BigInt whole = head.empty() ? BigInt(0) : BigInt(std::string(head));
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = whole * scale + BigInt(std::string(frac));
    return Rational(negative ? -num : num, scale);
  }
  return Rational(parse_integer(text));
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace rg
