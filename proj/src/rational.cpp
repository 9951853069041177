#include "pong/rational.hpp"

#include <charconv>

#include "pong/errors.hpp"

namespace pong {

std::string to_fraction_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {
std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("not a fraction: \"" + whole + "\"");
  }
  return v;
}
}  // namespace

Rational parse_fraction(const std::string& text) {
  const std::string_view s(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  const std::int64_t den = parse_int(s.substr(slash + 1), text);
  if (den == 0) throw InvalidArgument("zero denominator in \"" + text + "\"");
  return Rational(parse_int(s.substr(0, slash), text), den);
}

}  // namespace pong
