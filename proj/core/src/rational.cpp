#include "supermod/rational.hpp"

#include <algorithm>
#include <cctype>

#include "supermod/error.hpp"

namespace supermod {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void bad(std::string_view text) {
  fail(Errc::kParseError, "'" + std::string(text) + "' is not a rational (expected p, p/q or a decimal)");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(Errc::kParseError, "'" + std::string(text) + "' has a zero denominator");
    value = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(mpz_class(std::string(whole) + std::string(frac), 10), scale);
  } else {
    if (!all_digits(body)) bad(text);
    value = Rational(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace supermod
