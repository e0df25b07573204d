#include <doctest.h>

#include "fixtures.hpp"
#include "supermod/rational.hpp"

using namespace supermod;

namespace {

Rational q(long num, long den) {
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3/6") == q(-1, 2));
  CHECK(parse_rational("0.25") == q(1, 4));
  CHECK(parse_rational("-1.5") == q(-3, 2));
  CHECK(parse_rational("0.1") + parse_rational("0.2") == parse_rational("0.3"));
  CHECK(parse_rational("007") == Rational(7));
  CHECK(parse_rational("-0") == Rational(0));
  // Values that a double cannot separate stay distinct.
  CHECK(parse_rational("10000000000000000000000/3") != parse_rational("10000000000000000000001/3"));
}

TEST_CASE("rational parsing rejects other notations") {
  for (const char* text : {"", "-", "1e3", "1/0", "1/", "/2", "1.", ".5", "+1", " 1", "1 ", "1/2/3", "0x10", "--1",
                           "1.2.3", "-1/-2", "nan"}) {
    CAPTURE(text);
    CHECK_ERRC(parse_rational(text), Errc::kParseError);
  }
}

TEST_CASE("rational formatting") {
  CHECK(format_rational(q(6, 4)) == "3/2");
  CHECK(format_rational(q(-4, 2)) == "-2");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(parse_rational("-0.125")) == "-1/8");
}
