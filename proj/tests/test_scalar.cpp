#include <doctest.h>

#include "kslogos/error.hpp"
#include "kslogos/scalar.hpp"
#include "support.hpp"

using namespace kslogos;

TEST_CASE("rationals stay canonical") {
  const Scalar a(Rational(2, 4));
  CHECK(a.real().get_num() == 1);
  CHECK(a.real().get_den() == 2);
  const Scalar b = Scalar(Rational(1, 6)) + Scalar(Rational(1, 3));
  CHECK(b == Scalar(Rational(1, 2)));
  CHECK(to_string(Scalar(Rational(-3, 6))) == "-1/2");
}

TEST_CASE("gaussian arithmetic") {
  const Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  const Scalar z(Rational(1), Rational(2));
  CHECK(z * z.conj() == Scalar(5));
  CHECK(z.norm() == 5);
  CHECK(z / z == Scalar(1));
  CHECK((Scalar(1) / i) == -i);
  CHECK_THROWS_AS(z / Scalar(0), Error);
}

TEST_CASE("conjugation is an involution") {
  kstest::Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const Scalar z = rng.scalar(true);
    CHECK(z.conj().conj() == z);
    CHECK((z * z.conj()).is_real());
  }
}

TEST_CASE("parse and format") {
  CHECK(parse_rational("24/25") == Rational(24, 25));
  CHECK(parse_rational("0.96") == Rational(24, 25));
  CHECK(parse_rational("-0.4") == Rational(-2, 5));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("+7") == 7);

  CHECK(parse_scalar("i") == Scalar::i());
  CHECK(parse_scalar("-i") == -Scalar::i());
  CHECK(parse_scalar("2i") == Scalar(Rational(0), Rational(2)));
  CHECK(parse_scalar("1/2+3/4i") == Scalar(Rational(1, 2), Rational(3, 4)));
  CHECK(parse_scalar("1/6-1/6i") == Scalar(Rational(1, 6), Rational(-1, 6)));
  CHECK(parse_scalar("-1-i") == Scalar(Rational(-1), Rational(-1)));

  CHECK(to_string(Scalar(Rational(0), Rational(1))) == "i");
  CHECK(to_string(Scalar(Rational(1, 2), Rational(-1))) == "1/2-i");
  CHECK(to_string(Scalar(Rational(-3), Rational(2, 3))) == "-3+2/3i");

  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1/2/3", "0x10", "1e5", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_scalar(bad), Error);
  }
}

TEST_CASE("format then parse is the identity") {
  kstest::Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const Scalar z = rng.scalar(rng.coin(), 40);
    CHECK(parse_scalar(to_string(z)) == z);
  }
}
