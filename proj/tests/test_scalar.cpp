#include <random>

#include "doctest.h"
#include "qfodc/error.hpp"
#include "qfodc/fraction.hpp"
#include "qfodc/scalar.hpp"

using namespace qfodc;

namespace {

Scalar q(long long k = 1) { return Scalar::q_power(k); }

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-5, 5), coeff(-6, 6);
  Scalar s;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i)
    s += Scalar::monomial(Rational(coeff(rng)), Exponent(expo(rng)));
  return s;
}

}  // namespace

TEST_CASE("difference of squares") {
  Scalar lhs = (q(1) - q(-1)) * (q(1) + q(-1));
  CHECK(lhs == q(2) - q(-2));
}

TEST_CASE("monomial inverse") {
  CHECK(q(2).inverse() == q(-2));
  CHECK_THROWS_AS((q(1) + Scalar(1)).inverse(), Error);
  CHECK_THROWS_AS(Scalar::zero().inverse(), Error);
}

TEST_CASE("specialization") {
  CHECK((q(1) - q(-1)).specialize(Rational(2)) == Rational(3, 2));
  CHECK((q(-2) - Scalar(1)).specialize(Rational(1)) == 0);
  // fractional exponents need an exact root
  Scalar half = Scalar::q_power(Exponent(1, 2));
  CHECK(half.specialize(Rational(9, 4)) == Rational(3, 2));
  CHECK_THROWS_AS(half.specialize(Rational(7, 10)), Error);
  CHECK_THROWS_AS(q(1).specialize(Rational(0)), Error);
}

TEST_CASE("canonical form: a + (-a) is empty") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(rng);
    CHECK((a + (-a)).is_zero());
    CHECK((a - a).terms().empty());
  }
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937 rng(11);
  Rational q0(7, 10);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(rng);
    Scalar b = random_scalar(rng);
    CHECK((a * b).specialize(q0) == a.specialize(q0) * b.specialize(q0));
    CHECK((a + b).specialize(q0) == a.specialize(q0) + b.specialize(q0));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("scalar string round trip") {
  Scalar s = Scalar::monomial(3, Exponent(2)) - Scalar::q_power(Exponent(-1, 2)) +
             Scalar::monomial(Rational(1, 2), Exponent(0));
  CHECK(s.to_string() == "3*q^2 + 1/2 - q^(-1/2)");
  CHECK(Scalar::from_string(s.to_string()) == s);
  CHECK(Scalar::from_string("3*q^2 - q^(-1/2)") ==
        Scalar::monomial(3, Exponent(2)) - Scalar::q_power(Exponent(-1, 2)));
  CHECK(Scalar::from_string("q") == q(1));
  CHECK(Scalar::from_string("-2") == Scalar(-2));
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    Scalar a = random_scalar(rng);
    CHECK(Scalar::from_string(a.to_string()) == a);
  }
}

TEST_CASE("fraction equality agrees with clearing denominators") {
  std::mt19937 rng(19);
  for (int i = 0; i < 100; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    if (b.is_zero() || c.is_zero()) continue;
    ScalarFraction f1(a * c, b * c);
    ScalarFraction f2(a, b);
    CHECK(f1 == f2);
    CHECK((f1.num() * f2.den()) == (f2.num() * f1.den()));
  }
}

TEST_CASE("fraction field arithmetic") {
  ScalarFraction x(q(1) - q(-1), q(1) + q(-1));
  ScalarFraction y = x.inverse();
  CHECK((x * y) == ScalarFraction(Scalar(1)));
  CHECK((x - x).is_zero());
  CHECK((x + y) * (x - y) == x * x - y * y);
  // gcd reduction keeps denominators small
  ScalarFraction z(q(2) - Scalar(1), q(1) - Scalar(1));  // = q + 1
  CHECK(z == ScalarFraction(q(1) + Scalar(1)));
  CHECK(z.den().is_one());
}

TEST_CASE("poly gcd and exact division") {
  Scalar a = (q(1) - Scalar(1)) * (q(1) + Scalar(1));
  Scalar b = (q(1) - Scalar(1)) * q(3);
  Scalar g = scalar_poly_gcd(a, b);
  // gcd is monic with lowest exponent zero: q - 1
  CHECK(g == q(1) - Scalar(1));
  auto d = scalar_exact_div(a, q(1) - Scalar(1));
  REQUIRE(d.has_value());
  CHECK(*d == q(1) + Scalar(1));
  CHECK(!scalar_exact_div(q(1) + Scalar(1), q(1) - Scalar(1)).has_value());
}
