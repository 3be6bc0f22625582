#pragma once

#include <optional>
#include <string>

#include "qfodc/scalar.hpp"

namespace qfodc {

// Element of the fraction field Q(q^(1/D)).  Reduced on construction: the
// polynomial gcd and monomial content are divided out and the denominator is
// normalized monic with lowest exponent zero, so equality is plain
// structural equality (and agrees with cross-multiplication).
class ScalarFraction {
 public:
  ScalarFraction() = default;  // zero
  ScalarFraction(const Scalar& n);  // NOLINT: implicit by design
  ScalarFraction(int n) : ScalarFraction(Scalar(n)) {}
  ScalarFraction(const Scalar& n, const Scalar& d);

  const Scalar& num() const { return num_; }
  const Scalar& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  ScalarFraction operator+(const ScalarFraction& o) const;
  ScalarFraction operator-(const ScalarFraction& o) const;
  ScalarFraction operator*(const ScalarFraction& o) const;
  ScalarFraction operator/(const ScalarFraction& o) const;
  ScalarFraction operator-() const;
  ScalarFraction& operator+=(const ScalarFraction& o);
  ScalarFraction& operator-=(const ScalarFraction& o);
  ScalarFraction& operator*=(const ScalarFraction& o);
  bool operator==(const ScalarFraction& o) const;
  bool operator!=(const ScalarFraction& o) const { return !(*this == o); }

  ScalarFraction inverse() const;
  // The underlying Scalar when the denominator reduced to a monomial.
  std::optional<Scalar> as_scalar() const;
  Rational specialize(const Rational& q0) const;

  std::string to_string() const;

 private:
  void reduce();

  Scalar num_;          // zero fraction: num = 0, den = 1
  Scalar den_ = Scalar(1);
};

// gcd of two Laurent polynomials, monic with lowest exponent zero; used by
// the fraction reduction and handy for tests.
Scalar scalar_poly_gcd(const Scalar& a, const Scalar& b);

// Exact division a / b in the Laurent ring; nullopt when b does not divide a.
std::optional<Scalar> scalar_exact_div(const Scalar& a, const Scalar& b);

// The fraction as a Laurent polynomial; raises Error(what) when it is not.
Scalar expect_scalar(const ScalarFraction& f, const std::string& what);

}  // namespace qfodc
