#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qfodc/rational.hpp"

namespace qfodc {

// Rational exponent of q, kept reduced with positive denominator.  Exponents
// with denominator D > 1 represent powers of the formal root q^(1/D) (the
// SL_q root z and the half-integer orthogonal metric powers live here).
struct Exponent {
  long long num = 0;
  long long den = 1;

  Exponent() = default;
  Exponent(long long n, long long d = 1);

  Exponent operator+(const Exponent& o) const;
  Exponent operator-(const Exponent& o) const;
  Exponent operator*(long long k) const;
  Exponent operator-() const { return Exponent(-num, den); }
  bool operator==(const Exponent& o) const { return num == o.num && den == o.den; }
  bool operator<(const Exponent& o) const;
  bool is_integer() const { return den == 1; }
  std::string to_string() const;
};

// Exact Laurent polynomial in q with rational coefficients and exponents in
// (1/D)Z.  Canonical form: no zero coefficients are stored.  Values are
// immutable in spirit: every operation returns a fresh Scalar.
class Scalar {
 public:
  Scalar() = default;  // zero
  Scalar(int v) : Scalar(Rational(v)) {}
  explicit Scalar(const Rational& c);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  // c * q^e
  static Scalar monomial(const Rational& c, const Exponent& e);
  static Scalar q_power(const Exponent& e) { return monomial(1, e); }
  static Scalar q_power(long long n) { return monomial(1, Exponent(n)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_rational() const;

  // Ring operations.
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;  // arbitrary total order, for map keys

  // Inverse of a single nonzero monomial; anything else has no inverse in
  // the Laurent ring and raises Error("non-invertible scalar").
  Scalar inverse() const;
  Scalar pow(long long k) const;  // negative k allowed for monomials

  // Complex conjugation with q treated as a real parameter: the identity.
  Scalar star() const { return *this; }

  // Exact evaluation at q = q0 (q0 != 0).  Exponents with denominator d
  // require an exact d-th root of q0; otherwise an Error is raised.
  Rational specialize(const Rational& q0) const;

  // Least common multiple of the exponent denominators (the "D" of the
  // value); 1 for a plain Laurent polynomial, and for zero.
  long long denominator_bound() const;

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  // Lowest/highest exponent; element must be nonzero.
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  Rational leading_coefficient() const;  // coefficient of max_exponent

  // "3*q^2 - q^(-1/2) + 1/2" style round-trip grammar.
  std::string to_string() const;
  static Scalar from_string(const std::string& s);

 private:
  std::map<Exponent, Rational> terms_;
};

inline Scalar operator*(const Rational& c, const Scalar& s) { return Scalar(c) * s; }

}  // namespace qfodc
