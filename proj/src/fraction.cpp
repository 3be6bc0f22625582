#include "qfodc/fraction.hpp"

#include <numeric>
#include <vector>

#include "qfodc/error.hpp"

namespace qfodc {

namespace {

// Dense polynomial in t = q^(1/scale), degrees shifted so the constant term
// is the lowest.  Laurent monomial prefactors are units and get dropped.
struct DensePoly {
  std::vector<Rational> c;  // c[0] != 0 unless the poly is zero

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
    // strip t-content so c[0] != 0
    size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    if (k > 0) c.erase(c.begin(), c.begin() + static_cast<long>(k));
  }

  void make_monic() {
    if (c.empty()) return;
    Rational lead = c.back();
    for (auto& x : c) x /= lead;
  }
};

DensePoly to_dense(const Scalar& s, long long scale) {
  DensePoly p;
  if (s.is_zero()) return p;
  long long lo = s.min_exponent().num * (scale / s.min_exponent().den);
  long long hi = s.max_exponent().num * (scale / s.max_exponent().den);
  p.c.assign(static_cast<size_t>(hi - lo + 1), Rational(0));
  for (const auto& [e, coeff] : s.terms()) {
    long long d = e.num * (scale / e.den) - lo;
    p.c[static_cast<size_t>(d)] = coeff;
  }
  return p;
}

Scalar from_dense(const DensePoly& p, long long scale) {
  Scalar s;
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] != 0)
      s += Scalar::monomial(p.c[i], Exponent(static_cast<long long>(i), scale));
  }
  return s;
}

// Remainder of a mod b (b nonzero), in place on a copy.
DensePoly poly_rem(DensePoly a, const DensePoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rational f = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i)
      a.c[static_cast<size_t>(i + shift)] -= f * b.c[static_cast<size_t>(i)];
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
  }
  a.trim();
  return a;
}

std::optional<DensePoly> poly_div(DensePoly a, const DensePoly& b) {
  DensePoly qout;
  if (a.is_zero()) return qout;
  if (a.degree() < b.degree()) return std::nullopt;
  qout.c.assign(static_cast<size_t>(a.degree() - b.degree() + 1), Rational(0));
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rational f = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    qout.c[static_cast<size_t>(shift)] = f;
    for (int i = 0; i <= b.degree(); ++i)
      a.c[static_cast<size_t>(i + shift)] -= f * b.c[static_cast<size_t>(i)];
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
  }
  if (!a.is_zero()) return std::nullopt;
  return qout;
}

}  // namespace

Scalar scalar_poly_gcd(const Scalar& a, const Scalar& b) {
  if (a.is_zero() && b.is_zero()) return Scalar::zero();
  long long scale = std::lcm(a.denominator_bound(), b.denominator_bound());
  DensePoly pa = to_dense(a, scale);
  DensePoly pb = to_dense(b, scale);
  pa.trim();
  pb.trim();
  while (!pb.is_zero()) {
    DensePoly r = poly_rem(pa, pb);
    r.make_monic();
    pa = pb;
    pb = r;
  }
  pa.make_monic();
  return from_dense(pa, scale);
}

std::optional<Scalar> scalar_exact_div(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error("division by zero scalar");
  if (a.is_zero()) return Scalar::zero();
  long long scale = std::lcm(a.denominator_bound(), b.denominator_bound());
  DensePoly pa = to_dense(a, scale);
  DensePoly pb = to_dense(b, scale);
  pa.trim();
  pb.trim();
  auto q = poly_div(pa, pb);
  if (!q) return std::nullopt;
  Scalar result = from_dense(*q, scale);
  // reattach the monomial prefactors dropped by trim()
  Exponent shift = a.min_exponent() - b.min_exponent();
  return result * Scalar::q_power(shift);
}

ScalarFraction::ScalarFraction(const Scalar& n) : num_(n) {}

ScalarFraction::ScalarFraction(const Scalar& n, const Scalar& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw Error("fraction with zero denominator");
  reduce();
}

void ScalarFraction::reduce() {
  if (num_.is_zero()) {
    den_ = Scalar(1);
    return;
  }
  Scalar g = scalar_poly_gcd(num_, den_);
  if (!g.is_one()) {
    auto n2 = scalar_exact_div(num_, g);
    auto d2 = scalar_exact_div(den_, g);
    if (n2 && d2) {
      num_ = *n2;
      den_ = *d2;
    }
  }
  // normalize: denominator monic with lowest exponent 0
  Scalar unit = Scalar::monomial(1 / den_.leading_coefficient(), -den_.min_exponent());
  num_ *= unit;
  den_ *= unit;
}

ScalarFraction ScalarFraction::operator+(const ScalarFraction& o) const {
  return ScalarFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ScalarFraction ScalarFraction::operator-(const ScalarFraction& o) const {
  return *this + (-o);
}

ScalarFraction ScalarFraction::operator*(const ScalarFraction& o) const {
  return ScalarFraction(num_ * o.num_, den_ * o.den_);
}

ScalarFraction ScalarFraction::operator/(const ScalarFraction& o) const {
  return *this * o.inverse();
}

ScalarFraction ScalarFraction::operator-() const {
  ScalarFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

ScalarFraction& ScalarFraction::operator+=(const ScalarFraction& o) {
  *this = *this + o;
  return *this;
}

ScalarFraction& ScalarFraction::operator-=(const ScalarFraction& o) {
  *this = *this - o;
  return *this;
}

ScalarFraction& ScalarFraction::operator*=(const ScalarFraction& o) {
  *this = *this * o;
  return *this;
}

bool ScalarFraction::operator==(const ScalarFraction& o) const {
  // reduced canonical form; cross-multiplication as a belt-and-braces check
  if (num_ == o.num_ && den_ == o.den_) return true;
  return (num_ * o.den_) == (o.num_ * den_);
}

ScalarFraction ScalarFraction::inverse() const {
  if (is_zero()) throw Error("inverse of zero fraction");
  return ScalarFraction(den_, num_);
}

std::optional<Scalar> ScalarFraction::as_scalar() const {
  if (den_.is_one()) return num_;
  if (den_.is_monomial()) return num_ * den_.inverse();
  auto d = scalar_exact_div(num_, den_);
  if (d) return *d;
  return std::nullopt;
}

Rational ScalarFraction::specialize(const Rational& q0) const {
  Rational d = den_.specialize(q0);
  if (d == 0) throw Error("fraction denominator vanishes at q0");
  return num_.specialize(q0) / d;
}

std::string ScalarFraction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Scalar expect_scalar(const ScalarFraction& f, const std::string& what) {
  auto s = f.as_scalar();
  if (!s) throw Error(what + ": unexpected non-polynomial value " + f.to_string());
  return *s;
}

}  // namespace qfodc
