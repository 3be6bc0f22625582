#include "qfodc/scalar.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "qfodc/error.hpp"

namespace qfodc {

Exponent::Exponent(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw Error("exponent with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Exponent Exponent::operator+(const Exponent& o) const {
  return Exponent(num * o.den + o.num * den, den * o.den);
}

Exponent Exponent::operator-(const Exponent& o) const {
  return Exponent(num * o.den - o.num * den, den * o.den);
}

Exponent Exponent::operator*(long long k) const { return Exponent(num * k, den); }

bool Exponent::operator<(const Exponent& o) const {
  return num * o.den < o.num * den;
}

std::string Exponent::to_string() const {
  std::ostringstream os;
  if (den == 1) {
    os << num;
  } else {
    os << "(" << num << "/" << den << ")";
  }
  return os.str();
}

Scalar::Scalar(const Rational& c) {
  if (c != 0) terms_[Exponent(0)] = c;
}

Scalar Scalar::monomial(const Rational& c, const Exponent& e) {
  Scalar s;
  if (c != 0) s.terms_[e] = c;
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponent(0) &&
         terms_.begin()->second == 1;
}

bool Scalar::is_rational() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exponent(0));
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e = e1 + e2;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, c1 * c2);
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

bool Scalar::operator<(const Scalar& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first < b->first) return true;
    if (b->first < a->first) return false;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == terms_.end() && b != o.terms_.end();
}

Scalar Scalar::inverse() const {
  if (!is_monomial()) throw Error("non-invertible scalar");
  const auto& [e, c] = *terms_.begin();
  return monomial(1 / c, -e);
}

Scalar Scalar::pow(long long k) const {
  if (k == 0) return one();
  Scalar base = *this;
  if (k < 0) {
    base = inverse();
    k = -k;
  }
  Scalar r = one();
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Rational Scalar::specialize(const Rational& q0) const {
  if (q0 == 0) throw Error("specialization at q = 0");
  long long d = denominator_bound();
  Rational root = q0;
  if (d > 1) {
    auto r = exact_root(q0, d);
    if (!r) throw Error("q0 has no exact " + std::to_string(d) + "-th root");
    root = *r;
  }
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    // e = num/den with den | d; evaluate as root^(num * d/den).
    acc += c * rational_pow(root, e.num * (d / e.den));
  }
  return acc;
}

long long Scalar::denominator_bound() const {
  long long d = 1;
  for (const auto& [e, c] : terms_) d = std::lcm(d, e.den);
  return d;
}

Exponent Scalar::min_exponent() const {
  if (terms_.empty()) throw Error("zero scalar has no exponents");
  return terms_.begin()->first;
}

Exponent Scalar::max_exponent() const {
  if (terms_.empty()) throw Error("zero scalar has no exponents");
  return terms_.rbegin()->first;
}

Rational Scalar::leading_coefficient() const {
  if (terms_.empty()) throw Error("zero scalar has no leading coefficient");
  return terms_.rbegin()->second;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Render highest powers first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Exponent& e = it->first;
    Rational c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    bool unit_coeff = (c == 1);
    bool const_term = (e == Exponent(0));
    if (!unit_coeff || const_term) os << c.get_str();
    if (!const_term) {
      if (!unit_coeff) os << "*";
      os << "q";
      if (!(e == Exponent(1))) os << "^" << e.to_string();
    }
    first = false;
  }
  return os.str();
}

namespace {

struct ScalarParser {
  const std::string& s;
  size_t pos = 0;

  explicit ScalarParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  long long parse_integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error("expected integer in scalar literal: '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
  }

  Rational parse_rational() {
    long n = static_cast<long>(parse_integer());
    if (eat('/')) {
      long d = static_cast<long>(parse_integer());
      Rational r(n, d);
      r.canonicalize();
      return r;
    }
    return Rational(n);
  }

  // q-exponent: integer, or (p/r).
  Exponent parse_exponent() {
    if (eat('(')) {
      long long n = parse_integer();
      long long d = 1;
      if (eat('/')) d = parse_integer();
      if (!eat(')')) throw Error("unbalanced exponent parens: '" + s + "'");
      return Exponent(n, d);
    }
    return Exponent(parse_integer());
  }

  // term := rational | [rational '*'] 'q' ['^' exponent]
  Scalar parse_term() {
    skip_ws();
    Rational coeff = 1;
    bool have_coeff = false;
    if (peek() != 'q') {
      coeff = parse_rational();
      have_coeff = true;
    }
    if (have_coeff && !eat('*')) {
      // pure rational, or juxtaposed q as in "3q^2" (be lenient)
      if (peek() != 'q') return Scalar::monomial(coeff, Exponent(0));
    }
    if (peek() == 'q') {
      ++pos;
      Exponent e(1);
      if (eat('^')) e = parse_exponent();
      return Scalar::monomial(coeff, e);
    }
    return Scalar::monomial(coeff, Exponent(0));
  }

  Scalar parse() {
    Scalar acc;
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    while (true) {
      Scalar t = parse_term();
      acc += negate ? -t : t;
      skip_ws();
      if (eat('+')) {
        negate = false;
      } else if (eat('-')) {
        negate = true;
      } else {
        break;
      }
    }
    skip_ws();
    if (pos != s.size()) throw Error("trailing junk in scalar literal: '" + s + "'");
    return acc;
  }
};

}  // namespace

Scalar Scalar::from_string(const std::string& s) { return ScalarParser(s).parse(); }

}  // namespace qfodc
