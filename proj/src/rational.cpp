#include "qfodc/rational.hpp"

#include <cctype>

#include "qfodc/error.hpp"

namespace qfodc {

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return 1;
  Rational b = base;
  if (exp < 0) {
    if (b == 0) throw Error("zero has no negative power");
    b = 1 / b;
    exp = -exp;
  }
  Rational r = 1;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

std::optional<Rational> exact_root(const Rational& x, long k) {
  if (k <= 0) throw Error("root order must be positive");
  if (k == 1) return x;
  if (x == 0) return Rational(0);
  if (x < 0 && k % 2 == 0) return std::nullopt;

  auto int_root = [k](const mpz_class& v) -> std::optional<mpz_class> {
    mpz_class a = abs(v);
    mpz_class r;
    int is_exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
    if (!is_exact) return std::nullopt;
    if (v < 0) r = -r;  // k odd here
    return r;
  };

  mpq_class xr = x;
  xr.canonicalize();
  auto rn = int_root(xr.get_num());
  if (!rn) return std::nullopt;
  auto rd = int_root(xr.get_den());
  if (!rd) return std::nullopt;
  return Rational(*rn, *rd);
}

Rational rational_from_string(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw Error("empty rational literal");
  try {
    Rational r(t);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error("bad rational literal: '" + s + "'");
  }
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

}  // namespace qfodc
