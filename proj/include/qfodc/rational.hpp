#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qfodc {

using Rational = mpq_class;

// base^exp with exp of either sign; base must be nonzero for negative exp.
Rational rational_pow(const Rational& base, long exp);

// Principal k-th root of x when it exists in Q (k >= 1).  For even k the
// argument must be nonnegative.
std::optional<Rational> exact_root(const Rational& x, long k);

// "3/2", "-5", "7" style; whitespace tolerated.
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& x);

}  // namespace qfodc
