#pragma once

#include <string>

#include "qfodc/algebra.hpp"
#include "qfodc/functional.hpp"
#include "qfodc/group.hpp"

namespace qfodc {

// Round-trip grammars for the report strings:
//   scalars     "3*q^2 - q^(-1/2)"          (Scalar::from_string)
//   elements    "q^-1 * u[1,1].u[1,2] * detq^-1", "S(u[2,1])"
//   functionals "q^-1 * L-[n,1].L-[n,n]", "S(L+[1,n])", "sgn[2]", "L-[n,n]^2"
// Indices accept integers or the symbols n/N (resolved against the group).
AlgebraElement parse_algebra_element(const std::string& s, const GroupSpec& g);
FunctionalElement parse_functional(const std::string& s, const GroupSpec& g);

// A group-like monomial in the diagonal L-functionals (with optional sign
// characters); the grammar accepted by --zn and the separator overrides.
GroupLike parse_grouplike(const std::string& s, const GroupSpec& g);

}  // namespace qfodc
