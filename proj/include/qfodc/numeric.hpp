#pragma once

#include <map>
#include <vector>

#include "qfodc/algebra.hpp"
#include "qfodc/functional.hpp"
#include "qfodc/group.hpp"
#include "qfodc/rational.hpp"

namespace qfodc {

// Independent numeric cross-check: dense rational tables built straight from
// the R-matrix formulas at a fixed rational q0 (with the exact root for the
// fractional-exponent families), evaluated by plain Sweedler splitting with
// dense matrix chains.  Deliberately shares no code with the symbolic
// engine's sparse column contraction.
class NumericEngine {
 public:
  NumericEngine(const GroupSpec& g, const Rational& q0);

  const Rational& q0() const { return q0_; }

  Rational eval(const FunctionalElement& f, const AlgebraElement& a) const;

  // All atom monomials of length <= bound pair to zero with e, numerically.
  bool pairing_all_zero(const AlgebraElement& e, int bound) const;

  // A q0 that has the exact roots this family's scalars need.
  static Rational default_q0(const GroupSpec& g);

 private:
  // <S^pa(l^{kind,a}_b), S^pl(u^c_d)>, dense
  const Rational& table(int kind, int pa, int pl, int a, int b, int c, int d) const;
  Rational atom_on_word(LKind kind, int parity, int a, int b,
                        const std::vector<Letter>& w) const;
  Rational grouplike_value(const GroupLike& z, int c) const;
  Rational mono_on_word(const FuncMonomial& m, const std::vector<Letter>& w,
                        int detq_pow) const;

  GroupSpec g_;
  Rational q0_;
  Rational root_;  // q0^(1/D)
  Rational z0_ = 1;
  int n_ = 0;
  std::vector<Rational> t_;  // [kind][pa][pl][a][b][c][d] flattened
  std::vector<Rational> gamma0_;
  Rational detq_plus_ = 1;  // <l^{+a}_a, det_q>
};

}  // namespace qfodc
