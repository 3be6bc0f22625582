#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfodc/group.hpp"
#include "qfodc/scalar.hpp"

namespace qfodc {

// One generator letter u^i_j (parity 0) or S(u^i_j) (parity 1).  Higher
// antipode powers are never stored; make_letter reduces them via
// S^2(u^i_j) = gamma_i u^i_j gamma_j^{-1}, emitting the scalar prefactor.
struct Letter {
  std::uint8_t row = 1;
  std::uint8_t col = 1;
  std::uint8_t parity = 0;

  Letter() = default;
  Letter(int i, int j, int p = 0)
      : row(static_cast<std::uint8_t>(i)),
        col(static_cast<std::uint8_t>(j)),
        parity(static_cast<std::uint8_t>(p)) {}

  auto key() const { return std::tuple(parity, row, col); }
  bool operator==(const Letter& o) const { return key() == o.key(); }
  bool operator<(const Letter& o) const { return key() < o.key(); }
  std::string to_string() const;
};

// S^k(u^i_j) reduced to parity 0/1 with its gamma prefactor.
std::pair<Letter, Scalar> make_letter(const GroupSpec& g, int i, int j, int s_power);

// Product of letters times an integer power of det_q (GLq only; the power is
// the exponent of det_q itself, so -1 encodes det_q^{-1}).
struct Word {
  std::vector<Letter> letters;
  int detq_pow = 0;

  Word() = default;
  explicit Word(std::vector<Letter> ls, int dp = 0)
      : letters(std::move(ls)), detq_pow(dp) {}

  int degree() const { return static_cast<int>(letters.size()); }
  bool operator==(const Word& o) const {
    return detq_pow == o.detq_pow && letters == o.letters;
  }
  bool operator<(const Word& o) const;
  Word concat(const Word& o) const;
  std::string to_string() const;
};

// Finite linear combination of words over Scalar.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement zero() { return {}; }
  static AlgebraElement unit() { return from_word(Word{}, Scalar(1)); }
  static AlgebraElement from_word(const Word& w, const Scalar& c = Scalar(1));
  static AlgebraElement from_letter(const Letter& l, const Scalar& c = Scalar(1));
  // u^i_j resp. S(u^i_j)
  static AlgebraElement generator(int i, int j, int parity = 0);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  void add_term(const Word& w, const Scalar& c);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  AlgebraElement scaled(const Scalar& c) const;

  // Counit: words of diagonal letters count 1, everything else 0.
  Scalar counit() const;

  // Antilinear antihomomorphism with (u^i_j)^* = S(u^j_i); q is treated as
  // real, so scalars are fixed.  An involution on the nose.
  AlgebraElement star() const;

  // Largest letter degree appearing.
  int max_degree() const;

  std::string to_string() const;
  static AlgebraElement parse(const std::string& s);

 private:
  std::map<Word, Scalar> terms_;
};

inline AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  return a.scaled(c);
}

// x_i := u^i_N and y_i := S(u^N_i), the quantum-space generators.
AlgebraElement x_generator(const GroupSpec& g, int i);
AlgebraElement y_generator(const GroupSpec& g, int i);

// Quantum minor over ascending row/column index sets (equal sizes), and the
// quantum determinant itself.
AlgebraElement quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols);
AlgebraElement quantum_determinant(const GroupSpec& g);

// Rewrites every parity-1 letter through quantum cofactors,
// S(u^i_j) = (-q)^{i-j} * minor(rows != j, cols != i) * det_q^{-1},
// with det_q = 1 substituted for SLq.  GLq/SLq only.
AlgebraElement antipode_expand(const AlgebraElement& a, const GroupSpec& g);

// Hopf algebra projection onto the (N-1)x(N-1) corner: boundary letters go
// to 0 or 1, interior letters survive, det_q maps to the smaller det_q.
AlgebraElement project_pi(const AlgebraElement& a, const GroupSpec& g);

}  // namespace qfodc
