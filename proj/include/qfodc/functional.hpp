#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qfodc/fraction.hpp"
#include "qfodc/group.hpp"
#include "qfodc/scalar.hpp"

namespace qfodc {

enum class LKind : std::uint8_t { Plus, Minus };

// One L-functional letter l^{+i}_j / l^{-i}_j, optionally under S (parity 1).
struct Atom {
  LKind kind = LKind::Plus;
  std::uint8_t parity = 0;
  std::uint8_t row = 1;
  std::uint8_t col = 1;

  Atom() = default;
  Atom(LKind k, int i, int j, int p = 0)
      : kind(k), parity(static_cast<std::uint8_t>(p)),
        row(static_cast<std::uint8_t>(i)), col(static_cast<std::uint8_t>(j)) {}

  auto key() const { return std::tuple(kind, parity, row, col); }
  bool operator==(const Atom& o) const { return key() == o.key(); }
  bool operator<(const Atom& o) const { return key() < o.key(); }
  std::string to_string() const;
};

// Monomial in the diagonal L-functionals, as an exponent vector over the 2N
// atoms l^{+k}_k, l^{-k}_k, optionally twisted by a diagonal sign character
// (values +-1 on u^k_k; needed to separate the weight-zero middle entry of
// the odd orthogonal series, where every q-power monomial evaluates to 1).
struct GroupLike {
  std::vector<int> plus_exp;   // size N
  std::vector<int> minus_exp;  // size N
  std::vector<std::int8_t> sign;  // size N, entries +-1; empty means all +1

  GroupLike() = default;
  explicit GroupLike(int n)
      : plus_exp(static_cast<size_t>(n), 0), minus_exp(static_cast<size_t>(n), 0) {}

  int n() const { return static_cast<int>(plus_exp.size()); }
  bool is_epsilon() const;
  int sign_at(int k) const;  // 1-based
  GroupLike inverse() const;
  GroupLike operator*(const GroupLike& o) const;
  // Entrywise star: (l^{+k}_k)^* = l^{+k}_k and (l^{-k}_k)^* = l^{-k}_k
  // under the sign-flipped involution, so a diagonal monomial is fixed.
  GroupLike star() const { return *this; }

  auto key() const { return std::tuple(plus_exp, minus_exp, sign_vector()); }
  std::vector<std::int8_t> sign_vector() const;
  bool operator==(const GroupLike& o) const { return key() == o.key(); }
  bool operator<(const GroupLike& o) const { return key() < o.key(); }
  std::string to_string() const;

  static GroupLike diagonal_atom(int n, LKind kind, int k, int power = 1);
  static GroupLike sign_character(int n, int k);  // -1 at k and k' (so it is a character)
};

using Factor = std::variant<Atom, GroupLike>;

bool factor_less(const Factor& a, const Factor& b);

// Ordered product of atoms and group-likes; empty product is the counit.
struct FuncMonomial {
  std::vector<Factor> factors;

  FuncMonomial() = default;
  explicit FuncMonomial(std::vector<Factor> fs) : factors(std::move(fs)) {}

  bool is_counit() const { return factors.empty(); }
  int atom_degree() const;
  FuncMonomial concat(const FuncMonomial& o) const;
  // Merge adjacent group-likes (they multiply by exponent addition) and drop
  // epsilon factors; canonical form used as map key.
  void normalize();

  bool operator==(const FuncMonomial& o) const { return factors == o.factors; }
  bool operator<(const FuncMonomial& o) const;
  std::string to_string() const;
};

// Finite linear combination of functional monomials; the empty monomial
// carries the epsilon component.
class FunctionalElement {
 public:
  FunctionalElement() = default;
  static FunctionalElement zero() { return {}; }
  static FunctionalElement counit() { return from_monomial(FuncMonomial{}); }
  static FunctionalElement from_monomial(const FuncMonomial& m,
                                         const ScalarFraction& c = ScalarFraction(Scalar(1)));
  static FunctionalElement from_atom(const Atom& a,
                                     const ScalarFraction& c = ScalarFraction(Scalar(1)));
  static FunctionalElement from_grouplike(const GroupLike& z,
                                          const ScalarFraction& c = ScalarFraction(Scalar(1)));

  bool is_zero() const { return terms_.empty(); }
  const std::map<FuncMonomial, ScalarFraction>& terms() const { return terms_; }
  void add_term(FuncMonomial m, const ScalarFraction& c);

  FunctionalElement operator+(const FunctionalElement& o) const;
  FunctionalElement operator-(const FunctionalElement& o) const;
  FunctionalElement operator*(const FunctionalElement& o) const;  // convolution product
  FunctionalElement operator-() const;
  FunctionalElement& operator+=(const FunctionalElement& o);
  FunctionalElement& operator-=(const FunctionalElement& o);
  bool operator==(const FunctionalElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const FunctionalElement& o) const { return !(*this == o); }

  FunctionalElement scaled(const ScalarFraction& c) const;
  int max_atom_degree() const;

  std::string to_string() const;

 private:
  std::map<FuncMonomial, ScalarFraction> terms_;
};

inline FunctionalElement operator*(const ScalarFraction& c, const FunctionalElement& f) {
  return f.scaled(c);
}
inline FunctionalElement operator*(const Scalar& c, const FunctionalElement& f) {
  return f.scaled(ScalarFraction(c));
}

// Antilinear antihomomorphism on the dual with (l^{+i}_j)^* = S(l^{-j}_i)
// and (l^{-i}_j)^* = S(l^{+j}_i).  Scalars are fixed (q real).
FunctionalElement star_functional(const FunctionalElement& f);

}  // namespace qfodc
