#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfodc/algebra.hpp"
#include "qfodc/fraction.hpp"
#include "qfodc/functional.hpp"
#include "qfodc/pairing.hpp"

namespace qfodc {

// Left-module combination of invariant forms, indexed by form position.
using OneForm = std::map<size_t, AlgebraElement>;

OneForm operator+(const OneForm& a, const OneForm& b);
OneForm operator-(const OneForm& a, const OneForm& b);
OneForm left_mul(const AlgebraElement& a, const OneForm& f);
OneForm scale(const Scalar& c, const OneForm& f);
bool oneform_structurally_zero(const OneForm& f);

// Symbolic coproduct of a functional monomial: sum of (left, right) monomial
// pairs with scalar weights, pruned through the engine's triangularity.
struct CoproductTerm {
  FuncMonomial left;
  FuncMonomial right;
  Scalar coeff;
};
std::vector<CoproductTerm> functional_coproduct(const PairingEngine& eng,
                                                const FuncMonomial& m);

// A left-covariant first-order calculus presented by its quantum tangent
// space: labeled basis functionals, the dual elements defining the invariant
// forms theta_B = omega(dual_B), and the structure functionals f[B][C] with
// Delta(X_C) - eps (x) X_C = sum_B X_B (x) f[B][C].  The bicovariant import
// carries forms and structure functionals only (empty basis).
class Calculus {
 public:
  std::shared_ptr<PairingEngine> engine;
  std::string tag;
  std::vector<std::string> labels;
  std::vector<FunctionalElement> basis;
  std::vector<AlgebraElement> duals;
  std::vector<std::vector<FunctionalElement>> f;
  std::map<std::string, Scalar> constants;
  std::vector<std::string> flags;
  int degree_bound = 3;
  // explicit d of the quantum-space generators for the bicovariant import;
  // empty for tangent-space calculi (computed from the basis instead)
  std::vector<OneForm> dx_override, dy_override;

  const GroupSpec& group() const { return engine->group(); }
  size_t dim() const { return f.size(); }

  // omega(a) = sum_B <X_B, a> theta_B
  OneForm omega(const AlgebraElement& a) const;
  // d a = sum_B a_(1) <X_B, a_(2)> theta_B
  OneForm d(const AlgebraElement& a) const;
  OneForm dx(int i) const;
  OneForm dy(int i) const;
  // theta_B . a, by the structure functionals
  OneForm move_form(size_t b, const AlgebraElement& a) const;
  OneForm move(const OneForm& f, const AlgebraElement& a) const;

  // <X_B, duals[C]> as a matrix; the identity for every built-in family.
  FracMatrix duality_matrix() const;
};

// Diagnostics shared by the builders: any violated assumption raises an
// Error naming the equation tag.
void require_assumption(bool ok, const std::string& tag);

// Builders.  Each certifies its duality matrix, derives the structure
// functionals from the symbolic coproduct, and cross-checks them against the
// defining linear system on words up to the degree bound.
Calculus build_gamma_x(std::shared_ptr<PairingEngine> eng, int bound = 3);
Calculus build_gamma_y(std::shared_ptr<PairingEngine> eng, int bound = 3);
// variant in 1..4; zn must be a diagonal monomial with <zn, u^n_n> != 1 for
// variants 1..3.  Default zn: (l^{-n}_n)^2.
Calculus build_gamma_z(std::shared_ptr<PairingEngine> eng, int variant,
                       std::optional<GroupLike> zn = std::nullopt, int bound = 3);
Calculus build_gamma_full(std::shared_ptr<PairingEngine> eng, int bound = 3);
Calculus build_gamma_row(std::shared_ptr<PairingEngine> eng, int j, int bound = 3);
// the bicovariant calculus consumed through its commutation rule
Calculus build_bicovariant(std::shared_ptr<PairingEngine> eng, int bound = 3);

enum class ElementaryKind { XPlus, XMinus, YPlus, YMinus };
Calculus build_elementary(std::shared_ptr<PairingEngine> eng, ElementaryKind kind, int i,
                          int j, const GroupLike& z, int bound = 3);

// Lemma-style tangent spaces T^+, T^-, T_+, T_- of the recipe section, as
// sums of elementary spaces with the canonical diagonal twists.
Calculus build_recipe_sum(std::shared_ptr<PairingEngine> eng, ElementaryKind kind,
                          int bound = 3);

// Group-like separators for the metric families: Y_i with value 1 on every
// other diagonal entry of the index set and value != 1 at u^i_i.  The
// weight-zero middle entry of odd orthogonal groups needs the diagonal sign
// character; pure q-power monomials are tried first.
std::vector<std::pair<int, GroupLike>> solve_separators(const PairingEngine& eng,
                                                        int exponent_bound);

// The metric-family recipe: generators X_rs for (s,r) in I = {(i,j): i' <= j},
// with X_ii = (value-1)^{-1} (Y_i - eps) for the orthogonal series and the
// diagonal generators omitted for the symplectic one.
Calculus build_recipe_metric(std::shared_ptr<PairingEngine> eng, int exponent_bound = 2,
                             int bound = 3);

}  // namespace qfodc
