#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfodc/calculus.hpp"
#include "qfodc/numeric.hpp"
#include "qfodc/report.hpp"

namespace qfodc {

// The three-way zero test: PBW normal form, pairing scan at a degree bound,
// and the numeric contraction at a fixed rational q0.  A check passes only
// when every enabled oracle agrees on zero; a disagreement between oracles
// is a hard failure.
class ZeroOracles {
 public:
  ZeroOracles(std::shared_ptr<PairingEngine> eng, int pairing_bound = 4,
              int numeric_bound = 3);

  struct Outcome {
    bool zero = false;
    std::map<std::string, std::string> flags;  // oracle -> "zero"/"nonzero"/"off"
    std::string witness;
  };
  Outcome is_zero(const AlgebraElement& e) const;

  const PairingEngine& engine() const { return *eng_; }

 private:
  std::shared_ptr<PairingEngine> eng_;
  std::shared_ptr<NumericEngine> num_;
  int pairing_bound_;
  int numeric_bound_;
  bool pbw_enabled_;
};

// Coefficientwise zero test of a one-form difference, reporting the first
// offending invariant form.
CheckResult check_oneform_zero(const std::string& id, const std::string& anchor,
                               const OneForm& diff, const ZeroOracles& oracles,
                               const Calculus& c);

// d x_i . x_j / d y_i . y_j / d x_i . y_j / d y_i . x_j tables for the
// gamma families, with exact coefficient sets.  The delta-dependent
// correction terms of the mixed variants vanish at delta = 1.
VerificationReport verify_gamma_x_relations(const Calculus& cx, const ZeroOracles& oracles);
VerificationReport verify_gamma_y_relations(const Calculus& cy, const ZeroOracles& oracles);
VerificationReport verify_gamma_z_relations(const Calculus& cz, int variant,
                                            const ZeroOracles& oracles);
VerificationReport verify_bicovariant_relations(const Calculus& cbi,
                                                const ZeroOracles& oracles);

// theta_n = sum_i y_i dx_i and eta_n = sum_i gamma_n gamma_i^{-1} x_i dy_i
VerificationReport verify_invariant_form_presentations(const Calculus& cz,
                                                       const ZeroOracles& oracles);

// Leibniz compatibility: d(ab) = a db + da b for generator pairs, after
// commutation-table expansion.
VerificationReport verify_leibniz(const Calculus& c, const ZeroOracles& oracles);

// Innerness: gamma-z1 satisfies dz = (delta-1)^{-1}(theta_n z - z theta_n)
// on every generator; the other variants produce an unsolvability witness.
VerificationReport check_inner(const Calculus& cz, int variant, const ZeroOracles& oracles);

// Star closure through express_in_span: a basis maps into a target span.
VerificationReport check_star_closure(const Calculus& source, const Calculus& target,
                                      const std::string& id_prefix, int bound);

// Commutation tables agree on the quantum-space generators, with the forms
// identified through their defining dual elements.
VerificationReport check_same_induced(const Calculus& a, const Calculus& b,
                                      const ZeroOracles& oracles);

// (id (x) pi) Delta fixes exactly the right-invariant part: all x_i, y_i and
// their length-2 products pass; u^1_1 is the negative control.
VerificationReport check_projection_invariance(const GroupSpec& g);

// Every functional monomial up to max_len kills every two-sided single
// letter multiple of every defining relation.
VerificationReport check_rtt_annihilation(const PairingEngine& eng, int max_len);

// Case-2 recipe: f_i^{-1} g_i (l^{+i}_i)^2 independent of i, as functionals.
CheckResult check_quadratic_closure_condition(const PairingEngine& eng,
                                              const std::vector<GroupLike>& f_list,
                                              const std::vector<GroupLike>& g_list,
                                              const std::string& id);

// Support pattern of the metric recipe: <X_rs, u^i_j> != 0 iff (r,s) = (j,i)
// over the index set I.
VerificationReport check_recipe_support(const Calculus& recipe);

// Hopf-side spot checks: counit, coassociativity (as convolution
// associativity), antipode axiom through the cofactor expansion.
VerificationReport check_hopf_axioms(const PairingEngine& eng, int words_len = 2);

}  // namespace qfodc
