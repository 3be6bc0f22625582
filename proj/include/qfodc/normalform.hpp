#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qfodc/algebra.hpp"
#include "qfodc/group.hpp"
#include "qfodc/rmatrix.hpp"

namespace qfodc {

// Generating relations of the quantum matrix bialgebra:
// sum_ab Rhat^{ij}_{ab} u^a_k u^b_l - sum_ab u^i_a u^j_b Rhat^{ab}_{kl},
// one element per (i,j,k,l).  For the metric families the entries of
// u C u^t C^{-1} - I and C u^t C^{-1} u - I are appended.
std::vector<AlgebraElement> rtt_relations(const GroupSpec& g);

// Quadratic straightening rules solved out of the RTT relations: every
// descending adjacent pair rewrites into row-major-sorted words.  Derivation
// certifies that the reduced relation span pivots exactly on the descending
// pairs (the PBW certificate at degree two).
class StraighteningRules {
 public:
  static std::shared_ptr<const StraighteningRules> for_group(const GroupSpec& g);

  const GroupSpec& group() const { return g_; }
  // replacement of the descending product l1*l2 as a sorted combination
  const std::vector<std::pair<Word, Scalar>>& rule(const Letter& l1, const Letter& l2) const;
  bool is_descending(const Letter& l1, const Letter& l2) const { return l2 < l1; }

 private:
  friend class RulesBuilder;
  GroupSpec g_ = GroupSpec::make(GroupFamily::GLq, 1);
  std::map<std::pair<Letter, Letter>, std::vector<std::pair<Word, Scalar>>> rules_;
};

// Row-major PBW normal form for glq/slq.  Letters must be parity 0 (expand
// antipodes first).  For slq the quantum determinant is reduced to 1.
AlgebraElement normal_form(const AlgebraElement& a, const GroupSpec& g);

// Ideal-membership test via the straightening backend.  The second form
// first expands antipoded letters through quantum cofactors.
bool pbw_is_zero(const AlgebraElement& a, const GroupSpec& g);
bool pbw_is_zero_expanded(const AlgebraElement& a, const GroupSpec& g);

// Same rewriting with the opposite pair-selection strategy; the randomized
// confluence diamond test compares it against normal_form.
AlgebraElement normal_form_rightmost(const AlgebraElement& a, const GroupSpec& g);

}  // namespace qfodc
