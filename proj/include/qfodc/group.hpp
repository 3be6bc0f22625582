#pragma once

#include <string>
#include <vector>

#include "qfodc/scalar.hpp"

namespace qfodc {

enum class GroupFamily { GLq, SLq, Oq, Spq };

std::string family_name(GroupFamily f);
GroupFamily family_from_name(const std::string& s);

// Immutable description of one quantum group in the fundamental
// corepresentation: the size N, the metric data for the orthogonal and
// symplectic series, the square-of-antipode weights gamma_i, and the SL_q
// root z with z^N = q^{-1}.
class GroupSpec {
 public:
  static GroupSpec make(GroupFamily family, int n);

  GroupFamily family() const { return family_; }
  int n() const { return n_; }
  // +1 for Oq, -1 for Spq; 0 otherwise.
  int epsilon() const { return epsilon_; }
  // Exponent denominator needed by this group's scalars (N for SLq, 2 for
  // odd orthogonal, else 1).
  long long exponent_denominator() const { return exp_denom_; }

  bool has_metric() const { return family_ == GroupFamily::Oq || family_ == GroupFamily::Spq; }
  bool has_quantum_determinant() const { return family_ == GroupFamily::GLq; }
  bool has_pbw_backend() const {
    return family_ == GroupFamily::GLq || family_ == GroupFamily::SLq;
  }
  bool has_gamma() const { return !gamma_.empty(); }

  // gamma_i with S^2(u^i_j) = gamma_i u^i_j gamma_j^{-1}; GLq/SLq only.
  const Scalar& gamma(int i) const;
  // Antidiagonal metric entry C^i_{i'} (1-based i); Oq/Spq only.
  const Scalar& metric_entry(int i) const;
  int conjugate_index(int i) const { return n_ - i + 1; }
  // z for SLq, 1 otherwise.
  const Scalar& z_factor() const { return z_; }

  std::string name() const;

  bool operator==(const GroupSpec& o) const {
    return family_ == o.family_ && n_ == o.n_;
  }

 private:
  GroupFamily family_ = GroupFamily::GLq;
  int n_ = 0;
  int epsilon_ = 0;
  long long exp_denom_ = 1;
  std::vector<Scalar> gamma_;
  std::vector<Scalar> metric_;
  Scalar z_ = Scalar(1);
};

}  // namespace qfodc
