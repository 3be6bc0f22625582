#pragma once

#include <array>
#include <map>
#include <optional>

#include "qfodc/group.hpp"
#include "qfodc/linalg.hpp"
#include "qfodc/scalar.hpp"

namespace qfodc {

// Sparse N^2 x N^2 matrix indexed R[{i,j},{k,l}] with exact entries.
class RMatrix {
 public:
  explicit RMatrix(int n) : n_(n) {}

  int n() const { return n_; }
  Scalar entry(int i, int j, int k, int l) const;
  void set_entry(int i, int j, int k, int l, const Scalar& v);
  const std::map<std::array<int, 4>, Scalar>& entries() const { return entries_; }

  RMatrix compose(const RMatrix& o) const;  // matrix product
  bool is_identity() const;
  RMatrix scaled(const Scalar& c) const;
  RMatrix operator-(const RMatrix& o) const;
  bool operator==(const RMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }

  // Exact inverse by linear solve over the fraction field; entries must come
  // out polynomial again (they do for all built-in families).
  RMatrix inverse() const;

  // (R x I)(I x R)(R x I) == (I x R)(R x I)(I x R) on N^3, exactly.
  bool braid_relation_holds() const;

 private:
  int n_;
  std::map<std::array<int, 4>, Scalar> entries_;
};

// The braid-form R-matrix of the fundamental corepresentation.  GLq and SLq
// share the same matrix (the SLq root enters the pairings, not R itself).
RMatrix build_rhat(const GroupSpec& g);

// Heaviside with theta(0) = 0.
inline int theta_step(int k) { return k > 0 ? 1 : 0; }

}  // namespace qfodc
