#pragma once

#include <optional>
#include <vector>

#include "qfodc/fraction.hpp"

namespace qfodc {

// Small dense matrix over the fraction field; enough linear algebra for the
// structure-functional solves, span membership, and R-matrix inversion.
class FracMatrix {
 public:
  FracMatrix() = default;
  FracMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  ScalarFraction& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const ScalarFraction& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  static FracMatrix identity(size_t n);
  FracMatrix operator*(const FracMatrix& o) const;
  bool operator==(const FracMatrix& o) const;

  // In-place reduced row echelon form; returns pivot column per pivot row.
  std::vector<size_t> rref();
  size_t rank() const;
  std::optional<FracMatrix> inverse() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<ScalarFraction> a_;
};

// Solves A x = b.  Returns nullopt when inconsistent.  When the solution is
// underdetermined any one solution is returned and *unique is set false.
std::optional<std::vector<ScalarFraction>> solve_linear(const FracMatrix& a,
                                                        const std::vector<ScalarFraction>& b,
                                                        bool* unique = nullptr);

}  // namespace qfodc
