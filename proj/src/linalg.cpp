#include "qfodc/linalg.hpp"

#include "qfodc/error.hpp"

namespace qfodc {

FracMatrix FracMatrix::identity(size_t n) {
  FracMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = ScalarFraction(Scalar(1));
  return m;
}

FracMatrix FracMatrix::operator*(const FracMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch");
  FracMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  return r;
}

bool FracMatrix::operator==(const FracMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

std::vector<size_t> FracMatrix::rref() {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    // pick the structurally simplest nonzero pivot in column c
    size_t best = rows_;
    size_t best_size = SIZE_MAX;
    for (size_t i = r; i < rows_; ++i) {
      if (at(i, c).is_zero()) continue;
      size_t sz = at(i, c).num().terms().size() + at(i, c).den().terms().size();
      if (sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best == rows_) continue;
    if (best != r)
      for (size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(best, j));
    ScalarFraction inv = at(r, c).inverse();
    for (size_t j = c; j < cols_; ++j) at(r, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      ScalarFraction f = at(i, c);
      for (size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t FracMatrix::rank() const {
  FracMatrix m = *this;
  return m.rref().size();
}

std::optional<FracMatrix> FracMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  FracMatrix aug(rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = ScalarFraction(Scalar(1));
  }
  auto pivots = aug.rref();
  if (pivots.size() != rows_) return std::nullopt;
  for (size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] != k) return std::nullopt;
  FracMatrix inv(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::optional<std::vector<ScalarFraction>> solve_linear(const FracMatrix& a,
                                                        const std::vector<ScalarFraction>& b,
                                                        bool* unique) {
  if (b.size() != a.rows()) throw Error("rhs size mismatch");
  FracMatrix aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = aug.rref();
  for (size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == a.cols()) return std::nullopt;  // 0 = 1 row
  std::vector<ScalarFraction> x(a.cols());
  for (size_t k = 0; k < pivots.size(); ++k) {
    // row k: x[pivot] + sum(free terms) = rhs; free variables set to 0
    x[pivots[k]] = aug.at(k, a.cols());
  }
  if (unique) *unique = (pivots.size() == a.cols());
  return x;
}

}  // namespace qfodc
