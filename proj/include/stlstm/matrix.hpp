#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stlstm {

using Vector = std::vector<double>;

// Row-major dense matrix of doubles. Deliberately minimal: the cells only
// need matrix-vector products, outer-product accumulation and elementwise
// arithmetic, all on small shapes.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0.0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dims");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return a_.size(); }
  bool empty() const { return a_.empty(); }

  double& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

  const double* row(int i) const { return a_.data() + size_t(i) * cols_; }
  double* row(int i) { return a_.data() + size_t(i) * cols_; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  void fill(double v) { a_.assign(a_.size(), v); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

// y = W x
void matvec(const Matrix& W, const double* x, double* y);
Vector matvec(const Matrix& W, const Vector& x);

// y += W x
void matvec_add(const Matrix& W, const double* x, double* y);

// x_grad += W^T dy
void tmatvec_add(const Matrix& W, const double* dy, double* x_grad);

// G += dy x^T
void outer_add(Matrix& G, const double* dy, const double* x);

double dot(const double* a, const double* b, size_t n);

bool all_finite(const double* a, size_t n);

}  // namespace stlstm
