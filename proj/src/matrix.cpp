#include "stlstm/matrix.hpp"

#include <cmath>

namespace stlstm {

void matvec(const Matrix& W, const double* x, double* y) {
  const int r = W.rows(), c = W.cols();
  for (int i = 0; i < r; ++i) {
    const double* wi = W.row(i);
    double s = 0.0;
    for (int j = 0; j < c; ++j) s += wi[j] * x[j];
    y[i] = s;
  }
}

Vector matvec(const Matrix& W, const Vector& x) {
  if (int(x.size()) != W.cols()) throw std::invalid_argument("matvec: dim mismatch");
  Vector y(W.rows());
  matvec(W, x.data(), y.data());
  return y;
}

void matvec_add(const Matrix& W, const double* x, double* y) {
  const int r = W.rows(), c = W.cols();
  for (int i = 0; i < r; ++i) {
    const double* wi = W.row(i);
    double s = 0.0;
    for (int j = 0; j < c; ++j) s += wi[j] * x[j];
    y[i] += s;
  }
}

void tmatvec_add(const Matrix& W, const double* dy, double* x_grad) {
  const int r = W.rows(), c = W.cols();
  for (int i = 0; i < r; ++i) {
    const double* wi = W.row(i);
    const double d = dy[i];
    for (int j = 0; j < c; ++j) x_grad[j] += wi[j] * d;
  }
}

void outer_add(Matrix& G, const double* dy, const double* x) {
  const int r = G.rows(), c = G.cols();
  for (int i = 0; i < r; ++i) {
    double* gi = G.row(i);
    const double d = dy[i];
    for (int j = 0; j < c; ++j) gi[j] += d * x[j];
  }
}

double dot(const double* a, const double* b, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

bool all_finite(const double* a, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (!std::isfinite(a[i])) return false;
  return true;
}

}  // namespace stlstm
