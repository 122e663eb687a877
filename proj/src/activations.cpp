#include "stlstm/activations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stlstm {

double sigmoid(double x) {
  if (x >= 0.0) {
    const double z = std::exp(-x);
    return 1.0 / (1.0 + z);
  }
  const double z = std::exp(x);
  return z / (1.0 + z);
}

double dsigmoid(double x) {
  const double s = sigmoid(x);
  return s * (1.0 - s);
}

double dtanh(double x) {
  const double t = std::tanh(x);
  return 1.0 - t * t;
}

double apply_activation(Activation a, double x) {
  return a == Activation::kTanh ? std::tanh(x) : sigmoid(x);
}

double activation_deriv_from_y(Activation a, double y) {
  return a == Activation::kTanh ? dtanh_from_y(y) : dsigmoid_from_y(y);
}

Vector softmax(const Vector& logits) {
  Vector p(logits.size());
  const double m = *std::max_element(logits.begin(), logits.end());
  double z = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - m);
    z += p[i];
  }
  for (double& v : p) v /= z;
  return p;
}

SoftmaxLoss softmax_cross_entropy(const Vector& logits, int label) {
  if (logits.empty()) throw std::invalid_argument("softmax_cross_entropy: empty logits");
  if (label < 0 || size_t(label) >= logits.size())
    throw std::invalid_argument("softmax_cross_entropy: label out of range");

  const double m = *std::max_element(logits.begin(), logits.end());
  double z = 0.0;
  for (double v : logits) z += std::exp(v - m);
  const double logz = std::log(z);

  SoftmaxLoss out;
  out.loss = -(logits[label] - m - logz);
  out.probs.resize(logits.size());
  out.dlogits.resize(logits.size());
  for (size_t i = 0; i < logits.size(); ++i) {
    out.probs[i] = std::exp(logits[i] - m - logz);
    out.dlogits[i] = out.probs[i];
  }
  out.dlogits[label] -= 1.0;
  return out;
}

}  // namespace stlstm
