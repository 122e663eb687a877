#pragma once

#include "stlstm/matrix.hpp"

namespace stlstm {

double sigmoid(double x);
double dsigmoid(double x);  // derivative at x

// derivatives expressed from the activation output, used on the backward pass
inline double dsigmoid_from_y(double y) { return y * (1.0 - y); }
inline double dtanh_from_y(double y) { return 1.0 - y * y; }

double dtanh(double x);

enum class Activation { kTanh, kSigmoid };

double apply_activation(Activation a, double x);
double activation_deriv_from_y(Activation a, double y);

struct SoftmaxLoss {
  double loss;
  Vector probs;
  Vector dlogits;  // softmax - one_hot(label)
};

// Cross entropy with max-subtracted softmax. Throws std::invalid_argument on
// an out-of-range label.
SoftmaxLoss softmax_cross_entropy(const Vector& logits, int label);

Vector softmax(const Vector& logits);

}  // namespace stlstm
