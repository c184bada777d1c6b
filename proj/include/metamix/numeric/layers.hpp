#pragma once

#include <span>
#include <vector>

#include "metamix/numeric/matrix.hpp"

namespace metamix::numeric {

/// y = x·W + b, b broadcast over rows. x: batch×in, W: in×out, b: 1×out.
Matrix affine(const Matrix& x, const Matrix& w, const Matrix& b);

/// Reverse pass of affine for upstream `dy` (batch×out). dW and db are
/// accumulated (+=); dx, when requested, is overwritten.
void affine_backward(const Matrix& x, const Matrix& w, const Matrix& dy, Matrix& dw, Matrix& db,
                     Matrix* dx);

Matrix relu(const Matrix& x);
/// Passes dy where x > 0; the subgradient at 0 is 0.
Matrix relu_backward(const Matrix& x, const Matrix& dy);

Matrix residual_add(const Matrix& x, const Matrix& f_out);

struct ResidualGrads {
  Matrix dx;
  Matrix df;
};
/// Both branches receive the full upstream gradient.
ResidualGrads residual_add_backward(const Matrix& dy);

/// Max-subtracted softmax onto the unit simplex.
std::vector<double> softmax(std::span<const double> v);
/// dv = y ⊙ (dy − ⟨y, dy⟩) for y = softmax(v).
std::vector<double> softmax_backward(std::span<const double> y, std::span<const double> dy);

double sigmoid(double z);

struct LossGrad {
  double loss;
  double grad;
};

/// Binary cross-entropy on a logit, evaluated as softplus so that large |z|
/// neither overflows nor loses the small tail.
LossGrad logistic_loss_with_logit(double logit, double label);

LossGrad squared_loss(double pred, double target);

}  // namespace metamix::numeric
