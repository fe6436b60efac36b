#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <vector>

#include "fnd/label.hpp"
#include "fnd/sparse.hpp"

namespace fnd {

enum class LossKind { Hinge, Logistic };

// Linear model trained by Pegasos-style SGD: step size 1/(lambda*t) over
// shuffled examples, L2 regularization on the weights only. Hinge gives a
// linear SVM, logistic gives logistic regression. Real maps to +1.
struct LinearClassifier {
  Eigen::VectorXd weights;
  double bias = 0.0;
  LossKind loss = LossKind::Hinge;
  double lambda = 1e-4;

  double decision_value(const SparseVector& x) const;
  Label predict(const SparseVector& x) const {
    return decision_value(x) > 0.0 ? Label::Real : Label::Fake;
  }
};

LinearClassifier train_linear(std::span<const SparseVector> X,
                              std::span<const Label> y, LossKind loss,
                              double lambda, int epochs, std::uint64_t seed);

// Regularized empirical objective: lambda/2 ||w||^2 + mean loss.
double linear_objective(const LinearClassifier& model,
                        std::span<const SparseVector> X,
                        std::span<const Label> y);

}  // namespace fnd
