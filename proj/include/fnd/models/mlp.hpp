#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>

#include "fnd/label.hpp"
#include "fnd/sparse.hpp"

namespace fnd {

// One hidden ReLU layer and a 2-class softmax output, trained with
// mini-batch SGD on cross-entropy. Output order is (Fake, Real).
struct MLPClassifier {
  Eigen::MatrixXd w1;  // hidden x input
  Eigen::VectorXd b1;
  Eigen::MatrixXd w2;  // 2 x hidden
  Eigen::VectorXd b2;

  Eigen::Vector2d logits(const SparseVector& x) const;
  double decision_value(const SparseVector& x) const {
    auto z = logits(x);
    return z[1] - z[0];
  }
  Label predict(const SparseVector& x) const {
    return decision_value(x) > 0.0 ? Label::Real : Label::Fake;
  }
};

// Glorot-uniform initialization from the seed; deterministic.
// Throws NonFiniteLoss if training diverges.
MLPClassifier train_mlp(std::span<const SparseVector> X,
                        std::span<const Label> y, int hidden_size,
                        double learning_rate, int epochs, int batch_size,
                        std::uint64_t seed);

struct MLPGradients {
  Eigen::MatrixXd w1;
  Eigen::VectorXd b1;
  Eigen::MatrixXd w2;
  Eigen::VectorXd b2;
};

// Mean cross-entropy over the batch, and its analytic parameter gradients.
double mlp_loss(const MLPClassifier& model, std::span<const SparseVector> X,
                std::span<const Label> y);
MLPGradients mlp_gradients(const MLPClassifier& model,
                           std::span<const SparseVector> X,
                           std::span<const Label> y);

}  // namespace fnd
