#pragma once

#include <Eigen/Core>
#include <array>
#include <span>

#include "fnd/label.hpp"
#include "fnd/sparse.hpp"

namespace fnd {

// Multinomial naive Bayes with Laplace/Lidstone smoothing alpha. Feature
// values must be non-negative (counts or TF-IDF). Ties break toward Fake.
struct NBClassifier {
  std::array<double, 2> class_log_prior{};          // (Fake, Real)
  std::array<Eigen::VectorXd, 2> feature_log_prob;  // (Fake, Real)
  double alpha = 1.0;

  // Log-odds: log P(Real|x) - log P(Fake|x) up to a shared constant.
  double decision_value(const SparseVector& x) const;
  Label predict(const SparseVector& x) const {
    return decision_value(x) > 0.0 ? Label::Real : Label::Fake;
  }
  double joint_log_likelihood(const SparseVector& x, Label c) const;
};

NBClassifier train_nb(std::span<const SparseVector> X,
                      std::span<const Label> y, double alpha);

}  // namespace fnd
