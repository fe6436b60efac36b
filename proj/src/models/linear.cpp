#include "fnd/models/linear.hpp"

#include <cmath>
#include <numeric>

#include "fnd/errors.hpp"
#include "fnd/rng.hpp"

namespace fnd {

namespace {

void check_training_inputs(std::span<const SparseVector> X,
                           std::span<const Label> y) {
  if (X.size() != y.size())
    throw DimensionMismatchError(X.size(), y.size());
  if (X.size() < 2) throw SingleClassError();
  bool has_fake = false, has_real = false;
  for (Label l : y) (l == Label::Fake ? has_fake : has_real) = true;
  if (!has_fake || !has_real) throw SingleClassError();
  const std::uint32_t dim = X.front().dim;
  for (const auto& x : X) {
    if (x.dim != dim) throw DimensionMismatchError(dim, x.dim);
  }
}

double sparse_dot(const Eigen::VectorXd& w, const SparseVector& x) {
  double s = 0.0;
  for (std::size_t k = 0; k < x.indices.size(); ++k)
    s += w[x.indices[k]] * x.values[k];
  return s;
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

double LinearClassifier::decision_value(const SparseVector& x) const {
  if (static_cast<std::int64_t>(x.dim) != weights.size())
    throw DimensionMismatchError(weights.size(), x.dim);
  return sparse_dot(weights, x) + bias;
}

LinearClassifier train_linear(std::span<const SparseVector> X,
                              std::span<const Label> y, LossKind loss,
                              double lambda, int epochs, std::uint64_t seed) {
  check_training_inputs(X, y);
  if (lambda <= 0.0) throw Error("lambda must be positive");
  if (epochs < 1) throw Error("epochs must be >= 1");

  const std::uint32_t dim = X.front().dim;
  // w is kept as scale * v so the L2 decay costs O(1) per step and updates
  // cost O(nnz).
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  double scale = 1.0;
  double bias = 0.0;

  Rng rng(seed);
  std::vector<std::size_t> order(X.size());
  std::iota(order.begin(), order.end(), 0);

  std::size_t t = 0;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (lambda * double(t));
      const double yi = label_sign(y[i]);
      const SparseVector& x = X[i];
      const double margin = yi * (scale * sparse_dot(v, x) + bias);

      // decay w by (1 - eta*lambda) == (1 - 1/t); at t == 1 this zeroes w
      if (t == 1) {
        scale = 1.0;
        v.setZero();
      } else {
        scale *= 1.0 - 1.0 / double(t);
        if (scale < 1e-9) {
          v *= scale;
          scale = 1.0;
        }
      }

      double step = 0.0;
      if (loss == LossKind::Hinge) {
        if (margin < 1.0) step = eta * yi;
      } else {
        step = eta * yi * sigmoid(-margin);
      }
      if (step != 0.0) {
        const double factor = step / scale;
        for (std::size_t k = 0; k < x.indices.size(); ++k)
          v[x.indices[k]] += factor * x.values[k];
        bias += step;
      }
    }
  }

  LinearClassifier model;
  model.weights = scale * v;
  model.bias = bias;
  model.loss = loss;
  model.lambda = lambda;
  return model;
}

double linear_objective(const LinearClassifier& model,
                        std::span<const SparseVector> X,
                        std::span<const Label> y) {
  double loss_sum = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const double m = label_sign(y[i]) * model.decision_value(X[i]);
    if (model.loss == LossKind::Hinge) {
      loss_sum += std::max(0.0, 1.0 - m);
    } else {
      loss_sum += std::log1p(std::exp(-m));
    }
  }
  return 0.5 * model.lambda * model.weights.squaredNorm() +
         loss_sum / double(X.size());
}

}  // namespace fnd
