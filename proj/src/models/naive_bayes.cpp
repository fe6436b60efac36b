#include "fnd/models/naive_bayes.hpp"

#include <cmath>

#include "fnd/errors.hpp"

namespace fnd {

double NBClassifier::joint_log_likelihood(const SparseVector& x,
                                          Label c) const {
  const auto& logp = feature_log_prob[static_cast<std::size_t>(c)];
  if (static_cast<std::int64_t>(x.dim) != logp.size())
    throw DimensionMismatchError(logp.size(), x.dim);
  double s = class_log_prior[static_cast<std::size_t>(c)];
  for (std::size_t k = 0; k < x.indices.size(); ++k)
    s += x.values[k] * logp[x.indices[k]];
  return s;
}

double NBClassifier::decision_value(const SparseVector& x) const {
  return joint_log_likelihood(x, Label::Real) -
         joint_log_likelihood(x, Label::Fake);
}

NBClassifier train_nb(std::span<const SparseVector> X,
                      std::span<const Label> y, double alpha) {
  if (X.size() != y.size()) throw DimensionMismatchError(X.size(), y.size());
  if (X.size() < 2) throw SingleClassError();
  if (alpha <= 0.0) throw Error("alpha must be positive");
  const std::uint32_t dim = X.front().dim;

  std::array<Eigen::VectorXd, 2> sums = {Eigen::VectorXd::Zero(dim),
                                         Eigen::VectorXd::Zero(dim)};
  std::array<std::size_t, 2> counts{};
  for (std::size_t i = 0; i < X.size(); ++i) {
    const SparseVector& x = X[i];
    if (x.dim != dim) throw DimensionMismatchError(dim, x.dim);
    auto& sum = sums[static_cast<std::size_t>(y[i])];
    ++counts[static_cast<std::size_t>(y[i])];
    for (std::size_t k = 0; k < x.indices.size(); ++k) {
      if (x.values[k] < 0.0) throw NegativeFeatureError();
      sum[x.indices[k]] += x.values[k];
    }
  }
  if (counts[0] == 0 || counts[1] == 0) throw SingleClassError();

  NBClassifier model;
  model.alpha = alpha;
  for (std::size_t c = 0; c < 2; ++c) {
    const double total = sums[c].sum() + alpha * double(dim);
    model.feature_log_prob[c] =
        ((sums[c].array() + alpha) / total).log().matrix();
    model.class_log_prior[c] =
        std::log(double(counts[c]) / double(X.size()));
  }
  return model;
}

}  // namespace fnd
