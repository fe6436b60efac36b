#include "fnd/models/mlp.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "fnd/errors.hpp"
#include "fnd/rng.hpp"

namespace fnd {

namespace {

void check_inputs(std::span<const SparseVector> X, std::span<const Label> y) {
  if (X.size() != y.size()) throw DimensionMismatchError(X.size(), y.size());
  if (X.size() < 2) throw SingleClassError();
  bool has_fake = false, has_real = false;
  for (Label l : y) (l == Label::Fake ? has_fake : has_real) = true;
  if (!has_fake || !has_real) throw SingleClassError();
  for (const auto& x : X) {
    if (x.dim != X.front().dim)
      throw DimensionMismatchError(X.front().dim, x.dim);
  }
}

Eigen::VectorXd hidden_preactivation(const MLPClassifier& m,
                                     const SparseVector& x) {
  Eigen::VectorXd z1 = m.b1;
  for (std::size_t k = 0; k < x.indices.size(); ++k)
    z1 += m.w1.col(x.indices[k]) * x.values[k];
  return z1;
}

Eigen::Vector2d softmax(const Eigen::Vector2d& z) {
  const double mx = z.maxCoeff();
  Eigen::Vector2d e = (z.array() - mx).exp();
  return e / e.sum();
}

struct Forward {
  Eigen::VectorXd z1;
  Eigen::VectorXd a1;
  Eigen::Vector2d probs;
};

Forward forward(const MLPClassifier& m, const SparseVector& x) {
  Forward f;
  f.z1 = hidden_preactivation(m, x);
  f.a1 = f.z1.cwiseMax(0.0);
  f.probs = softmax(m.w2 * f.a1 + m.b2);
  return f;
}

}  // namespace

Eigen::Vector2d MLPClassifier::logits(const SparseVector& x) const {
  if (static_cast<std::int64_t>(x.dim) != w1.cols())
    throw DimensionMismatchError(w1.cols(), x.dim);
  Eigen::VectorXd a1 = hidden_preactivation(*this, x).cwiseMax(0.0);
  return w2 * a1 + b2;
}

double mlp_loss(const MLPClassifier& model, std::span<const SparseVector> X,
                std::span<const Label> y) {
  double sum = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    Forward f = forward(model, X[i]);
    sum += -std::log(
        std::max(f.probs[static_cast<std::size_t>(y[i])], 1e-300));
  }
  return sum / double(X.size());
}

MLPGradients mlp_gradients(const MLPClassifier& model,
                           std::span<const SparseVector> X,
                           std::span<const Label> y) {
  MLPGradients g;
  g.w1 = Eigen::MatrixXd::Zero(model.w1.rows(), model.w1.cols());
  g.b1 = Eigen::VectorXd::Zero(model.b1.size());
  g.w2 = Eigen::MatrixXd::Zero(model.w2.rows(), model.w2.cols());
  g.b2 = Eigen::VectorXd::Zero(model.b2.size());
  const double inv_n = 1.0 / double(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    const SparseVector& x = X[i];
    Forward f = forward(model, x);
    Eigen::Vector2d delta2 = f.probs;
    delta2[static_cast<std::size_t>(y[i])] -= 1.0;
    Eigen::VectorXd delta1 =
        (model.w2.transpose() * delta2).cwiseProduct(
            (f.z1.array() > 0.0).cast<double>().matrix());
    g.w2 += inv_n * delta2 * f.a1.transpose();
    g.b2 += inv_n * delta2;
    for (std::size_t k = 0; k < x.indices.size(); ++k)
      g.w1.col(x.indices[k]) += inv_n * x.values[k] * delta1;
    g.b1 += inv_n * delta1;
  }
  return g;
}

MLPClassifier train_mlp(std::span<const SparseVector> X,
                        std::span<const Label> y, int hidden_size,
                        double learning_rate, int epochs, int batch_size,
                        std::uint64_t seed) {
  check_inputs(X, y);
  if (hidden_size < 1) throw Error("hidden size must be >= 1");
  if (learning_rate <= 0.0) throw Error("learning rate must be positive");
  if (epochs < 1) throw Error("epochs must be >= 1");
  if (batch_size < 1) throw Error("batch size must be >= 1");

  const auto dim = static_cast<Eigen::Index>(X.front().dim);
  const auto h = static_cast<Eigen::Index>(hidden_size);
  Rng rng(seed);

  MLPClassifier m;
  m.w1.resize(h, dim);
  m.b1 = Eigen::VectorXd::Zero(h);
  m.w2.resize(2, h);
  m.b2 = Eigen::VectorXd::Zero(2);
  const double bound1 = std::sqrt(6.0 / double(dim + h));
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index r = 0; r < h; ++r)
      m.w1(r, j) = rng.uniform(-bound1, bound1);
  const double bound2 = std::sqrt(6.0 / double(h + 2));
  for (Eigen::Index j = 0; j < h; ++j)
    for (Eigen::Index r = 0; r < 2; ++r) m.w2(r, j) = rng.uniform(-bound2, bound2);

  std::vector<std::size_t> order(X.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Eigen::VectorXd> delta1s;
  std::vector<Eigen::Vector2d> delta2s;
  std::vector<Eigen::VectorXd> a1s;

  for (int epoch = 0; epoch < epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t begin = 0; begin < order.size();
         begin += static_cast<std::size_t>(batch_size)) {
      const std::size_t end =
          std::min(order.size(), begin + static_cast<std::size_t>(batch_size));
      const std::size_t n = end - begin;
      delta1s.assign(n, Eigen::VectorXd());
      delta2s.assign(n, Eigen::Vector2d());
      a1s.assign(n, Eigen::VectorXd());

      double batch_loss = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = order[begin + k];
        Forward f = forward(m, X[i]);
        batch_loss -= std::log(
            std::max(f.probs[static_cast<std::size_t>(y[i])], 1e-300));
        Eigen::Vector2d delta2 = f.probs;
        delta2[static_cast<std::size_t>(y[i])] -= 1.0;
        delta2s[k] = delta2;
        delta1s[k] = (m.w2.transpose() * delta2)
                         .cwiseProduct(
                             (f.z1.array() > 0.0).cast<double>().matrix());
        a1s[k] = std::move(f.a1);
      }
      if (!std::isfinite(batch_loss)) throw NonFiniteLossError();

      const double step = learning_rate / double(n);
      for (std::size_t k = 0; k < n; ++k) {
        const SparseVector& x = X[order[begin + k]];
        m.w2.noalias() -= step * delta2s[k] * a1s[k].transpose();
        m.b2 -= step * delta2s[k];
        for (std::size_t e = 0; e < x.indices.size(); ++e)
          m.w1.col(x.indices[e]) -= step * x.values[e] * delta1s[k];
        m.b1 -= step * delta1s[k];
      }
    }
  }
  return m;
}

}  // namespace fnd
