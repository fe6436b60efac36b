#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fnd/label.hpp"
#include "fnd/sparse.hpp"

namespace fnd {

// Random forest of binary Gini trees. Each tree sees a bootstrap sample of
// the training set; every node considers ceil(sqrt(d)) random features.
// Prediction is a majority vote over trees; ties go to Fake.
struct RandomForest {
  struct Node {
    std::int32_t feature = -1;  // -1 marks a leaf
    double threshold = 0.0;     // x[feature] <= threshold goes left
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::array<std::uint32_t, 2> counts{};  // (Fake, Real) sample counts
  };
  using Tree = std::vector<Node>;

  std::vector<Tree> trees;
  std::uint32_t dim = 0;
  std::int32_t max_depth = -1;  // -1 = unlimited
  std::uint32_t features_per_split = 0;

  // Vote share in [-1, 1]: (real votes - fake votes) / trees.
  double decision_value(const SparseVector& x) const;
  Label predict(const SparseVector& x) const {
    return decision_value(x) > 0.0 ? Label::Real : Label::Fake;
  }
};

// max_depth: -1 for unlimited, 0 trains single-leaf trees.
RandomForest train_forest(std::span<const SparseVector> X,
                          std::span<const Label> y, int n_trees, int max_depth,
                          std::uint64_t seed);

// Gini impurity of a two-class count pair, 1 - sum p^2.
double gini_impurity(double fake, double real);

}  // namespace fnd
