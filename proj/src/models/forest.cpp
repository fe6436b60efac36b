#include "fnd/models/forest.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "fnd/errors.hpp"
#include "fnd/rng.hpp"

namespace fnd {

double gini_impurity(double fake, double real) {
  const double total = fake + real;
  if (total <= 0.0) return 0.0;
  const double pf = fake / total;
  const double pr = real / total;
  return 1.0 - pf * pf - pr * pr;
}

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

struct ColumnEntry {
  std::uint32_t row;
  double value;
};

struct SplitCandidate {
  bool valid = false;
  double gini = 0.0;
  std::int32_t feature = -1;
  double threshold = 0.0;
};

class TreeBuilder {
 public:
  TreeBuilder(std::span<const SparseVector> X, std::span<const Label> y,
              const std::vector<std::vector<ColumnEntry>>& columns,
              int max_depth, std::uint32_t features_per_split, Rng& rng)
      : X_(X),
        y_(y),
        columns_(columns),
        max_depth_(max_depth),
        features_per_split_(features_per_split),
        rng_(rng),
        weight_(X.size(), 0),
        mark_(X.size(), 0) {}

  RandomForest::Tree build() {
    // bootstrap sample of size n, with replacement
    const std::size_t n = X_.size();
    std::fill(weight_.begin(), weight_.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++weight_[rng_.uniform_index(n)];
    std::vector<std::uint32_t> rows;
    rows.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i)
      if (weight_[i] > 0) rows.push_back(i);

    tree_.clear();
    grow(std::move(rows), 0);
    return std::move(tree_);
  }

 private:
  std::array<std::uint32_t, 2> label_counts(
      const std::vector<std::uint32_t>& rows) const {
    std::array<std::uint32_t, 2> counts{};
    for (std::uint32_t r : rows)
      counts[static_cast<std::size_t>(y_[r])] += weight_[r];
    return counts;
  }

  std::int32_t make_leaf(const std::array<std::uint32_t, 2>& counts) {
    RandomForest::Node node;
    node.counts = counts;
    tree_.push_back(node);
    return static_cast<std::int32_t>(tree_.size() - 1);
  }

  // Best split of the marked rows on one feature; values gathered from the
  // column's nonzeros plus an implicit zero bucket.
  SplitCandidate evaluate_feature(std::uint32_t feature,
                                  const std::array<std::uint32_t, 2>& totals,
                                  std::uint64_t node_mark) {
    struct ValueCounts {
      double value;
      double fake = 0.0, real = 0.0;
    };
    std::vector<ValueCounts> buckets;
    double nz_fake = 0.0, nz_real = 0.0;
    for (const ColumnEntry& e : columns_[feature]) {
      if (mark_[e.row] != node_mark) continue;
      const double w = weight_[e.row];
      if (y_[e.row] == Label::Fake) {
        nz_fake += w;
      } else {
        nz_real += w;
      }
      buckets.push_back({e.value,
                         y_[e.row] == Label::Fake ? w : 0.0,
                         y_[e.row] == Label::Real ? w : 0.0});
    }
    const double zero_fake = double(totals[0]) - nz_fake;
    const double zero_real = double(totals[1]) - nz_real;
    if (zero_fake + zero_real > 0.0)
      buckets.push_back({0.0, zero_fake, zero_real});
    if (buckets.size() < 2) return {};

    std::sort(buckets.begin(), buckets.end(),
              [](const ValueCounts& a, const ValueCounts& b) {
                return a.value < b.value;
              });
    // merge equal values
    std::size_t out = 0;
    for (std::size_t i = 1; i < buckets.size(); ++i) {
      if (buckets[i].value == buckets[out].value) {
        buckets[out].fake += buckets[i].fake;
        buckets[out].real += buckets[i].real;
      } else {
        buckets[++out] = buckets[i];
      }
    }
    buckets.resize(out + 1);
    if (buckets.size() < 2) return {};

    const double total_fake = double(totals[0]);
    const double total_real = double(totals[1]);
    const double total = total_fake + total_real;
    SplitCandidate best;
    double lf = 0.0, lr = 0.0;
    for (std::size_t i = 0; i + 1 < buckets.size(); ++i) {
      lf += buckets[i].fake;
      lr += buckets[i].real;
      const double rf = total_fake - lf;
      const double rr = total_real - lr;
      const double g = ((lf + lr) * gini_impurity(lf, lr) +
                        (rf + rr) * gini_impurity(rf, rr)) /
                       total;
      if (!best.valid || g < best.gini) {
        best.valid = true;
        best.gini = g;
        best.feature = static_cast<std::int32_t>(feature);
        best.threshold = 0.5 * (buckets[i].value + buckets[i + 1].value);
      }
    }
    return best;
  }

  std::vector<std::uint32_t> sample_features() {
    const std::uint32_t d = X_.front().dim;
    if (features_per_split_ >= d) {
      std::vector<std::uint32_t> all(d);
      for (std::uint32_t j = 0; j < d; ++j) all[j] = j;
      return all;
    }
    std::vector<std::uint32_t> picked;
    std::unordered_set<std::uint32_t> seen;
    picked.reserve(features_per_split_);
    while (picked.size() < features_per_split_) {
      auto j = static_cast<std::uint32_t>(rng_.uniform_index(d));
      if (seen.insert(j).second) picked.push_back(j);
    }
    return picked;
  }

  std::int32_t grow(std::vector<std::uint32_t> rows, int depth) {
    const auto totals = label_counts(rows);
    const bool pure = totals[0] == 0 || totals[1] == 0;
    const bool depth_capped = max_depth_ >= 0 && depth >= max_depth_;
    if (pure || depth_capped || rows.size() < 2) return make_leaf(totals);

    const std::uint64_t node_mark = ++mark_counter_;
    for (std::uint32_t r : rows) mark_[r] = node_mark;

    SplitCandidate best;
    for (std::uint32_t j : sample_features()) {
      SplitCandidate c = evaluate_feature(j, totals, node_mark);
      if (c.valid && (!best.valid || c.gini < best.gini)) best = c;
    }
    if (!best.valid) {
      // none of the sampled features separates this node; fall back to a
      // full scan so consistent data always reaches purity
      for (std::uint32_t j = 0; j < X_.front().dim; ++j) {
        SplitCandidate c = evaluate_feature(j, totals, node_mark);
        if (c.valid && (!best.valid || c.gini < best.gini)) best = c;
      }
    }
    if (!best.valid) return make_leaf(totals);

    std::vector<std::uint32_t> left_rows, right_rows;
    for (std::uint32_t r : rows) {
      const double v = X_[r].at(static_cast<std::uint32_t>(best.feature));
      (v <= best.threshold ? left_rows : right_rows).push_back(r);
    }
    if (left_rows.empty() || right_rows.empty()) return make_leaf(totals);
    rows.clear();
    rows.shrink_to_fit();

    RandomForest::Node node;
    node.feature = best.feature;
    node.threshold = best.threshold;
    node.counts = totals;
    tree_.push_back(node);
    const auto index = static_cast<std::int32_t>(tree_.size() - 1);
    const std::int32_t left = grow(std::move(left_rows), depth + 1);
    const std::int32_t right = grow(std::move(right_rows), depth + 1);
    tree_[index].left = left;
    tree_[index].right = right;
    return index;
  }

  std::span<const SparseVector> X_;
  std::span<const Label> y_;
  const std::vector<std::vector<ColumnEntry>>& columns_;
  int max_depth_;
  std::uint32_t features_per_split_;
  Rng& rng_;
  std::vector<std::uint32_t> weight_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t mark_counter_ = 0;
  RandomForest::Tree tree_;
};

Label tree_predict(const RandomForest::Tree& tree, const SparseVector& x) {
  std::int32_t i = 0;
  while (tree[i].feature >= 0) {
    const double v = x.at(static_cast<std::uint32_t>(tree[i].feature));
    i = v <= tree[i].threshold ? tree[i].left : tree[i].right;
  }
  return tree[i].counts[1] > tree[i].counts[0] ? Label::Real : Label::Fake;
}

}  // namespace

double RandomForest::decision_value(const SparseVector& x) const {
  if (x.dim != dim) throw DimensionMismatchError(dim, x.dim);
  std::int64_t real_votes = 0;
  for (const Tree& tree : trees)
    real_votes += tree_predict(tree, x) == Label::Real ? 1 : -1;
  return double(real_votes) / double(trees.size());
}

RandomForest train_forest(std::span<const SparseVector> X,
                          std::span<const Label> y, int n_trees, int max_depth,
                          std::uint64_t seed) {
  check_inputs(X, y);
  if (n_trees < 1) throw Error("forest needs at least one tree");

  RandomForest forest;
  forest.dim = X.front().dim;
  forest.max_depth = max_depth;
  forest.features_per_split = static_cast<std::uint32_t>(
      std::ceil(std::sqrt(double(forest.dim))));

  std::vector<std::vector<ColumnEntry>> columns(forest.dim);
  for (std::uint32_t i = 0; i < X.size(); ++i) {
    for (std::size_t k = 0; k < X[i].indices.size(); ++k)
      columns[X[i].indices[k]].push_back({i, X[i].values[k]});
  }

  Rng rng(seed);
  TreeBuilder builder(X, y, columns, max_depth, forest.features_per_split,
                      rng);
  forest.trees.reserve(static_cast<std::size_t>(n_trees));
  for (int t = 0; t < n_trees; ++t) forest.trees.push_back(builder.build());
  return forest;
}

}  // namespace fnd
