#pragma once

#include <cstdint>
#include <vector>

namespace fnd {

// Sparse feature vector: strictly increasing indices, no stored zeros.
struct SparseVector {
  std::vector<std::uint32_t> indices;
  std::vector<double> values;
  std::uint32_t dim = 0;

  std::size_t nnz() const { return indices.size(); }

  void push_back(std::uint32_t index, double value) {
    if (value == 0.0) return;
    indices.push_back(index);
    values.push_back(value);
  }

  double l2_norm() const;
  // Value at a given index (0 when absent); binary search.
  double at(std::uint32_t index) const;
  std::vector<double> to_dense() const;
};

}  // namespace fnd
