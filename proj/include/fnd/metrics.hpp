#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <span>

#include "fnd/label.hpp"

namespace fnd {

// 2x2 counts indexed [true label][predicted label] in (Fake, Real) order.
struct ConfusionMatrix {
  std::array<std::array<std::size_t, 2>, 2> counts{};

  std::size_t total() const;
  std::size_t at(Label truth, Label predicted) const {
    return counts[static_cast<std::size_t>(truth)]
                 [static_cast<std::size_t>(predicted)];
  }
};

ConfusionMatrix confusion_matrix(std::span<const Label> y_true,
                                 std::span<const Label> y_pred);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

// Accuracy plus support-weighted precision/recall/F1. Zero-denominator
// precision/recall are defined as 0. Weighted recall always equals
// accuracy.
struct EvalReport {
  double accuracy = 0.0;
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
  std::array<ClassMetrics, 2> per_class{};  // (Fake, Real)

  bool operator==(const EvalReport&) const = default;
};

EvalReport weighted_metrics(const ConfusionMatrix& cm);

// Percentages with two decimals, like "95.70 95.71 95.70 95.70".
void print_report_line(std::ostream& os, std::string_view name,
                       const EvalReport& report);
void print_report(std::ostream& os, const EvalReport& report,
                  const ConfusionMatrix& cm);
// Machine-readable: "accuracy=0.9570" etc.
void print_report_kv(std::ostream& os, const EvalReport& report);

}  // namespace fnd
