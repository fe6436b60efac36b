#include "fnd/metrics.hpp"

#include <iomanip>

#include "fnd/errors.hpp"

namespace fnd {

std::size_t ConfusionMatrix::total() const {
  return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1];
}

ConfusionMatrix confusion_matrix(std::span<const Label> y_true,
                                 std::span<const Label> y_pred) {
  if (y_true.size() != y_pred.size() || y_true.empty())
    throw LengthMismatchError(y_true.size(), y_pred.size());
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    ++cm.counts[static_cast<std::size_t>(y_true[i])]
               [static_cast<std::size_t>(y_pred[i])];
  }
  return cm;
}

EvalReport weighted_metrics(const ConfusionMatrix& cm) {
  const std::size_t total = cm.total();
  if (total == 0) throw EmptyMatrixError();

  EvalReport r;
  std::size_t correct = 0;
  for (std::size_t c = 0; c < 2; ++c) {
    const std::size_t tp = cm.counts[c][c];
    const std::size_t fn = cm.counts[c][1 - c];
    const std::size_t fp = cm.counts[1 - c][c];
    ClassMetrics& m = r.per_class[c];
    m.support = tp + fn;
    m.precision = (tp + fp) > 0 ? double(tp) / double(tp + fp) : 0.0;
    m.recall = (tp + fn) > 0 ? double(tp) / double(tp + fn) : 0.0;
    m.f1 = (m.precision + m.recall) > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    correct += tp;

    const double weight = double(m.support) / double(total);
    r.weighted_precision += weight * m.precision;
    r.weighted_recall += weight * m.recall;
    r.weighted_f1 += weight * m.f1;
  }
  r.accuracy = double(correct) / double(total);
  return r;
}

namespace {
double pct(double v) { return 100.0 * v; }
}  // namespace

void print_report_line(std::ostream& os, std::string_view name,
                       const EvalReport& report) {
  os << name << std::fixed << std::setprecision(2) << ' '
     << pct(report.accuracy) << ' ' << pct(report.weighted_precision) << ' '
     << pct(report.weighted_recall) << ' ' << pct(report.weighted_f1) << '\n';
  os.unsetf(std::ios::fixed);
}

void print_report(std::ostream& os, const EvalReport& report,
                  const ConfusionMatrix& cm) {
  os << std::fixed << std::setprecision(2);
  os << "                 Acc      P      R     F1\n";
  os << "weighted      " << std::setw(6) << pct(report.accuracy) << ' '
     << std::setw(6) << pct(report.weighted_precision) << ' ' << std::setw(6)
     << pct(report.weighted_recall) << ' ' << std::setw(6)
     << pct(report.weighted_f1) << '\n';
  for (Label l : kLabels) {
    const auto& m = report.per_class[static_cast<std::size_t>(l)];
    os << std::left << std::setw(14) << to_string(l) << std::right
       << "       " << std::setw(6) << pct(m.precision) << ' ' << std::setw(6)
       << pct(m.recall) << ' ' << std::setw(6) << pct(m.f1) << "  (support "
       << m.support << ")\n";
  }
  os << "confusion matrix (rows: true, cols: predicted; fake, real)\n";
  for (std::size_t t = 0; t < 2; ++t) {
    os << "  " << std::setw(6) << cm.counts[t][0] << ' ' << std::setw(6)
       << cm.counts[t][1] << '\n';
  }
  os.unsetf(std::ios::fixed);
}

void print_report_kv(std::ostream& os, const EvalReport& report) {
  os << std::fixed << std::setprecision(4);
  os << "accuracy=" << report.accuracy << '\n';
  os << "weighted_precision=" << report.weighted_precision << '\n';
  os << "weighted_recall=" << report.weighted_recall << '\n';
  os << "weighted_f1=" << report.weighted_f1 << '\n';
  os.unsetf(std::ios::fixed);
}

}  // namespace fnd
