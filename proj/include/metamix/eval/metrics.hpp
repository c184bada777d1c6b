#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

namespace metamix::eval {

struct ConfusionMatrix {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
  std::size_t total() const noexcept { return tp + fp + tn + fn; }
};

/// Predicts positive when probability >= threshold. Labels must be 0/1.
ConfusionMatrix confusion(std::span<const double> probabilities, std::span<const double> labels,
                          double threshold = 0.5);

double accuracy(const ConfusionMatrix& c);
/// F1 of the positive class; 0 when there are no true positives.
double f1_score(const ConfusionMatrix& c);
/// (p_o − p_e) / (1 − p_e); 0 when p_e = 1.
double cohen_kappa(const ConfusionMatrix& c);

/// Mann–Whitney statistic with midranks for ties. MetricError unless both
/// classes are present.
double roc_auc(std::span<const double> scores, std::span<const double> labels);

inline constexpr double log_loss_epsilon = 1e-15;

/// Cross-entropy of the hard 0/1 predictions clipped to [ε, 1−ε]; each
/// error costs −ln ε ≈ 34.54.
double hard_log_loss(const ConfusionMatrix& c, double epsilon = log_loss_epsilon);

struct MetricsReport {
  std::string model;
  std::string dataset;
  std::string split;
  std::string task_id;
  double accuracy = 0.0;
  double roc_auc = 0.0;
  double f1 = 0.0;
  double kappa = 0.0;
  double log_loss = 0.0;
  std::size_t n = 0;
  double threshold = 0.5;
};

MetricsReport compute_metrics(std::span<const double> probabilities, std::span<const double> labels,
                              double threshold = 0.5);

/// Sum over accuracy, AUC, F1 and kappa of (cand − ref)/ref plus
/// (ref − cand)/ref for log loss, in percent. Terms with a zero reference
/// are skipped with a warning.
double overall_score(const MetricsReport& candidate, const MetricsReport& reference);

/// Columns: model,dataset,split,accuracy,auc,f1,kappa,log_loss,n
void write_metrics_header(std::ostream& out);
void write_metrics_row(const MetricsReport& r, std::ostream& out);

}  // namespace metamix::eval
