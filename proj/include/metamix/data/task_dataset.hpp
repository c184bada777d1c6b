#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metamix/concepts/schema.hpp"
#include "metamix/data/libsvm.hpp"

namespace metamix::data {

struct TaskDataset {
  concepts::TaskSchema schema;
  /// Vectors index schema.task_vocab().
  InstanceList train;
  InstanceList val;
  InstanceList test;
};

/// A task before alignment: its own vocabulary and splits, no schema yet.
struct TaskSource {
  std::string task_id;
  std::string label_concept;  // empty: label_concept_name(task_id)
  concepts::Vocabulary vocab;
  concepts::LossKind loss_kind = concepts::LossKind::binary;
  InstanceList train;
  InstanceList val;
  InstanceList test;
};

struct AlignedTasks {
  concepts::Vocabulary meta_vocab;
  std::vector<TaskDataset> tasks;
};

/// Seeded shuffle, then the last floor(fraction·n) shuffled instances become
/// validation. Both parts keep their original relative order.
std::pair<InstanceList, InstanceList> split_train_val(InstanceList train, double val_fraction,
                                                      std::uint64_t seed);

/// Builds the meta-vocabulary over all sources and a schema per task, with
/// causal masks estimated on each task's training split.
AlignedTasks align_tasks(std::vector<TaskSource> sources, std::size_t min_support = 1);

/// Per-feature z-scoring fitted on one split. Features with zero spread keep
/// scale 1. Standardized vectors are stored densely (zeros move off zero).
class FeatureScaler {
 public:
  static FeatureScaler fit(std::span<const LabeledInstance> instances, std::size_t dim);
  concepts::ConceptVector apply(const concepts::ConceptVector& v) const;
  void apply(InstanceList& instances) const;
  std::span<const double> mean() const noexcept { return mean_; }
  std::span<const double> scale() const noexcept { return scale_; }

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

}  // namespace metamix::data
