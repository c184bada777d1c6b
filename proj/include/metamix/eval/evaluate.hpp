#pragma once

#include <cstdint>
#include <vector>

#include "metamix/data/meta_dataset.hpp"
#include "metamix/eval/metrics.hpp"
#include "metamix/model/network.hpp"

namespace metamix::eval {

struct Predictions {
  std::vector<double> outputs;  // probability for binary tasks, raw value for regression
  std::vector<double> labels;
};

/// Outputs of `net` on one split of one task, inputs pad-masked for it.
Predictions predict(const model::Network& net, const data::MetaDataset& meta, std::size_t task,
                    data::Split split);

/// Metrics of a binary task on one split; fills task_id and split.
MetricsReport evaluate_task(const model::Network& net, const data::MetaDataset& meta,
                            std::size_t task, data::Split split, double threshold = 0.5);

}  // namespace metamix::eval
