#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "metamix/data/meta_dataset.hpp"
#include "metamix/model/baseline.hpp"
#include "metamix/model/mixture.hpp"
#include "metamix/numeric/layers.hpp"

namespace metamix::train {

struct TrainConfig {
  std::size_t epochs = 1;
  std::size_t batch_size = 256;
  double lr = 1e-4;
  std::uint64_t seed = 0;
  /// Evaluations without validation improvement before stopping; 0 never stops.
  std::size_t patience = 0;
  /// Global gradient-norm clip; off when empty.
  std::optional<double> clip;
  /// Steps between validation evaluations; 0 evaluates at each epoch end.
  std::size_t eval_every = 0;

  void validate() const;
};

struct LogRow {
  std::size_t step = 0;
  double epoch = 0.0;
  /// Mean per-instance loss over the steps since the previous row.
  double train_loss = 0.0;
  /// Mean per-instance validation loss; NaN without validation data.
  double val_loss = 0.0;
  double wall_time = 0.0;
};

struct TrainLog {
  std::vector<LogRow> rows;
  std::size_t steps = 0;
  bool early_stopped = false;
  /// Step of the snapshot with the lowest validation loss.
  std::size_t best_step = 0;
  double best_val_loss = 0.0;
};

/// Per-instance loss at its own head: logistic on the logit for binary
/// tasks, squared error on the raw output for regression tasks.
numeric::LossGrad instance_loss(concepts::LossKind kind, double logit, double label);

/// Summed loss of a batch; with `net` non-const and `accumulate` set, the
/// summed gradient is added to the parameter gradients. TrainingError on a
/// non-finite instance loss, naming step, task and value.
double batch_loss(model::Network& net, const data::MetaDataset& meta, const data::Batch& batch,
                  bool accumulate, std::size_t step = 0);

/// Summed per-instance loss over one split of the listed tasks (all tasks
/// when `tasks` is empty).
double split_loss(const model::Network& net, const data::MetaDataset& meta, data::Split split,
                  std::span<const std::size_t> tasks = {});

/// Mini-batch Adam on mixed batches drawn in proportion to task training
/// sizes, each instance scored at its own head and the losses summed. One
/// epoch is ceil(total training instances / batch size) steps. With
/// patience set, training stops after that many evaluations without
/// improvement and the best snapshot is restored.
TrainLog fit(model::Network& net, const data::MetaDataset& meta, const TrainConfig& config);

struct TrainedModel {
  std::unique_ptr<model::Network> network;
  TrainLog log;
};

/// Builds a mixture sized for `meta` (input_dim and num_tasks are taken
/// from the dataset) and fits it.
TrainedModel meta_train(const data::MetaDataset& meta, model::MixtureConfig model_config,
                        const TrainConfig& config);

/// Same training loop for an MLP baseline sized for `meta`.
TrainedModel train_baseline(const data::MetaDataset& meta, model::BaselineConfig model_config,
                            const TrainConfig& config);

void write_run_log(std::span<const LogRow> rows, std::ostream& out);

}  // namespace metamix::train
