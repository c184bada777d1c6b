#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "metamix/train/trainer.hpp"

namespace metamix::train {

struct AdaptConfig {
  std::size_t epochs = 30;
  std::vector<double> lr_grid{1e-6, 3e-6, 1e-5};
  std::size_t batch_size = 256;
  std::uint64_t seed = 0;

  void validate() const;
};

struct AdaptTrace {
  double lr = 0.0;
  std::size_t epoch = 0;
  double train_loss = 0.0;  // mean over the epoch's instances
  double val_loss = 0.0;    // mean over the task's validation split
};

struct AdaptResult {
  std::unique_ptr<model::Network> network;
  /// 0 when the unadapted starting point won.
  double chosen_lr = 0.0;
  std::size_t chosen_epoch = 0;
  double initial_val_loss = 0.0;
  double best_val_loss = 0.0;
  std::vector<AdaptTrace> trace;
};

/// Fine-tunes a copy of `trained` on one task's training split (loss at
/// that task's head) for each learning rate in the grid, with fresh Adam
/// state and shuffled epochs. The snapshot with the lowest validation loss
/// over all rates and epochs wins; the starting point is a candidate, so
/// with no validation data or 0 epochs `trained` is returned unchanged.
/// SchemaError when `trained_vocab_hash` differs from the dataset's.
AdaptResult online_adapt(const model::Network& trained, std::uint64_t trained_vocab_hash,
                         const data::MetaDataset& meta, std::size_t task,
                         const AdaptConfig& config);

}  // namespace metamix::train
