#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "metamix/data/auxiliary.hpp"
#include "metamix/train/adapt.hpp"

namespace metamix::train {

struct SingleTaskConfig {
  data::AuxPolicy policy;
  std::size_t min_support = 1;
  model::MixtureConfig model;
  TrainConfig meta;
  AdaptConfig adapt;
  /// Skip the adaptation stage.
  bool adapt_enabled = true;
};

struct Provenance {
  std::size_t auxiliary_tasks = 0;
  std::string policy;
  std::size_t meta_epochs = 0;
  std::size_t meta_steps = 0;
  std::size_t adapt_epochs = 0;
  double adapt_lr = 0.0;
  std::uint64_t model_seed = 0;
  std::uint64_t meta_seed = 0;
  std::uint64_t adapt_seed = 0;

  std::vector<std::string> lines() const;
};

struct SingleTaskResult {
  data::MetaDataset meta;  // task 0 is the primary task
  std::unique_ptr<model::Network> meta_model;
  std::unique_ptr<model::Network> adapted;  // equals meta_model without adaptation
  TrainLog meta_log;
  std::vector<AdaptTrace> adapt_trace;
  Provenance provenance;
};

/// Meta-trains on the primary task plus its auxiliary concept-prediction
/// tasks, then adapts on the primary task.
SingleTaskResult single_task_meta(data::TaskSource base, const SingleTaskConfig& config);

}  // namespace metamix::train
