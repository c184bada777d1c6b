#pragma once

#include <cstdint>
#include <vector>

#include "metamix/data/task_dataset.hpp"

namespace metamix::data {

/// Binary tasks over one shared latent space. Each entity has a latent z;
/// its dense features are a fixed noisy linear map of z, and task t's label
/// is 1[u_t·z + e > 0] with related directions u_t = normalize(u + spread·δ_t).
/// Every entity also carries `leak_features` indicators "leak<k>" that fire
/// when u_leak·z + e exceeds a non-negative threshold, where u_leak is the
/// direction of task `leak_task` (with the same noise draw e for that task's
/// own entities, so there a firing indicator implies a positive label).
/// Other tasks flip a `label_flip` fraction of labels so the indicators stay
/// informative for them without implying their labels.
struct SyntheticConfig {
  std::size_t num_tasks = 3;
  std::size_t latent_dim = 16;
  std::size_t features = 32;
  std::size_t train_per_task = 100;
  std::size_t val_per_task = 50;
  std::size_t test_per_task = 1000;
  double feature_noise = 0.5;
  double label_noise = 0.5;
  double spread = 0.3;
  std::size_t leak_features = 4;
  std::size_t leak_task = 1;
  double label_flip = 0.1;
  std::uint64_t seed = 0;
};

/// Task ids are "task<t>".
std::vector<TaskSource> make_related_tasks(const SyntheticConfig& config);

}  // namespace metamix::data
