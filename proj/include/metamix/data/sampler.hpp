#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "metamix/data/meta_dataset.hpp"
#include "metamix/numeric/random.hpp"

namespace metamix::data {

/// Draws (task, instance) pairs with replacement: the task in proportion to
/// its training size, the instance uniformly within the task.
class BatchSampler {
 public:
  BatchSampler(std::span<const std::size_t> task_sizes, std::size_t batch_size,
               std::uint64_t seed);

  struct Draw {
    std::uint32_t task;
    std::size_t index;
  };

  std::vector<Draw> next();
  std::size_t batch_size() const noexcept { return batch_size_; }
  /// Normalized task weights.
  std::vector<double> weights() const;
  std::span<const double> cumulative() const noexcept { return cumulative_; }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<double> cumulative_;
  std::size_t batch_size_;
  numeric::Rng rng_;
};

/// One mixed training batch drawn from `meta`'s training splits.
std::vector<const MetaInstance*> sample_batch(const MetaDataset& meta, BatchSampler& sampler);

}  // namespace metamix::data
