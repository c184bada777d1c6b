#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "metamix/concepts/schema.hpp"
#include "metamix/data/task_dataset.hpp"
#include "metamix/numeric/matrix.hpp"

namespace metamix::data {

enum class Split { train = 0, val = 1, test = 2 };
std::string_view to_string(Split split);

/// One instance of the meta-dataset. `vector` indexes the shared pool of
/// meta-vocabulary vectors, stored unmasked; masking happens when the
/// instance is materialized for the network.
struct MetaInstance {
  std::uint32_t task = 0;
  std::uint32_t vector = 0;
  double label = 0.0;
  std::uint64_t id = 0;
};

/// Dense network input for a set of instances.
struct Batch {
  numeric::Matrix x;
  std::vector<std::uint32_t> task;
  std::vector<double> label;
  std::size_t size() const noexcept { return task.size(); }
};

class MetaDataset {
 public:
  MetaDataset() = default;

  const concepts::Vocabulary& meta_vocab() const noexcept { return meta_vocab_; }
  std::span<const concepts::TaskSchema> schemas() const noexcept { return schemas_; }
  const concepts::TaskSchema& schema(std::size_t task) const { return schemas_.at(task); }
  std::size_t num_tasks() const noexcept { return schemas_.size(); }
  std::size_t input_dim() const noexcept { return meta_vocab_.size(); }
  /// Index of the task with this id; SchemaError when absent.
  std::size_t task_index(std::string_view task_id) const;

  std::span<const MetaInstance> instances(std::size_t task, Split split) const {
    return splits_[static_cast<int>(split)].at(task);
  }
  std::vector<std::size_t> sizes(Split split) const;
  std::size_t total(Split split) const;

  /// The unmasked meta-vocabulary vector of an instance.
  const concepts::ConceptVector& aligned(const MetaInstance& inst) const {
    return pool_.at(inst.vector);
  }

  /// Writes the instance's dense input: its task's causal mask zeroed, and
  /// additionally the mask of `extra_mask_task` when given.
  void materialize(const MetaInstance& inst, std::span<double> out,
                   const concepts::TaskSchema* extra_mask = nullptr) const;
  Batch make_batch(std::span<const MetaInstance* const> instances,
                   const concepts::TaskSchema* extra_mask = nullptr) const;
  Batch make_batch(std::span<const MetaInstance> instances,
                   const concepts::TaskSchema* extra_mask = nullptr) const;

  /// Task rows of one split restricted to the task's own columns, in the
  /// task's own index space: recovers the source split exactly.
  InstanceList project(std::size_t task, Split split) const;

  friend MetaDataset build_meta_dataset(const concepts::Vocabulary& meta_vocab,
                                        std::span<const TaskDataset> tasks);

 private:
  concepts::Vocabulary meta_vocab_;
  std::vector<concepts::TaskSchema> schemas_;
  std::vector<concepts::ConceptVector> pool_;
  std::array<std::vector<std::vector<MetaInstance>>, 3> splits_;
};

/// Re-indexes every task's splits into the meta-vocabulary. Source vectors
/// shared between tasks with equal vocabularies are stored once.
/// SchemaError if a schema was built against a different meta-vocabulary.
MetaDataset build_meta_dataset(const concepts::Vocabulary& meta_vocab,
                               std::span<const TaskDataset> tasks);

}  // namespace metamix::data
