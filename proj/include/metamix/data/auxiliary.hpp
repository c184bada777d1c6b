#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "metamix/data/task_dataset.hpp"

namespace metamix::data {

/// Which concepts of a single task get an auxiliary prediction task.
struct AuxPolicy {
  enum class Kind { all, sample };
  Kind kind = Kind::all;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  /// "all" or "sample:K".
  static AuxPolicy parse(std::string_view text, std::uint64_t seed = 0);
  std::string to_string() const;
};

/// Auxiliary task id for concept `name`.
std::string aux_task_id(std::string_view name);

/// One auxiliary task per selected concept x of the base task: the label is
/// x's value, inputs are the base vector plus the base label over
/// `meta_vocab` (which must be the base vocabulary plus its label). Binary
/// when x only takes 0/1 on train, otherwise regression on values
/// standardized over train. Concepts constant on train keep unit scale.
std::vector<TaskDataset> build_auxiliary_tasks(const TaskDataset& base,
                                               const concepts::Vocabulary& meta_vocab,
                                               const AuxPolicy& policy,
                                               std::size_t min_support = 1);

struct SingleTaskSetup {
  concepts::Vocabulary meta_vocab;
  /// The primary task first, then the auxiliary tasks.
  std::vector<TaskDataset> tasks;
};

/// Aligns a single task against its own vocabulary plus label and appends
/// its auxiliary tasks.
SingleTaskSetup build_single_task_setup(TaskSource base, const AuxPolicy& policy,
                                        std::size_t min_support = 1);

}  // namespace metamix::data
