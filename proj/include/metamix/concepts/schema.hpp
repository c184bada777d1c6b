#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metamix/concepts/concept_vector.hpp"
#include "metamix/concepts/vocabulary.hpp"

namespace metamix::concepts {

enum class LossKind { binary, regression };

std::string_view to_string(LossKind kind);
LossKind parse_loss_kind(std::string_view text);

/// A task's view of the meta-vocabulary: its own concepts, the concepts that
/// trivially determine its label (the causal mask, always holding the label)
/// and the complement it may learn from.
class TaskSchema {
 public:
  /// Validates: label ∈ cmask, cmask ⊆ meta, task vocabulary ⊆ meta.
  static TaskSchema create(std::string task_id, std::string label_concept, Vocabulary task_vocab,
                           std::set<std::string> cmask, const Vocabulary& meta_vocab,
                           LossKind loss_kind);

  const std::string& task_id() const noexcept { return task_id_; }
  const std::string& label_concept() const noexcept { return label_concept_; }
  const Vocabulary& task_vocab() const noexcept { return *task_vocab_; }
  const std::set<std::string>& cmask() const noexcept { return cmask_; }
  const Vocabulary& aug_vocab() const noexcept { return *aug_vocab_; }
  LossKind loss_kind() const noexcept { return loss_kind_; }

  std::size_t meta_size() const noexcept { return mask_.size(); }
  std::uint64_t meta_hash() const noexcept { return meta_hash_; }
  /// Meta index of each task-vocabulary concept.
  std::span<const std::uint32_t> task_to_meta() const noexcept { return task_to_meta_; }
  /// Meta index of each augmented-vocabulary concept.
  std::span<const std::uint32_t> aug_to_meta() const noexcept { return aug_to_meta_; }
  /// True for meta coordinates in the causal mask.
  bool masked(std::size_t meta_index) const { return mask_[meta_index] != 0; }
  std::span<const char> mask() const noexcept { return mask_; }

 private:
  TaskSchema() = default;

  std::string task_id_;
  std::string label_concept_;
  std::shared_ptr<const Vocabulary> task_vocab_;
  std::set<std::string> cmask_;
  std::shared_ptr<const Vocabulary> aug_vocab_;
  LossKind loss_kind_ = LossKind::binary;
  std::uint64_t meta_hash_ = 0;
  std::vector<std::uint32_t> task_to_meta_;
  std::vector<std::uint32_t> aug_to_meta_;
  std::vector<char> mask_;
};

/// Empirical causal mask: the label plus every candidate concept that is
/// active (nonzero) on at least `min_support` instances and always co-occurs
/// with one label value. Vectors index into `candidates`.
std::set<std::string> compute_cmask(std::span<const LabeledInstance> instances,
                                    const Vocabulary& candidates, std::string_view label_concept,
                                    std::size_t min_support = 1);

/// meta_vocab minus cmask, in meta order. SchemaError if cmask ⊄ meta_vocab.
Vocabulary augmented_vocab(const Vocabulary& meta_vocab, const std::set<std::string>& cmask);

enum class VectorSpace { task, augmented };

/// Dense vector over the meta-vocabulary with the causal-mask coordinates
/// zeroed. `v` indexes the schema's task vocabulary or its augmented
/// vocabulary, per `space`.
std::vector<double> pad_mask(const ConceptVector& v, const TaskSchema& schema,
                             const Vocabulary& meta_vocab, VectorSpace space = VectorSpace::task);

/// As pad_mask, writing into `out` (size |meta|), which is overwritten.
void pad_mask_into(const ConceptVector& v, const TaskSchema& schema, std::span<double> out,
                   VectorSpace space = VectorSpace::task);

}  // namespace metamix::concepts
