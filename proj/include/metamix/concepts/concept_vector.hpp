#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace metamix::concepts {

struct ConceptEntry {
  std::uint32_t index;
  double value;
  friend bool operator==(const ConceptEntry&, const ConceptEntry&) = default;
};

/// Sparse concept vector: strictly increasing indices with finite values.
/// Immutable; copies share storage.
class ConceptVector {
 public:
  ConceptVector();
  /// Validates ordering and finiteness (SchemaError otherwise).
  explicit ConceptVector(std::vector<ConceptEntry> entries);
  /// Keeps the nonzero coordinates of a dense vector.
  static ConceptVector from_dense(std::span<const double> dense);

  std::span<const ConceptEntry> entries() const noexcept { return *entries_; }
  std::size_t nnz() const noexcept { return entries_->size(); }
  bool empty() const noexcept { return entries_->empty(); }
  /// 0 for absent coordinates.
  double value_at(std::uint32_t index) const;
  /// Throws SchemaError if any index is >= dim.
  void check_bounds(std::size_t dim) const;
  /// Address of the shared storage; equal for copies of one vector.
  const void* storage_id() const noexcept { return entries_.get(); }

  friend bool operator==(const ConceptVector& a, const ConceptVector& b) {
    return *a.entries_ == *b.entries_;
  }

 private:
  std::shared_ptr<const std::vector<ConceptEntry>> entries_;
};

}  // namespace metamix::concepts

namespace metamix::concepts {

/// One entity: its concept vector, label value and a stable identity.
struct LabeledInstance {
  ConceptVector features;
  double label = 0.0;
  std::uint64_t id = 0;
  friend bool operator==(const LabeledInstance&, const LabeledInstance&) = default;
};

}  // namespace metamix::concepts
