#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "metamix/concepts/concept_vector.hpp"
#include "metamix/concepts/vocabulary.hpp"

namespace metamix::data {

using concepts::LabeledInstance;
using InstanceList = std::vector<LabeledInstance>;

struct LibsvmData {
  InstanceList instances;
  /// Largest 1-based feature index seen.
  std::size_t max_index = 0;
};

/// Parses "label idx:val ..." lines. Indices are 1-based and strictly
/// increasing; they are stored 0-based. Labels in {-1,+1} or {0,1} map to
/// {0,1}. Blank lines are skipped. Instance ids are id_base + ordinal.
LibsvmData parse_libsvm(std::istream& in, const std::string& source = "<stream>",
                        std::uint64_t id_base = 0);
LibsvmData parse_libsvm(const std::filesystem::path& path, std::uint64_t id_base = 0);

/// Inverse of parse_libsvm for {0,1} labels (written as 0/1).
void write_libsvm(std::span<const LabeledInstance> instances, std::ostream& out);

/// Feature names "f<k>" for k = 1..count, zero-padded so lexicographic and
/// numeric order agree.
concepts::Vocabulary libsvm_feature_vocab(std::size_t count);

}  // namespace metamix::data
