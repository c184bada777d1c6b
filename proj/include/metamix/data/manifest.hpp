#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "metamix/data/meta_dataset.hpp"

namespace metamix::data {

struct ManifestTask {
  std::string task_id;
  std::string label_concept;
  concepts::LossKind loss_kind = concepts::LossKind::binary;
  std::vector<std::string> cmask;
  std::array<std::size_t, 3> sizes{};
  std::array<std::uint64_t, 3> checksums{};
  friend bool operator==(const ManifestTask&, const ManifestTask&) = default;
};

/// An input file as read, before splitting.
struct ManifestSource {
  std::string name;
  std::string path;
  std::size_t features = 0;
  std::size_t train = 0;  // before the validation split
  std::size_t test = 0;
  friend bool operator==(const ManifestSource&, const ManifestSource&) = default;
};

/// Summary of a meta-dataset: vocabulary identity, per-task schema and
/// split checksums. Concept names must not contain whitespace.
struct Manifest {
  std::string meta_vocab_path;
  std::size_t meta_vocab_size = 0;
  std::uint64_t meta_vocab_hash = 0;
  std::vector<ManifestSource> sources;
  std::vector<ManifestTask> tasks;
  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// FNV-1a over ids, labels and (index, value bits) of the projected split.
std::uint64_t split_checksum(const InstanceList& instances);

Manifest describe(const MetaDataset& meta, std::string meta_vocab_path);

void write_manifest(const Manifest& manifest, std::ostream& out);
void save_manifest(const Manifest& manifest, const std::filesystem::path& path);
Manifest read_manifest(std::istream& in, const std::string& source = "<stream>");
Manifest load_manifest(const std::filesystem::path& path);

}  // namespace metamix::data
