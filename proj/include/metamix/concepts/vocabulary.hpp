#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace metamix::concepts {

/// Ordered set of unique concept names with a reverse index.
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Keeps the given order; duplicates raise SchemaError.
  explicit Vocabulary(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  std::span<const std::string> names() const noexcept { return names_; }

  bool contains(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws SchemaError when absent.
  std::size_t index_of(std::string_view name) const;

  /// FNV-1a over the newline-joined names; identifies a vocabulary across
  /// checkpoints and manifests.
  std::uint64_t hash() const noexcept { return hash_; }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

/// One name per line, index = 0-based line number.
void write_vocabulary(const Vocabulary& vocab, std::ostream& out);
void save_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path);
Vocabulary read_vocabulary(std::istream& in, const std::string& source = "<stream>");
Vocabulary load_vocabulary(const std::filesystem::path& path);

/// Concept name under which task `task_id`'s label joins the meta-vocabulary.
std::string label_concept_name(std::string_view task_id);

/// Lexicographically sorted union of all task concepts and labels.
/// Raises ConfigError on empty input.
Vocabulary align_vocabularies(std::span<const Vocabulary> task_vocabs,
                              std::span<const std::string> labels);

}  // namespace metamix::concepts
