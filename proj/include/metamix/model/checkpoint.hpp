#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "metamix/model/network.hpp"

namespace metamix::model {

inline constexpr std::uint32_t checkpoint_version = 1;

struct CheckpointInfo {
  std::uint64_t vocab_hash = 0;
  std::vector<std::string> task_ids;
  std::uint64_t seed = 0;
  /// Free-form key=value provenance lines.
  std::vector<std::string> notes;
};

struct LoadedCheckpoint {
  std::unique_ptr<Network> network;
  CheckpointInfo info;
};

/// Layout: 8-byte magic "METAMIX\0", u32 version, u64 header length, JSON
/// header (kind, config, vocabulary hash, seed, task ids, tensor table),
/// then each tensor's row-major doubles in table order. Little-endian.
void write_checkpoint(const Network& net, const CheckpointInfo& info, std::ostream& out);
void save_checkpoint(const Network& net, const CheckpointInfo& info,
                     const std::filesystem::path& path);
LoadedCheckpoint read_checkpoint(std::istream& in, const std::string& source = "<stream>");
LoadedCheckpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace metamix::model
