#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "metamix/cli/run_config.hpp"
#include "metamix/data/manifest.hpp"
#include "metamix/numeric/gradcheck.hpp"

namespace metamix::cli {

/// Runs one command line (without the program name) and returns the exit
/// status: 0 iff every output was written and no check failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Seed streams derived from the run seed.
enum SeedStream : std::uint64_t {
  split_seed = 1,
  model_seed = 2,
  sampler_seed = 3,
  adapt_seed = 4,
  aux_seed = 5,
  baseline_model_seed = 6,
  baseline_sampler_seed = 7,
};

struct PreparedData {
  std::string dataset;
  /// Split (and standardized, if configured) sources, one per input file.
  std::vector<data::TaskSource> sources;
  std::vector<data::ManifestSource> summaries;
  data::MetaDataset meta;
};

/// Reads, splits and aligns the configured files. A single file gets its
/// auxiliary tasks per the [tasks] policy.
PreparedData prepare_data(const RunConfig& config);

/// Indices of tasks that are not auxiliary.
std::vector<std::size_t> primary_tasks(const data::MetaDataset& meta);

/// Finite-difference check of a freshly initialized two-expert, two-task
/// mixture on random inputs.
numeric::GradCheckResult gradcheck_tiny_mixture(std::uint64_t seed);

}  // namespace metamix::cli
