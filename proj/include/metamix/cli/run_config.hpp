#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "metamix/model/baseline.hpp"
#include "metamix/model/mixture.hpp"

namespace metamix::cli {

/// Everything a run needs. Every key has a default; unknown sections or
/// keys are rejected.
struct RunConfig {
  struct Data {
    /// LIBSVM files, one task per file; several files are aligned as tasks
    /// of one meta-dataset.
    std::vector<std::filesystem::path> train;
    std::vector<std::filesystem::path> test;
    std::string name;  // defaults to the first training file's name
    double val_fraction = 0.1;
    std::uint64_t seed = 0;
    bool standardize = false;
    std::size_t min_support = 1;
  } data;
  struct Tasks {
    /// all | sample:K; only single-file runs get auxiliary tasks.
    std::string aux = "all";
  } tasks;
  struct Model {
    std::size_t experts = 3;
    std::size_t depth = 6;
    std::size_t width = 512;
    std::size_t gate_hidden = 32;
    std::size_t head_hidden = 32;
  } model;
  struct MetaTrain {
    std::size_t epochs = 1;
    std::size_t batch = 256;
    double lr = 1e-4;
    std::optional<double> clip;
    std::size_t patience = 0;
    std::size_t eval_every = 0;
  } meta_train;
  struct Adapt {
    std::size_t epochs = 30;
    std::vector<double> lr_grid{1e-6, 3e-6, 1e-5};
    std::size_t batch = 256;
  } adapt;
  struct Baseline {
    model::BaselineKind kind = model::BaselineKind::single_task_mlp;
    std::vector<std::size_t> hidden{256, 128, 64};
    std::size_t epochs = 10;
    std::size_t batch = 256;
    double lr = 1e-3;
    std::size_t patience = 0;
  } baseline;
  struct Eval {
    double threshold = 0.5;
    std::string attention_split = "test";
  } eval;
  struct Output {
    std::filesystem::path dir = "out";
  } output;
};

/// INI text with sections [data] [tasks] [model] [meta_train] [adapt]
/// [baseline] [eval] [output]. Relative paths resolve against `base_dir`.
RunConfig parse_run_config(std::istream& in, const std::string& source = "<stream>",
                           const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);
void write_run_config(const RunConfig& config, std::ostream& out);

}  // namespace metamix::cli
