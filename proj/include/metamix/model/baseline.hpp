#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "metamix/model/network.hpp"

namespace metamix::model {

enum class BaselineKind { single_task_mlp, shared_trunk_multitask };
std::string_view to_string(BaselineKind kind);
BaselineKind parse_baseline_kind(std::string_view text);

struct BaselineConfig {
  BaselineKind kind = BaselineKind::single_task_mlp;
  /// Hidden trunk widths; empty gives logistic regression per head.
  std::vector<std::size_t> hidden;
  std::size_t input_dim = 0;
  std::size_t num_tasks = 1;
  std::uint64_t seed = 0;

  void validate() const;
  friend bool operator==(const BaselineConfig&, const BaselineConfig&) = default;
};

/// ReLU trunk shared by all tasks, one linear logit head per task. The
/// single-task MLP is the one-head case.
class MlpNetwork final : public Network {
 public:
  explicit MlpNetwork(const BaselineConfig& config);

  std::string_view kind() const override { return to_string(config_.kind); }
  std::size_t input_dim() const override { return config_.input_dim; }
  std::size_t num_tasks() const override { return config_.num_tasks; }
  std::unique_ptr<Network> clone() const override;
  ForwardResult forward(const Matrix& x, std::span<const std::uint32_t> tasks) const override;
  void backward(const ForwardCache& cache, std::span<const double> dlogits) override;

  const BaselineConfig& config() const noexcept { return config_; }

 private:
  BaselineConfig config_;
  std::vector<std::size_t> trunk_w_, trunk_b_, head_w_, head_b_;
};

}  // namespace metamix::model
