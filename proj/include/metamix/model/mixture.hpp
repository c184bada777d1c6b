#pragma once

#include <cstdint>
#include <vector>

#include "metamix/model/network.hpp"

namespace metamix::model {

struct MixtureConfig {
  std::size_t num_experts = 3;
  std::size_t expert_depth = 6;
  std::size_t expert_width = 512;
  std::size_t gate_hidden = 32;
  std::size_t head_hidden = 32;
  std::size_t input_dim = 0;
  std::size_t num_tasks = 1;
  std::uint64_t seed = 0;

  /// ConfigError unless every count is at least 1.
  void validate() const;
  friend bool operator==(const MixtureConfig&, const MixtureConfig&) = default;
};

/// Shared experts mixed per task by a softmax gate, then a per-task head:
///   Expert_j(x) = residual stack over a linear projection of x,
///   v = Σ_j softmax(Gate_i(x))_j · Expert_j(x),  logit = Head_i(v).
/// Residual blocks are y ← y + relu(y·W + b) at constant width; gates are
/// x → relu(gate_hidden) → E logits; heads are v → relu(head_hidden) → 1.
class MixtureModel final : public Network {
 public:
  explicit MixtureModel(const MixtureConfig& config);

  std::string_view kind() const override { return "mixture"; }
  std::size_t input_dim() const override { return config_.input_dim; }
  std::size_t num_tasks() const override { return config_.num_tasks; }
  std::unique_ptr<Network> clone() const override;
  ForwardResult forward(const Matrix& x, std::span<const std::uint32_t> tasks) const override;
  void backward(const ForwardCache& cache, std::span<const double> dlogits) override;

  const MixtureConfig& config() const noexcept { return config_; }

  /// Gate softmax of task `task` for each row of x.
  Matrix gate_weights(const Matrix& x, std::uint32_t task) const;

  struct ExpertParams {
    std::size_t in_w, in_b;
    std::vector<std::size_t> block_w, block_b;
  };
  struct TaskParams {
    std::size_t gate_hidden_w, gate_hidden_b, gate_out_w, gate_out_b;
    std::size_t head_hidden_w, head_hidden_b, head_out_w, head_out_b;
  };
  const ExpertParams& expert_params(std::size_t j) const { return experts_.at(j); }
  const TaskParams& task_params(std::size_t i) const { return tasks_.at(i); }

 private:
  MixtureConfig config_;
  std::vector<ExpertParams> experts_;
  std::vector<TaskParams> tasks_;
};

}  // namespace metamix::model
