#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "metamix/concepts/schema.hpp"
#include "metamix/model/mixture.hpp"

namespace metamix::model {

struct LearnerConfig {
  std::size_t input_dim = 0;
  std::size_t width = 8;
  std::size_t depth = 1;
  std::uint64_t seed = 0;
  friend bool operator==(const LearnerConfig&, const LearnerConfig&) = default;
};

/// Single-task residual MLP with exactly one expert's architecture; its
/// logit is coordinate 0 of the final hidden state.
class ResidualLearner final : public Network {
 public:
  explicit ResidualLearner(const LearnerConfig& config);

  std::string_view kind() const override { return "residual_learner"; }
  std::size_t input_dim() const override { return config_.input_dim; }
  std::size_t num_tasks() const override { return 1; }
  std::unique_ptr<Network> clone() const override;
  ForwardResult forward(const Matrix& x, std::span<const std::uint32_t> tasks) const override;
  void backward(const ForwardCache& cache, std::span<const double> dlogits) override;

  const LearnerConfig& config() const noexcept { return config_; }

 private:
  LearnerConfig config_;
};

struct EmbeddingOptions {
  std::size_t gate_hidden = 1;
  std::size_t head_hidden = 2;
  /// Gate logit margin in favour of the task's own expert.
  double margin = 50.0;
};

/// Mixture with one expert per learner such that task i's output on a
/// pad-masked input equals learner i's output on it. Learner i is copied
/// into expert i with its weights on CMask(i) inputs zeroed; gate i puts
/// logit `margin` on expert i; head i passes coordinate 0 through a
/// relu(u) − relu(−u) pair. Learners must share input_dim = |C_meta|,
/// width and depth; head_hidden must be at least 2.
std::unique_ptr<MixtureModel> embed_single_task_learners(
    std::span<const ResidualLearner* const> learners,
    std::span<const concepts::TaskSchema> schemas, const EmbeddingOptions& options = {});

}  // namespace metamix::model
