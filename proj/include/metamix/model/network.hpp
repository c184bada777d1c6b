#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metamix/numeric/matrix.hpp"
#include "metamix/numeric/param_store.hpp"
#include "metamix/numeric/random.hpp"

namespace metamix::model {

using numeric::Matrix;
using numeric::ParamStore;

/// Intermediates of one batched forward pass, consumed by backward.
struct ForwardCache {
  virtual ~ForwardCache() = default;
  const void* owner = nullptr;
  std::uint64_t step = 0;
  std::size_t rows = 0;
  /// Smallest |ReLU input| seen; gradient checks skip probes near kinks.
  double min_abs_preactivation = std::numeric_limits<double>::infinity();
};

struct ForwardResult {
  std::vector<double> logits;
  std::unique_ptr<ForwardCache> cache;
};

/// A multi-head network mapping a dense input row to one logit at the head
/// of that row's task. Parameters live in a ParamStore so optimizers,
/// checkpoints and gradient checks treat every architecture alike.
class Network {
 public:
  virtual ~Network() = default;

  virtual std::string_view kind() const = 0;
  virtual std::size_t input_dim() const = 0;
  virtual std::size_t num_tasks() const = 0;
  virtual std::unique_ptr<Network> clone() const = 0;

  /// Logit of each row of x at head tasks[r].
  virtual ForwardResult forward(const Matrix& x, std::span<const std::uint32_t> tasks) const = 0;
  /// Accumulates into the parameter gradients the gradient of
  /// Σ_r dlogits[r]·logit_r. TrainingError on a cache from another network
  /// or from before the last optimizer step.
  virtual void backward(const ForwardCache& cache, std::span<const double> dlogits) = 0;

  ParamStore& params() noexcept { return params_; }
  const ParamStore& params() const noexcept { return params_; }

 protected:
  void check_inputs(const Matrix& x, std::span<const std::uint32_t> tasks) const;
  void check_cache(const ForwardCache& cache, std::span<const double> dlogits) const;
  void stamp(ForwardCache& cache, std::size_t rows) const;

  ParamStore params_;
};

/// Logits for many rows, evaluated in chunks to bound memory.
std::vector<double> predict_logits(const Network& net, const Matrix& x,
                                   std::span<const std::uint32_t> tasks,
                                   std::size_t chunk_rows = 1024);

/// Weight scales: He for layers feeding a ReLU, LeCun for linear maps.
double he_std(std::size_t fan_in);
double lecun_std(std::size_t fan_in);

/// Registers `<prefix>.w` (in×out, normal with the given stddev; zeros when
/// it is 0) and a zero bias `<prefix>.b` (1×out).
void add_dense(ParamStore& params, const std::string& prefix, std::size_t in, std::size_t out,
               numeric::Rng& rng, double stddev);

}  // namespace metamix::model
