#pragma once

#include <cstdint>
#include <vector>

#include "metamix/numeric/param_store.hpp"

namespace metamix::numeric {

struct AdamState {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::uint64_t t = 0;
  std::vector<Matrix> m;  // indexed like ParamStore
  std::vector<Matrix> v;
};

/// Bias-corrected Adam update applied in place; advances the store's step
/// counter and zeroes the gradients afterwards. Moment buffers are created on
/// first use.
void adam_step(ParamStore& params, AdamState& state, double lr);

}  // namespace metamix::numeric
