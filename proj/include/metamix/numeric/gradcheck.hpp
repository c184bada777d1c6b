#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "metamix/numeric/param_store.hpp"

namespace metamix::numeric {

/// One evaluation of a deterministic loss at the store's current values.
/// `kink_margin` is the smallest |pre-activation| of any ReLU touched by the
/// evaluation; plain smooth losses leave it at +inf.
struct LossProbe {
  double loss = 0.0;
  double kink_margin = std::numeric_limits<double>::infinity();
};

struct GradCheckOptions {
  double h = 1e-5;
  /// Coordinates sampled per parameter; 0 checks every coordinate.
  std::size_t coords_per_param = 0;
  std::uint64_t seed = 0;
  /// Coordinates whose perturbation brings a ReLU input within
  /// kink_factor·h of zero are skipped.
  double kink_factor = 10.0;
};

struct GradCheckResult {
  double max_rel_error = 0.0;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::string worst_param;
  std::size_t worst_index = 0;
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;
};

/// Compares the gradients already stored in `params` against central
/// differences of `loss`. Relative error uses max(|analytic|, |numeric|, 1e-8)
/// as denominator. Parameter values are restored on return.
GradCheckResult finite_diff_check(ParamStore& params, const std::function<LossProbe()>& loss,
                                  const GradCheckOptions& options = {});

}  // namespace metamix::numeric
