#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "metamix/numeric/matrix.hpp"

namespace metamix::numeric {

struct Parameter {
  std::string name;
  Matrix value;
  Matrix grad;
};

/// Named parameters in insertion order, each with a gradient buffer of the
/// same shape, plus a step counter advanced by the optimizer.
class ParamStore {
 public:
  /// Registers a parameter; names must be unique.
  Matrix& add(std::string name, Matrix init);

  bool contains(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;
  Parameter& at(std::string_view name) { return params_[index_of(name)]; }
  const Parameter& at(std::string_view name) const { return params_[index_of(name)]; }
  Parameter& operator[](std::size_t i) { return params_[i]; }
  const Parameter& operator[](std::size_t i) const { return params_[i]; }

  std::span<Parameter> params() noexcept { return params_; }
  std::span<const Parameter> params() const noexcept { return params_; }
  std::size_t count() const noexcept { return params_.size(); }
  /// Total number of scalar entries across all parameters.
  std::size_t scalar_count() const noexcept;

  void zero_grad();
  double grad_norm() const;
  void scale_grads(double factor);

  std::uint64_t step() const noexcept { return step_; }
  void advance_step() noexcept { ++step_; }
  void set_step(std::uint64_t step) noexcept { step_ = step; }

  /// Copies values (not gradients) from a store with identical layout.
  void assign_values(const ParamStore& other);
  bool same_layout(const ParamStore& other) const;

 private:
  std::vector<Parameter> params_;
  std::unordered_map<std::string, std::size_t> index_;
  std::uint64_t step_ = 0;
};

}  // namespace metamix::numeric
