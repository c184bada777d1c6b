#pragma once

#include <cstddef>

namespace metamix::model {

struct MixtureConfig;
struct BaselineConfig;

// Parameter counts from layer shapes. FLOPs count a multiply-add as 2, a
// bias add, residual add or softmax step as 1 per element; ReLU is free.

std::size_t affine_param_count(std::size_t in, std::size_t out);
std::size_t affine_flops(std::size_t in, std::size_t out);

std::size_t expert_param_count(const MixtureConfig& c);
std::size_t gate_param_count(const MixtureConfig& c);
std::size_t head_param_count(const MixtureConfig& c);
std::size_t param_count(const MixtureConfig& c);

std::size_t expert_flops(const MixtureConfig& c);
/// One forward evaluation of one row: all experts, one gate with its
/// softmax (3 per expert: exp, sum, divide), the weighted combine, one head.
std::size_t flop_count(const MixtureConfig& c);

std::size_t param_count(const BaselineConfig& c);
/// One row through the trunk and one head.
std::size_t flop_count(const BaselineConfig& c);

}  // namespace metamix::model
