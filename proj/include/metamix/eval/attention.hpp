#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "metamix/data/meta_dataset.hpp"
#include "metamix/model/network.hpp"

namespace metamix::eval {

struct AttentionMatrix {
  std::vector<std::string> task_ids;
  numeric::Matrix scores;  // K×K
};

/// score(i, j): mean over task i's instances of
///   log p(y | x without CMask(i)) − log p(y | x without CMask(i) ∪ CMask(j)).
/// Binary tasks use the Bernoulli likelihood of the logit, regression tasks
/// a unit-variance Gaussian. Tasks without instances in `split` get a zero
/// row and a warning.
AttentionMatrix task_attention(const model::Network& net, const data::MetaDataset& meta,
                               data::Split split = data::Split::test);

/// (K+1)×(K+1) grid: header row and first column hold task ids.
void write_attention_csv(const AttentionMatrix& m, std::ostream& out);

}  // namespace metamix::eval
