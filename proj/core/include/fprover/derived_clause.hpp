#pragma once

#include <cstdint>
#include <vector>

#include "fprover/inference.hpp"

namespace fpr {

// A clause with its provenance inside one refutation attempt. Ids are dense
// and assigned in generation order; parent ids are always smaller than the
// clause's own id.
struct DerivedClause {
  Clause clause;
  uint32_t id = 0;
  InferenceRule rule = InferenceRule::Initial;
  std::vector<uint32_t> parent_ids;  // 0 initial, 1 factoring, 2 resolution
  uint32_t generation_step = 0;      // loop iteration t at creation, 0 for initial
  double cost = 0.0;                 // as scored at creation
};

}  // namespace fpr
