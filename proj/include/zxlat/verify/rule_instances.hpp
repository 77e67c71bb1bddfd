#pragma once

#include "zxlat/verify/random.hpp"
#include "zxlat/zx/rules.hpp"

#include <vector>

namespace zxlat::verify {

struct RuleInstance {
  zx::ZxDiagram diagram;
  zx::RuleMatch match;
};

/// Random diagrams that contain the rule's pattern at a known place, with at
/// most 8 boundary legs. Bidirectional rules alternate directions.
std::vector<RuleInstance> ruleInstances(zx::RuleId rule, std::size_t count,
                                        Rng& rng);

} // namespace zxlat::verify
