#include "zxlat/zx/rules.hpp"

namespace zxlat::zx {

namespace {

// Largest state-copy fan-out that still shrinks the diagram.
constexpr std::size_t kCopyFanOut = 2;

struct Step {
  RuleId rule;
  Direction direction;
};

const Step kPriority[] = {
    {RuleId::S, Direction::Forward},   {RuleId::HC, Direction::Forward},
    {RuleId::I, Direction::Forward},   {RuleId::SF, Direction::Forward},
    {RuleId::SC, Direction::Forward},  {RuleId::PI, Direction::Forward},
    {RuleId::HF, Direction::Forward},  {RuleId::CCP, Direction::Forward},
    {RuleId::B, Direction::Forward},   {RuleId::GB, Direction::Forward},
};

bool admissible(const ZxDiagram& d, const RuleMatch& m) {
  switch (m.rule) {
  case RuleId::SC:
    return d.degree(m.anchors[1]) - 1 <= kCopyFanOut;
  case RuleId::PI:
    return d.degree(m.anchors[1]) == 1;
  default:
    return true;
  }
}

} // namespace

SimplifyResult simplify(const ZxDiagram& d, std::size_t maxSteps) {
  SimplifyResult result{d, {}};
  auto& cur = result.diagram;
  for (std::size_t step = 0; step < maxSteps; ++step) {
    bool applied = false;
    for (const auto& s : kPriority) {
      for (const auto& m : findMatches(cur, s.rule, s.direction)) {
        if (!admissible(cur, m)) {
          continue;
        }
        applyInPlace(cur, m);
        result.trace.push_back(m);
        applied = true;
        break;
      }
      if (applied) {
        break;
      }
    }
    if (!applied) {
      break;
    }
  }
  return result;
}

} // namespace zxlat::zx
