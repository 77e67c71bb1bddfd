#pragma once

#include "zxlat/zx/diagram.hpp"

#include <string>
#include <vector>

namespace zxlat::zx {

enum class RuleId { SF, I, HC, SC, PI, CC, CCP, B, GB, HF, S, EULER };

enum class Direction { Forward, Backward };

/// Anchor layout per rule (ids are node ids unless noted):
///   SF    [a, b]              same-colour spiders sharing a plain wire
///   I     [v] | [v, wire]     phase-0 degree-2 spider | self-loop on v
///   HC    [v]                 phase-0 degree-2 spider between two H wires
///   SC    [state, target]
///   PI    [pi spider, target]
///   CC    [v]                 forward: all legs H; backward: all legs plain
///   CCP   [v]                 forward: X -> Z; backward: Z -> X
///   B     fwd [a1, a2, b1, b2]; bwd [u, v] (u on the a-side)
///   GB    [a..., b...]        split by colour of the first anchor
///   HF    [u, v, wire, wire]
///   S     [spiders of an isolated component]
///   EULER fwd [wire]; bwd [z, x, z] chain
struct RuleMatch {
  RuleId rule = RuleId::SF;
  std::vector<int> anchors;
  Direction direction = Direction::Forward;

  bool operator==(const RuleMatch& other) const = default;
  bool operator<(const RuleMatch& other) const;
};

std::string ruleName(RuleId rule);
RuleId ruleFromName(const std::string& name);
const std::vector<RuleId>& allRules();

/// Every match of the rule (both directions where the rule has two),
/// sorted by direction then anchors.
std::vector<RuleMatch> findMatches(const ZxDiagram& d, RuleId rule);
std::vector<RuleMatch> findMatches(const ZxDiagram& d, RuleId rule,
                                   Direction direction);

/// Rewrites at the match. Throws StaleMatch if the anchors no longer fit.
ZxDiagram apply(const ZxDiagram& d, const RuleMatch& m);
void applyInPlace(ZxDiagram& d, const RuleMatch& m);

/// Recolours a spider and toggles the Hadamard flag of each leg (self-loops
/// keep their flag).
void recolour(ZxDiagram& d, int v);

struct SimplifyResult {
  ZxDiagram diagram;
  std::vector<RuleMatch> trace;
};

/// Fixed-priority rewriting until no rule in the strategy matches:
/// S, HC, I, SF, SC, PI, HF, CCP (X to Z), then B and GB forward.
SimplifyResult simplify(const ZxDiagram& d, std::size_t maxSteps = 1000000);

/// (spiders, wires, X spiders, Hadamard wires); strictly decreases along
/// every simplify step.
struct SizeMeasure {
  std::size_t spiders = 0;
  std::size_t wires = 0;
  std::size_t xSpiders = 0;
  std::size_t hadamards = 0;
  auto operator<=>(const SizeMeasure&) const = default;
};
SizeMeasure sizeMeasure(const ZxDiagram& d);

} // namespace zxlat::zx
