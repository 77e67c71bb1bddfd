#include "zxlat/errors.hpp"
#include "zxlat/eval/contract.hpp"
#include "zxlat/verify/random.hpp"
#include "zxlat/verify/rule_instances.hpp"
#include "zxlat/zx/rules.hpp"

#include <gtest/gtest.h>

using namespace zxlat;
using zx::Direction;
using zx::NodeKind;
using zx::Phase;
using zx::RuleId;
using zx::ZxDiagram;

namespace {

class EveryRule : public ::testing::TestWithParam<RuleId> {};

} // namespace

TEST_P(EveryRule, RewritePreservesTheLinearMapExactly) {
  verify::Rng rng(1000 + static_cast<int>(GetParam()));
  for (const auto& inst : verify::ruleInstances(GetParam(), 24, rng)) {
    const auto before = eval::contract(inst.diagram);
    const auto after = eval::contract(zx::apply(inst.diagram, inst.match));
    EXPECT_LT(maxAbsDiff(before, after), 1e-10) << zx::ruleName(GetParam());
  }
}

TEST_P(EveryRule, PlantedMatchIsFound) {
  verify::Rng rng(2000 + static_cast<int>(GetParam()));
  for (const auto& inst : verify::ruleInstances(GetParam(), 8, rng)) {
    const auto all = zx::findMatches(inst.diagram, GetParam(), inst.match.direction);
    EXPECT_FALSE(all.empty()) << zx::ruleName(GetParam());
  }
}

TEST_P(EveryRule, EveryFoundMatchIsSound) {
  verify::Rng rng(3000 + static_cast<int>(GetParam()));
  for (int trial = 0; trial < 12; ++trial) {
    const auto d = verify::randomDiagram(rng, 4 + rng() % 3, 4, 3);
    const auto before = eval::contract(d);
    for (const auto& m : zx::findMatches(d, GetParam())) {
      EXPECT_LT(maxAbsDiff(before, eval::contract(zx::apply(d, m))), 1e-10)
          << zx::ruleName(GetParam());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rules, EveryRule, ::testing::ValuesIn(zx::allRules()),
                         [](const auto& info) { return zx::ruleName(info.param); });

TEST(RuleNames, RoundTrip) {
  for (auto r : zx::allRules()) {
    EXPECT_EQ(zx::ruleFromName(zx::ruleName(r)), r);
  }
  EXPECT_EQ(zx::allRules().size(), 12U);
  EXPECT_THROW(zx::ruleFromName("nope"), ParseError);
}

TEST(Apply, StaleMatchThrows) {
  ZxDiagram d;
  const int a = d.addSpider(NodeKind::Z);
  const int b = d.addSpider(NodeKind::X);
  d.addWire(a, b);
  EXPECT_THROW(zx::apply(d, {RuleId::SF, {a, b}, Direction::Forward}), StaleMatch);
  EXPECT_THROW(zx::apply(d, {RuleId::SF, {a, 99}, Direction::Forward}), StaleMatch);
}

TEST(Apply, SpiderFusionAddsPhases) {
  ZxDiagram d;
  const int i = d.addInput();
  const int o = d.addOutput();
  const int a = d.addSpider(NodeKind::Z, Phase::quarters(1));
  const int b = d.addSpider(NodeKind::Z, Phase::quarters(2));
  d.addWire(i, a);
  d.addWire(a, b);
  d.addWire(b, o);
  const auto out = zx::apply(d, {RuleId::SF, {a, b}, Direction::Forward});
  EXPECT_EQ(out.spiderIds().size(), 1U);
  EXPECT_EQ(out.phase(out.spiderIds().front()), Phase::quarters(3));
}

TEST(Recolour, PreservesTheMap) {
  verify::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto d = verify::randomDiagram(rng, 4, 4, 2);
    const auto before = eval::contract(d);
    zx::recolour(d, d.spiderIds().front());
    EXPECT_LT(maxAbsDiff(before, eval::contract(d)), 1e-10);
  }
}

TEST(Simplify, PreservesTheMap) {
  verify::Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = verify::randomDiagram(rng, 5 + rng() % 4, 4, 4);
    const auto res = zx::simplify(d);
    EXPECT_LT(maxAbsDiff(eval::contract(d), eval::contract(res.diagram)), 1e-9);
  }
}

TEST(Simplify, SizeMeasureStrictlyDecreases) {
  verify::Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto cur = verify::randomDiagram(rng, 5 + rng() % 4, 4, 4);
    const auto res = zx::simplify(cur);
    for (const auto& m : res.trace) {
      const auto before = zx::sizeMeasure(cur);
      zx::applyInPlace(cur, m);
      EXPECT_LT(zx::sizeMeasure(cur), before) << zx::ruleName(m.rule);
    }
  }
}

TEST(Simplify, ReachesAFixedPoint) {
  verify::Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto res = zx::simplify(verify::randomDiagram(rng, 6, 3, 3));
    EXPECT_TRUE(zx::simplify(res.diagram).trace.empty());
  }
}

TEST(Simplify, ChainOfPhasesCollapsesToOneSpider) {
  ZxDiagram d;
  int prev = d.addInput();
  for (int k = 0; k < 5; ++k) {
    const int s = d.addSpider(NodeKind::Z, Phase::quarters(1));
    d.addWire(prev, s);
    prev = s;
  }
  d.addWire(prev, d.addOutput());
  const auto res = zx::simplify(d);
  ASSERT_EQ(res.diagram.spiderIds().size(), 1U);
  EXPECT_EQ(res.diagram.phase(res.diagram.spiderIds().front()), Phase::quarters(5));
}

TEST(Simplify, IdentitySpiderRemoved) {
  ZxDiagram d;
  const int s = d.addSpider(NodeKind::X);
  d.addWire(d.addInput(), s);
  d.addWire(s, d.addOutput());
  EXPECT_TRUE(zx::simplify(d).diagram.spiderIds().empty());
}
