#include "zxlat/verify/rule_instances.hpp"

namespace zxlat::verify {

using zx::Direction;
using zx::NodeKind;
using zx::Phase;
using zx::RuleId;
using zx::RuleMatch;
using zx::ZxDiagram;

namespace {

NodeKind randomKind(Rng& rng) {
  return rng() % 2 == 0 ? NodeKind::Z : NodeKind::X;
}

bool coin(Rng& rng) { return rng() % 2 == 0; }

// One external leg on v: straight to a port, or through a random spider.
void dangle(ZxDiagram& d, int v, Rng& rng, bool hadamard) {
  const int port = coin(rng) ? d.addInput() : d.addOutput();
  if (rng() % 3 == 0) {
    const int s = d.addSpider(randomKind(rng), randomPhase(rng, 0.25));
    d.addWire(v, s, hadamard);
    d.addWire(s, port, coin(rng));
  } else {
    d.addWire(v, port, hadamard);
  }
}

void dangle(ZxDiagram& d, int v, Rng& rng) { dangle(d, v, rng, coin(rng)); }

RuleInstance makeSF(Rng& rng) {
  ZxDiagram d;
  const auto k = randomKind(rng);
  const int a = d.addSpider(k, randomPhase(rng, 0.25));
  const int b = d.addSpider(k, randomPhase(rng, 0.25));
  d.addWire(a, b);
  if (coin(rng)) {
    d.addWire(a, b, coin(rng));
  }
  for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) {
    dangle(d, a, rng);
  }
  for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) {
    dangle(d, b, rng);
  }
  return {d, {RuleId::SF, {a, b}, Direction::Forward}};
}

RuleInstance makeI(Rng& rng, std::size_t k) {
  ZxDiagram d;
  const int v = d.addSpider(randomKind(rng));
  if (k % 2 == 1) {
    d.setPhase(v, randomPhase(rng, 0.25));
    const int w = d.addWire(v, v, coin(rng));
    for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) {
      dangle(d, v, rng);
    }
    return {d, {RuleId::I, {v, w}, Direction::Forward}};
  }
  const bool h1 = coin(rng);
  dangle(d, v, rng, h1);
  dangle(d, v, rng, h1 ? false : coin(rng));
  return {d, {RuleId::I, {v}, Direction::Forward}};
}

RuleInstance makeHC(Rng& rng) {
  ZxDiagram d;
  const int v = d.addSpider(randomKind(rng));
  const int a = d.addSpider(randomKind(rng), randomPhase(rng));
  d.addWire(a, v, true);
  dangle(d, v, rng, true);
  dangle(d, a, rng);
  dangle(d, a, rng);
  return {d, {RuleId::HC, {v}, Direction::Forward}};
}

RuleInstance makeSC(Rng& rng, std::size_t k) {
  ZxDiagram d;
  const auto kt = randomKind(rng);
  const int t = d.addSpider(kt, randomPhase(rng, 0.25));
  const bool viaH = coin(rng);
  const auto ks = viaH ? kt : zx::opposite(kt);
  const int s = d.addSpider(ks, coin(rng) ? Phase::pi() : Phase());
  d.addWire(s, t, viaH);
  for (std::size_t i = 0, n = k % 4; i < n; ++i) {
    dangle(d, t, rng);
  }
  d.addWire(d.addOutput(), d.addInput());
  return {d, {RuleId::SC, {s, t}, Direction::Forward}};
}

RuleInstance makePI(Rng& rng, std::size_t k) {
  ZxDiagram d;
  const auto kt = randomKind(rng);
  const int t = d.addSpider(kt, randomPhase(rng, 0.25));
  const bool viaH = coin(rng);
  const int p = d.addSpider(viaH ? kt : zx::opposite(kt), Phase::pi());
  d.addWire(p, t, viaH);
  dangle(d, p, rng);
  for (std::size_t i = 0, n = k % 4; i < n; ++i) {
    dangle(d, t, rng);
  }
  return {d, {RuleId::PI, {p, t}, Direction::Forward}};
}

RuleInstance makeCC(Rng& rng, std::size_t k) {
  ZxDiagram d;
  const bool fwd = k % 2 == 0;
  const int v = d.addSpider(randomKind(rng), randomPhase(rng, 0.25));
  for (std::size_t i = 0, n = 1 + rng() % 4; i < n; ++i) {
    dangle(d, v, rng, fwd);
  }
  return {d, {RuleId::CC, {v}, fwd ? Direction::Forward : Direction::Backward}};
}

RuleInstance makeCCP(Rng& rng, std::size_t k) {
  ZxDiagram d;
  const bool fwd = k % 2 == 0;
  const int v = d.addSpider(fwd ? NodeKind::X : NodeKind::Z,
                            randomPhase(rng, 0.25));
  for (std::size_t i = 0, n = 1 + rng() % 4; i < n; ++i) {
    dangle(d, v, rng);
  }
  if (coin(rng)) {
    d.addWire(v, v, coin(rng));
  }
  return {d, {RuleId::CCP, {v}, fwd ? Direction::Forward : Direction::Backward}};
}

RuleInstance makeBlock(Rng& rng, RuleId rule, std::size_t n, std::size_t m) {
  ZxDiagram d;
  const auto ka = randomKind(rng);
  std::vector<int> a;
  std::vector<int> b;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(d.addSpider(ka));
  }
  for (std::size_t j = 0; j < m; ++j) {
    b.push_back(d.addSpider(zx::opposite(ka)));
  }
  for (int x : a) {
    for (int y : b) {
      d.addWire(x, y);
    }
  }
  for (int x : a) {
    dangle(d, x, rng);
  }
  for (int y : b) {
    dangle(d, y, rng);
  }
  std::vector<int> anchors = a;
  anchors.insert(anchors.end(), b.begin(), b.end());
  return {d, {rule, anchors, Direction::Forward}};
}

RuleInstance makeB(Rng& rng, std::size_t k) {
  if (k % 2 == 0) {
    return makeBlock(rng, RuleId::B, 2, 2);
  }
  ZxDiagram d;
  const auto ku = randomKind(rng);
  const int u = d.addSpider(ku);
  const int v = d.addSpider(zx::opposite(ku));
  d.addWire(u, v);
  dangle(d, u, rng);
  dangle(d, u, rng);
  dangle(d, v, rng);
  dangle(d, v, rng);
  return {d, {RuleId::B, {u, v}, Direction::Backward}};
}

RuleInstance makeGB(Rng& rng, std::size_t k) {
  const std::size_t n = 2 + k % 2;
  const std::size_t m = 2 + (k / 2) % 2 + (k % 3 == 2 ? 1 : 0);
  return makeBlock(rng, RuleId::GB, n, std::min<std::size_t>(m, 8 - n));
}

RuleInstance makeHF(Rng& rng) {
  ZxDiagram d;
  const auto ku = randomKind(rng);
  const bool h = coin(rng);
  const int u = d.addSpider(ku, randomPhase(rng, 0.25));
  const int v = d.addSpider(h ? ku : zx::opposite(ku), randomPhase(rng, 0.25));
  const int w1 = d.addWire(u, v, h);
  const int w2 = d.addWire(u, v, h);
  for (std::size_t i = 0, n = rng() % 3; i < n; ++i) {
    dangle(d, u, rng);
  }
  for (std::size_t i = 0, n = 1 + rng() % 2; i < n; ++i) {
    dangle(d, v, rng);
  }
  return {d, {RuleId::HF, {u, v, w1, w2}, Direction::Forward}};
}

RuleInstance makeS(Rng& rng, std::size_t k) {
  ZxDiagram d;
  const int a = d.addSpider(randomKind(rng), randomPhase(rng, 0.25));
  std::vector<int> anchors{a};
  if (k % 3 != 0) {
    const int b = d.addSpider(randomKind(rng), randomPhase(rng, 0.25));
    d.addWire(a, b, coin(rng));
    if (k % 3 == 2) {
      d.addWire(a, b, coin(rng));
    }
    anchors.push_back(b);
  }
  const int other = d.addSpider(randomKind(rng), randomPhase(rng));
  dangle(d, other, rng);
  dangle(d, other, rng);
  return {d, {RuleId::S, anchors, Direction::Forward}};
}

RuleInstance makeEuler(Rng& rng, std::size_t k) {
  ZxDiagram d;
  if (k % 2 == 0) {
    const int a = d.addSpider(randomKind(rng), randomPhase(rng));
    const int w = d.addWire(a, d.addOutput(), true);
    dangle(d, a, rng);
    dangle(d, a, rng);
    return {d, {RuleId::EULER, {w}, Direction::Forward}};
  }
  const int z1 = d.addSpider(NodeKind::Z, Phase::halfPi());
  const int x = d.addSpider(NodeKind::X, Phase::halfPi());
  const int z2 = d.addSpider(NodeKind::Z, Phase::halfPi());
  d.addWire(z1, x);
  d.addWire(x, z2);
  dangle(d, z1, rng);
  dangle(d, z2, rng);
  return {d, {RuleId::EULER, {z1, x, z2}, Direction::Backward}};
}

} // namespace

std::vector<RuleInstance> ruleInstances(RuleId rule, std::size_t count,
                                        Rng& rng) {
  std::vector<RuleInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    switch (rule) {
    case RuleId::SF:
      out.push_back(makeSF(rng));
      break;
    case RuleId::I:
      out.push_back(makeI(rng, k));
      break;
    case RuleId::HC:
      out.push_back(makeHC(rng));
      break;
    case RuleId::SC:
      out.push_back(makeSC(rng, k));
      break;
    case RuleId::PI:
      out.push_back(makePI(rng, k));
      break;
    case RuleId::CC:
      out.push_back(makeCC(rng, k));
      break;
    case RuleId::CCP:
      out.push_back(makeCCP(rng, k));
      break;
    case RuleId::B:
      out.push_back(makeB(rng, k));
      break;
    case RuleId::GB:
      out.push_back(makeGB(rng, k));
      break;
    case RuleId::HF:
      out.push_back(makeHF(rng));
      break;
    case RuleId::S:
      out.push_back(makeS(rng, k));
      break;
    case RuleId::EULER:
      out.push_back(makeEuler(rng, k));
      break;
    }
  }
  return out;
}

} // namespace zxlat::verify
