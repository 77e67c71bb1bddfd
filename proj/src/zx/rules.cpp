#include "zxlat/zx/rules.hpp"

#include "zxlat/errors.hpp"
#include "zxlat/eval/contract.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace zxlat::zx {

namespace {

struct Leg {
  int wire;
  int other;
  bool hadamard;
};

// Distinct incident wires; a self-loop shows up once.
std::vector<int> uniqueWires(const ZxDiagram& d, int v) {
  auto ws = d.node(v).wires;
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

bool hasSelfLoop(const ZxDiagram& d, int v) {
  for (int w : d.node(v).wires) {
    if (d.isSelfLoop(w)) {
      return true;
    }
  }
  return false;
}

std::vector<Leg> legs(const ZxDiagram& d, int v) {
  std::vector<Leg> out;
  for (int w : uniqueWires(d, v)) {
    out.push_back({w, d.otherEnd(w, v), d.wire(w).hadamard});
  }
  return out;
}

// Colours differ after accounting for a Hadamard on the wire.
bool effectiveOpposite(const ZxDiagram& d, int w) {
  const auto& wr = d.wire(w);
  return (d.kind(wr.a) != d.kind(wr.b)) != wr.hadamard;
}

[[noreturn]] void stale(const RuleMatch& m, const std::string& why) {
  throw StaleMatch(ruleName(m.rule) + " match no longer applies: " + why);
}

void require(bool ok, const RuleMatch& m, const char* why) {
  if (!ok) {
    stale(m, why);
  }
}

bool spiderAlive(const ZxDiagram& d, int v) { return d.isSpider(v); }

// ---- SF ----

std::vector<int> plainWiresBetween(const ZxDiagram& d, int a, int b) {
  std::vector<int> out;
  for (int w : d.wiresBetween(a, b)) {
    if (!d.wire(w).hadamard) {
      out.push_back(w);
    }
  }
  return out;
}

void absorbSelfLoops(ZxDiagram& d, int v) {
  for (int w : uniqueWires(d, v)) {
    if (!d.isSelfLoop(w)) {
      continue;
    }
    if (d.wire(w).hadamard) {
      d.addPhase(v, Phase::pi());
      d.multiplyScalar(Scalar::sqrt2Power(-1));
    }
    d.removeWire(w);
  }
}

void applySF(ZxDiagram& d, const RuleMatch& m) {
  require(m.anchors.size() == 2, m, "needs two anchors");
  const int a = m.anchors[0];
  const int b = m.anchors[1];
  require(a != b && spiderAlive(d, a) && spiderAlive(d, b), m, "spiders gone");
  require(d.kind(a) == d.kind(b), m, "colours differ");
  const auto plain = plainWiresBetween(d, a, b);
  require(!plain.empty(), m, "no plain wire between the spiders");
  d.removeWire(plain.front());
  d.addPhase(a, d.phase(b));
  for (int w : uniqueWires(d, b)) {
    const auto wr = d.wire(w);
    const int o = d.isSelfLoop(w) ? a : (wr.a == b ? wr.b : wr.a);
    d.removeWire(w);
    d.addWire(a, o == b ? a : o, wr.hadamard);
  }
  d.removeNode(b);
  absorbSelfLoops(d, a);
}

std::vector<RuleMatch> findSF(const ZxDiagram& d) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& [id, w] : d.wires()) {
    if (w.a == w.b || w.hadamard || !d.isSpider(w.a) || !d.isSpider(w.b) ||
        d.kind(w.a) != d.kind(w.b)) {
      continue;
    }
    pairs.insert({std::min(w.a, w.b), std::max(w.a, w.b)});
  }
  std::vector<RuleMatch> out;
  for (const auto& [a, b] : pairs) {
    out.push_back({RuleId::SF, {a, b}, Direction::Forward});
  }
  return out;
}

// ---- I and HC ----

bool isBareDegreeTwo(const ZxDiagram& d, int v) {
  return d.isSpider(v) && d.phase(v).isZero() && d.degree(v) == 2 &&
         !hasSelfLoop(d, v);
}

void bypass(ZxDiagram& d, int v, bool hadamard) {
  const auto ls = legs(d, v);
  d.removeNode(v);
  d.addWire(ls[0].other, ls[1].other, hadamard);
}

void applyI(ZxDiagram& d, const RuleMatch& m) {
  if (m.anchors.size() == 2) {
    const int v = m.anchors[0];
    const int w = m.anchors[1];
    require(spiderAlive(d, v) && d.hasWire(w) && d.isSelfLoop(w) &&
                d.wire(w).a == v,
            m, "self-loop gone");
    if (d.wire(w).hadamard) {
      d.addPhase(v, Phase::pi());
      d.multiplyScalar(Scalar::sqrt2Power(-1));
    }
    d.removeWire(w);
    return;
  }
  require(m.anchors.size() == 1, m, "bad anchors");
  const int v = m.anchors[0];
  require(isBareDegreeTwo(d, v), m, "not a phase-free degree-2 spider");
  const auto ls = legs(d, v);
  require(!(ls[0].hadamard && ls[1].hadamard), m, "both legs Hadamard");
  bypass(d, v, ls[0].hadamard != ls[1].hadamard);
}

std::vector<RuleMatch> findI(const ZxDiagram& d) {
  std::vector<RuleMatch> out;
  for (int v : d.spiderIds()) {
    if (isBareDegreeTwo(d, v)) {
      const auto ls = legs(d, v);
      if (!(ls[0].hadamard && ls[1].hadamard)) {
        out.push_back({RuleId::I, {v}, Direction::Forward});
      }
    }
    for (int w : uniqueWires(d, v)) {
      if (d.isSelfLoop(w)) {
        out.push_back({RuleId::I, {v, w}, Direction::Forward});
      }
    }
  }
  return out;
}

void applyHC(ZxDiagram& d, const RuleMatch& m) {
  require(m.anchors.size() == 1, m, "bad anchors");
  const int v = m.anchors[0];
  require(isBareDegreeTwo(d, v), m, "not a phase-free degree-2 spider");
  const auto ls = legs(d, v);
  require(ls[0].hadamard && ls[1].hadamard, m, "legs are not both Hadamard");
  bypass(d, v, false);
}

std::vector<RuleMatch> findHC(const ZxDiagram& d) {
  std::vector<RuleMatch> out;
  for (int v : d.spiderIds()) {
    if (isBareDegreeTwo(d, v)) {
      const auto ls = legs(d, v);
      if (ls[0].hadamard && ls[1].hadamard) {
        out.push_back({RuleId::HC, {v}, Direction::Forward});
      }
    }
  }
  return out;
}

// ---- SC ----

bool scFits(const ZxDiagram& d, int s, int t) {
  if (s == t || !d.isSpider(s) || !d.isSpider(t) || d.degree(s) != 1 ||
      !d.phase(s).isPauli() || hasSelfLoop(d, t)) {
    return false;
  }
  const int w = d.node(s).wires.front();
  return d.otherEnd(w, s) == t && effectiveOpposite(d, w);
}

void applySC(ZxDiagram& d, const RuleMatch& m) {
  require(m.anchors.size() == 2, m, "bad anchors");
  const int s = m.anchors[0];
  const int t = m.anchors[1];
  require(scFits(d, s, t), m, "state copy pattern broken");
  const int w = d.node(s).wires.front();
  const Phase statePhase = d.phase(s);
  const Phase targetPhase = d.phase(t);
  const NodeKind copyKind = opposite(d.kind(t));
  std::vector<Leg> rest;
  for (const auto& l : legs(d, t)) {
    if (l.wire != w) {
      rest.push_back(l);
    }
  }
  const int n = static_cast<int>(rest.size());
  d.removeNode(s);
  d.removeNode(t);
  for (const auto& l : rest) {
    const int c = d.addSpider(copyKind, statePhase);
    d.addWire(c, l.other, l.hadamard);
  }
  d.multiplyScalar(Scalar::sqrt2Power(1 - n));
  if (statePhase.isPi()) {
    d.multiplyScalar(Scalar::fromPhase(targetPhase));
  }
}

std::vector<RuleMatch> findSC(const ZxDiagram& d) {
  std::vector<RuleMatch> out;
  for (int s : d.spiderIds()) {
    if (d.degree(s) != 1) {
      continue;
    }
    const int t = d.otherEnd(d.node(s).wires.front(), s);
    if (scFits(d, s, t)) {
      out.push_back({RuleId::SC, {s, t}, Direction::Forward});
    }
  }
  return out;
}

// ---- PI ----

// Returns the wire from p to t, or -1.
int piFits(const ZxDiagram& d, int p, int t) {
  if (p == t || !d.isSpider(p) || !d.isSpider(t) || !d.phase(p).isPi() ||
      d.degree(p) != 2 || hasSelfLoop(d, p) || hasSelfLoop(d, t)) {
    return -1;
  }
  const auto ls = legs(d, p);
  for (std::size_t k = 0; k < 2; ++k) {
    if (ls[k].other == t && ls[1 - k].other != t &&
        effectiveOpposite(d, ls[k].wire)) {
      return ls[k].wire;
    }
  }
  return -1;
}

void applyPI(ZxDiagram& d, const RuleMatch& m) {
  require(m.anchors.size() == 2, m, "bad anchors");
  const int p = m.anchors[0];
  const int t = m.anchors[1];
  const int wpt = piFits(d, p, t);
  require(wpt >= 0, m, "pi commutation pattern broken");
  const bool hpt = d.wire(wpt).hadamard;
  Leg outer{};
  for (const auto& l : legs(d, p)) {
    if (l.wire != wpt) {
      outer = l;
    }
  }
  std::vector<Leg> rest;
  for (const auto& l : legs(d, t)) {
    if (l.wire != wpt) {
      rest.push_back(l);
    }
  }
  const Phase alpha = d.phase(t);
  const NodeKind piKind = opposite(d.kind(t));
  d.removeNode(p);
  d.addWire(outer.other, t, outer.hadamard != hpt);
  for (const auto& l : rest) {
    d.removeWire(l.wire);
    const int c = d.addSpider(piKind, Phase::pi());
    d.addWire(t, c, false);
    d.addWire(c, l.other, l.hadamard);
  }
  d.setPhase(t, -alpha);
  d.multiplyScalar(Scalar::fromPhase(alpha));
}

std::vector<RuleMatch> findPI(const ZxDiagram& d) {
  std::vector<RuleMatch> out;
  for (int p : d.spiderIds()) {
    if (!d.phase(p).isPi() || d.degree(p) != 2) {
      continue;
    }
    std::set<int> targets;
    for (const auto& l : legs(d, p)) {
      if (l.other != p) {
        targets.insert(l.other);
      }
    }
    for (int t : targets) {
      if (piFits(d, p, t) >= 0) {
        out.push_back({RuleId::PI, {p, t}, Direction::Forward});
      }
    }
  }
  return out;
}

// ---- CC / CCP ----

bool allLegs(const ZxDiagram& d, int v, bool hadamard) {
  bool any = false;
  for (const auto& l : legs(d, v)) {
    if (l.other == v) {
      continue;
    }
    any = true;
    if (l.hadamard != hadamard) {
      return false;
    }
  }
  return any;
}

void applyCC(ZxDiagram& d, const RuleMatch& m) {
  require(m.anchors.size() == 1 && spiderAlive(d, m.anchors[0]), m,
          "spider gone");
  const int v = m.anchors[0];
  const bool wantH = m.direction == Direction::Forward;
  require(allLegs(d, v, wantH), m, "legs do not match");
  recolour(d, v);
}

std::vector<RuleMatch> findCC(const ZxDiagram& d, Direction dir) {
  std::vector<RuleMatch> out;
  for (int v : d.spiderIds()) {
    if (allLegs(d, v, dir == Direction::Forward)) {
      out.push_back({RuleId::CC, {v}, dir});
    }
  }
  return out;
}

void applyCCP(ZxDiagram& d, const RuleMatch& m) {
  require(m.anchors.size() == 1 && spiderAlive(d, m.anchors[0]), m,
          "spider gone");
  const int v = m.anchors[0];
  const NodeKind from =
      m.direction == Direction::Forward ? NodeKind::X : NodeKind::Z;
  require(d.kind(v) == from, m, "wrong colour");
  recolour(d, v);
}

std::vector<RuleMatch> findCCP(const ZxDiagram& d, Direction dir) {
  const NodeKind from = dir == Direction::Forward ? NodeKind::X : NodeKind::Z;
  std::vector<RuleMatch> out;
  for (int v : d.spiderIds()) {
    if (d.kind(v) == from) {
      out.push_back({RuleId::CCP, {v}, dir});
    }
  }
  return out;
}

// ---- B / GB ----

// Checks that A and B form a complete bipartite block of phase-free spiders,
// every spider having exactly one further leg. Fills the external legs.
bool bipartiteBlock(const ZxDiagram& d, const std::vector<int>& a,
                    const std::vector<int>& b, std::vector<Leg>* extA,
                    std::vector<Leg>* extB) {
  if (a.size() < 2 || b.size() < 2) {
    return false;
  }
  std::set<int> all(a.begin(), a.end());
  all.insert(b.begin(), b.end());
  if (all.size() != a.size() + b.size()) {
    return false;
  }
  for (int v : all) {
    if (!d.isSpider(v) || !d.phase(v).isZero() || hasSelfLoop(d, v)) {
      return false;
    }
  }
  const NodeKind ka = d.kind(a.front());
  auto side = [&](const std::vector<int>& mine, const std::vector<int>& theirs,
                  NodeKind kind, std::vector<Leg>* ext) {
    for (int v : mine) {
      if (d.kind(v) != kind || d.degree(v) != theirs.size() + 1) {
        return false;
      }
      for (int u : theirs) {
        const auto ws = d.wiresBetween(v, u);
        if (ws.size() != 1 || d.wire(ws.front()).hadamard) {
          return false;
        }
      }
      for (const auto& l : legs(d, v)) {
        if (all.count(l.other) == 0) {
          if (ext != nullptr) {
            ext->push_back(l);
          }
        }
      }
    }
    return true;
  };
  if (extA != nullptr) {
    extA->clear();
  }
  if (extB != nullptr) {
    extB->clear();
  }
  return side(a, b, ka, extA) && side(b, a, opposite(ka), extB);
}

void replaceBlock(ZxDiagram& d, const std::vector<int>& a,
                  const std::vector<int>& b) {
  std::vector<Leg> extA;
  std::vector<Leg> extB;
  bipartiteBlock(d, a, b, &extA, &extB);
  const NodeKind ka = d.kind(a.front());
  const NodeKind kb = d.kind(b.front());
  for (int v : a) {
    d.removeNode(v);
  }
  for (int v : b) {
    d.removeNode(v);
  }
  const int u = d.addSpider(kb);
  const int v = d.addSpider(ka);
  d.addWire(u, v, false);
  for (const auto& l : extA) {
    d.addWire(u, l.other, l.hadamard);
  }
  for (const auto& l : extB) {
    d.addWire(v, l.other, l.hadamard);
  }
  const int n = static_cast<int>(a.size());
  const int mm = static_cast<int>(b.size());
  d.multiplyScalar(Scalar::sqrt2Power(-(n - 1) * (mm - 1)));
}

void splitByColour(const ZxDiagram& d, const RuleMatch& m, std::vector<int>& a,
                   std::vector<int>& b) {
  require(!m.anchors.empty(), m, "no anchors");
  for (int v : m.anchors) {
    require(spiderAlive(d, v), m, "spider gone");
  }
  const NodeKind ka = d.kind(m.anchors.front());
  for (int v : m.anchors) {
    (d.kind(v) == ka ? a : b).push_back(v);
  }
}

// Spiders u (a-side) and v joined by a single plain wire, both phase-free
// with two further legs each.
bool bialgebraPair(const ZxDiagram& d, int u, int v) {
  if (u == v || !d.isSpider(u) || !d.isSpider(v) || d.kind(u) == d.kind(v) ||
      !d.phase(u).isZero() || !d.phase(v).isZero() || d.degree(u) != 3 ||
      d.degree(v) != 3 || hasSelfLoop(d, u) || hasSelfLoop(d, v)) {
    return false;
  }
  const auto ws = d.wiresBetween(u, v);
  return ws.size() == 1 && !d.wire(ws.front()).hadamard;
}

void applyB(ZxDiagram& d, const RuleMatch& m) {
  if (m.direction == Direction::Forward) {
    require(m.anchors.size() == 4, m, "bad anchors");
    std::vector<int> a;
    std::vector<int> b;
    splitByColour(d, m, a, b);
    require(a.size() == 2 && b.size() == 2 && bipartiteBlock(d, a, b, nullptr, nullptr),
            m, "bialgebra block broken");
    replaceBlock(d, a, b);
    return;
  }
  require(m.anchors.size() == 2, m, "bad anchors");
  const int u = m.anchors[0];
  const int v = m.anchors[1];
  require(bialgebraPair(d, u, v), m, "bialgebra pair broken");
  std::vector<Leg> extU;
  std::vector<Leg> extV;
  for (const auto& l : legs(d, u)) {
    if (l.other != v) {
      extU.push_back(l);
    }
  }
  for (const auto& l : legs(d, v)) {
    if (l.other != u) {
      extV.push_back(l);
    }
  }
  const NodeKind ku = d.kind(u);
  const NodeKind kv = d.kind(v);
  d.removeNode(u);
  d.removeNode(v);
  std::vector<int> as;
  std::vector<int> bs;
  for (const auto& l : extU) {
    const int s = d.addSpider(kv);
    d.addWire(s, l.other, l.hadamard);
    as.push_back(s);
  }
  for (const auto& l : extV) {
    const int s = d.addSpider(ku);
    d.addWire(s, l.other, l.hadamard);
    bs.push_back(s);
  }
  for (int x : as) {
    for (int y : bs) {
      d.addWire(x, y, false);
    }
  }
  d.multiplyScalar(Scalar::sqrt2Power(1));
}

std::vector<RuleMatch> findBlocks(const ZxDiagram& d, RuleId rule) {
  std::set<std::vector<int>> found;
  for (int s : d.spiderIds()) {
    if (!d.phase(s).isZero() || hasSelfLoop(d, s) || d.degree(s) < 3) {
      continue;
    }
    const auto ls = legs(d, s);
    for (std::size_t e = 0; e < ls.size(); ++e) {
      std::vector<int> b;
      bool ok = true;
      for (std::size_t k = 0; k < ls.size() && ok; ++k) {
        if (k == e) {
          continue;
        }
        ok = !ls[k].hadamard && d.isSpider(ls[k].other) &&
             d.kind(ls[k].other) != d.kind(s);
        b.push_back(ls[k].other);
      }
      std::sort(b.begin(), b.end());
      if (!ok || std::adjacent_find(b.begin(), b.end()) != b.end()) {
        continue;
      }
      std::vector<int> a;
      for (const auto& l : legs(d, b.front())) {
        const int x = l.other;
        if (!d.isSpider(x) || d.kind(x) != d.kind(s)) {
          continue;
        }
        bool adj = true;
        for (int y : b) {
          adj = adj && d.wiresBetween(x, y).size() == 1;
        }
        if (adj) {
          a.push_back(x);
        }
      }
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      if (!bipartiteBlock(d, a, b, nullptr, nullptr)) {
        continue;
      }
      if (rule == RuleId::B && (a.size() != 2 || b.size() != 2)) {
        continue;
      }
      std::vector<int> anchors;
      const auto& first = a.front() < b.front() ? a : b;
      const auto& second = a.front() < b.front() ? b : a;
      anchors.insert(anchors.end(), first.begin(), first.end());
      anchors.insert(anchors.end(), second.begin(), second.end());
      found.insert(anchors);
    }
  }
  std::vector<RuleMatch> out;
  for (const auto& an : found) {
    out.push_back({rule, an, Direction::Forward});
  }
  return out;
}

std::vector<RuleMatch> findBBackward(const ZxDiagram& d) {
  std::vector<RuleMatch> out;
  for (const auto& [id, w] : d.wires()) {
    const int u = std::min(w.a, w.b);
    const int v = std::max(w.a, w.b);
    if (bialgebraPair(d, u, v)) {
      out.push_back({RuleId::B, {u, v}, Direction::Backward});
    }
  }
  return out;
}

void applyGB(ZxDiagram& d, const RuleMatch& m) {
  std::vector<int> a;
  std::vector<int> b;
  splitByColour(d, m, a, b);
  require(bipartiteBlock(d, a, b, nullptr, nullptr), m,
          "bipartite block broken");
  replaceBlock(d, a, b);
}

// ---- HF ----

void applyHF(ZxDiagram& d, const RuleMatch& m) {
  require(m.anchors.size() == 4, m, "bad anchors");
  const int u = m.anchors[0];
  const int v = m.anchors[1];
  const int w1 = m.anchors[2];
  const int w2 = m.anchors[3];
  require(u != v && spiderAlive(d, u) && spiderAlive(d, v) && w1 != w2 &&
              d.hasWire(w1) && d.hasWire(w2),
          m, "elements gone");
  const auto between = d.wiresBetween(u, v);
  require(std::count(between.begin(), between.end(), w1) == 1 &&
              std::count(between.begin(), between.end(), w2) == 1,
          m, "wires moved");
  require(d.wire(w1).hadamard == d.wire(w2).hadamard && effectiveOpposite(d, w1),
          m, "wires not a Hopf pair");
  d.removeWire(w1);
  d.removeWire(w2);
  d.multiplyScalar(Scalar::sqrt2Power(-2));
}

std::vector<RuleMatch> findHF(const ZxDiagram& d) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& [id, w] : d.wires()) {
    if (w.a != w.b && d.isSpider(w.a) && d.isSpider(w.b)) {
      pairs.insert({std::min(w.a, w.b), std::max(w.a, w.b)});
    }
  }
  std::vector<RuleMatch> out;
  for (const auto& [u, v] : pairs) {
    const auto ws = d.wiresBetween(u, v);
    for (bool h : {false, true}) {
      std::vector<int> same;
      for (int w : ws) {
        if (d.wire(w).hadamard == h && effectiveOpposite(d, w)) {
          same.push_back(w);
        }
      }
      if (same.size() >= 2) {
        out.push_back({RuleId::HF, {u, v, same[0], same[1]}, Direction::Forward});
      }
    }
  }
  return out;
}

// ---- S ----

// Spiders of v's component; empty if it reaches a boundary port.
std::vector<int> closedComponent(const ZxDiagram& d, int v) {
  std::set<int> seen{v};
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (d.isBoundary(x)) {
      return {};
    }
    for (int w : d.node(x).wires) {
      const int y = d.otherEnd(w, x);
      if (seen.insert(y).second) {
        stack.push_back(y);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

void applyS(ZxDiagram& d, const RuleMatch& m) {
  require(!m.anchors.empty() && m.anchors.size() <= 2, m, "bad anchors");
  for (int v : m.anchors) {
    require(spiderAlive(d, v), m, "spider gone");
  }
  auto comp = closedComponent(d, m.anchors.front());
  auto anchors = m.anchors;
  std::sort(anchors.begin(), anchors.end());
  require(comp == anchors, m, "component changed");
  Scalar value;
  if (anchors.size() == 1 && d.degree(anchors.front()) == 0) {
    value = Scalar::onePlusPhase(d.phase(anchors.front()));
  } else {
    ZxDiagram sub;
    std::map<int, int> ids;
    for (int v : anchors) {
      ids[v] = sub.addSpider(d.kind(v), d.phase(v));
    }
    std::set<int> ws;
    for (int v : anchors) {
      for (int w : d.node(v).wires) {
        ws.insert(w);
      }
    }
    for (int w : ws) {
      sub.addWire(ids.at(d.wire(w).a), ids.at(d.wire(w).b), d.wire(w).hadamard);
    }
    value = Scalar::fromComplex(eval::contractScalar(sub));
  }
  for (int v : anchors) {
    d.removeNode(v);
  }
  d.multiplyScalar(value);
}

std::vector<RuleMatch> findS(const ZxDiagram& d) {
  std::set<std::vector<int>> found;
  for (int v : d.spiderIds()) {
    auto comp = closedComponent(d, v);
    if (!comp.empty() && comp.size() <= 2) {
      found.insert(comp);
    }
  }
  std::vector<RuleMatch> out;
  for (const auto& c : found) {
    out.push_back({RuleId::S, c, Direction::Forward});
  }
  return out;
}

// ---- EULER ----

bool eulerMiddle(const ZxDiagram& d, int v, NodeKind kind) {
  return d.isSpider(v) && d.kind(v) == kind && d.phase(v) == Phase::halfPi() &&
         d.degree(v) == 2 && !hasSelfLoop(d, v);
}

void applyEuler(ZxDiagram& d, const RuleMatch& m) {
  if (m.direction == Direction::Forward) {
    require(m.anchors.size() == 1 && d.hasWire(m.anchors[0]) &&
                d.wire(m.anchors[0]).hadamard,
            m, "Hadamard wire gone");
    const auto wr = d.wire(m.anchors[0]);
    d.removeWire(m.anchors[0]);
    const int z1 = d.addSpider(NodeKind::Z, Phase::halfPi());
    const int x = d.addSpider(NodeKind::X, Phase::halfPi());
    const int z2 = d.addSpider(NodeKind::Z, Phase::halfPi());
    d.addWire(wr.a, z1);
    d.addWire(z1, x);
    d.addWire(x, z2);
    d.addWire(z2, wr.b);
    d.multiplyScalar(Scalar::omega(-1));
    return;
  }
  require(m.anchors.size() == 3, m, "bad anchors");
  const int z1 = m.anchors[0];
  const int x = m.anchors[1];
  const int z2 = m.anchors[2];
  require(z1 != z2 && eulerMiddle(d, z1, NodeKind::Z) &&
              eulerMiddle(d, x, NodeKind::X) && eulerMiddle(d, z2, NodeKind::Z),
          m, "Euler chain broken");
  const auto w1 = d.wiresBetween(z1, x);
  const auto w2 = d.wiresBetween(x, z2);
  require(w1.size() == 1 && w2.size() == 1 && !d.wire(w1[0]).hadamard &&
              !d.wire(w2[0]).hadamard,
          m, "Euler chain wires");
  Leg o1{};
  Leg o2{};
  for (const auto& l : legs(d, z1)) {
    if (l.wire != w1[0]) {
      o1 = l;
    }
  }
  for (const auto& l : legs(d, z2)) {
    if (l.wire != w2[0]) {
      o2 = l;
    }
  }
  require(o1.wire != o2.wire && o1.other != x && o2.other != x, m,
          "Euler chain closes on itself");
  d.removeNode(z1);
  d.removeNode(x);
  d.removeNode(z2);
  d.addWire(o1.other, o2.other, !(o1.hadamard != o2.hadamard));
  d.multiplyScalar(Scalar::omega(1));
}

std::vector<RuleMatch> findEuler(const ZxDiagram& d, Direction dir) {
  std::vector<RuleMatch> out;
  if (dir == Direction::Forward) {
    for (const auto& [id, w] : d.wires()) {
      if (w.hadamard) {
        out.push_back({RuleId::EULER, {id}, dir});
      }
    }
    return out;
  }
  for (int x : d.spiderIds()) {
    if (!eulerMiddle(d, x, NodeKind::X)) {
      continue;
    }
    const auto ls = legs(d, x);
    if (ls[0].hadamard || ls[1].hadamard || ls[0].other == ls[1].other) {
      continue;
    }
    int z1 = std::min(ls[0].other, ls[1].other);
    int z2 = std::max(ls[0].other, ls[1].other);
    if (!eulerMiddle(d, z1, NodeKind::Z) || !eulerMiddle(d, z2, NodeKind::Z)) {
      continue;
    }
    RuleMatch m{RuleId::EULER, {z1, x, z2}, dir};
    ZxDiagram probe = d;
    try {
      applyEuler(probe, m);
      out.push_back(m);
    } catch (const StaleMatch&) {
    }
  }
  return out;
}

} // namespace

bool RuleMatch::operator<(const RuleMatch& other) const {
  return std::tie(rule, direction, anchors) <
         std::tie(other.rule, other.direction, other.anchors);
}

std::string ruleName(RuleId rule) {
  switch (rule) {
  case RuleId::SF:
    return "SF";
  case RuleId::I:
    return "I";
  case RuleId::HC:
    return "HC";
  case RuleId::SC:
    return "SC";
  case RuleId::PI:
    return "PI";
  case RuleId::CC:
    return "CC";
  case RuleId::CCP:
    return "CCP";
  case RuleId::B:
    return "B";
  case RuleId::GB:
    return "GB";
  case RuleId::HF:
    return "HF";
  case RuleId::S:
    return "S";
  case RuleId::EULER:
    return "EULER";
  }
  return "?";
}

RuleId ruleFromName(const std::string& name) {
  for (auto r : allRules()) {
    if (ruleName(r) == name) {
      return r;
    }
  }
  throw ParseError("unknown rule " + name);
}

const std::vector<RuleId>& allRules() {
  static const std::vector<RuleId> rules = {
      RuleId::SF, RuleId::I,  RuleId::HC, RuleId::SC, RuleId::PI, RuleId::CC,
      RuleId::CCP, RuleId::B, RuleId::GB, RuleId::HF, RuleId::S,  RuleId::EULER};
  return rules;
}

std::vector<RuleMatch> findMatches(const ZxDiagram& d, RuleId rule,
                                   Direction direction) {
  std::vector<RuleMatch> out;
  const bool fwd = direction == Direction::Forward;
  switch (rule) {
  case RuleId::SF:
    if (fwd) {
      out = findSF(d);
    }
    break;
  case RuleId::I:
    if (fwd) {
      out = findI(d);
    }
    break;
  case RuleId::HC:
    if (fwd) {
      out = findHC(d);
    }
    break;
  case RuleId::SC:
    if (fwd) {
      out = findSC(d);
    }
    break;
  case RuleId::PI:
    if (fwd) {
      out = findPI(d);
    }
    break;
  case RuleId::CC:
    out = findCC(d, direction);
    break;
  case RuleId::CCP:
    out = findCCP(d, direction);
    break;
  case RuleId::B:
    out = fwd ? findBlocks(d, RuleId::B) : findBBackward(d);
    break;
  case RuleId::GB:
    if (fwd) {
      out = findBlocks(d, RuleId::GB);
    }
    break;
  case RuleId::HF:
    if (fwd) {
      out = findHF(d);
    }
    break;
  case RuleId::S:
    if (fwd) {
      out = findS(d);
    }
    break;
  case RuleId::EULER:
    out = findEuler(d, direction);
    break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RuleMatch> findMatches(const ZxDiagram& d, RuleId rule) {
  auto out = findMatches(d, rule, Direction::Forward);
  auto back = findMatches(d, rule, Direction::Backward);
  out.insert(out.end(), back.begin(), back.end());
  return out;
}

void recolour(ZxDiagram& d, int v) {
  d.setKind(v, opposite(d.kind(v)));
  for (int w : uniqueWires(d, v)) {
    if (!d.isSelfLoop(w)) {
      d.toggleHadamard(w);
    }
  }
}

void applyInPlace(ZxDiagram& d, const RuleMatch& m) {
  switch (m.rule) {
  case RuleId::SF:
    applySF(d, m);
    return;
  case RuleId::I:
    applyI(d, m);
    return;
  case RuleId::HC:
    applyHC(d, m);
    return;
  case RuleId::SC:
    applySC(d, m);
    return;
  case RuleId::PI:
    applyPI(d, m);
    return;
  case RuleId::CC:
    applyCC(d, m);
    return;
  case RuleId::CCP:
    applyCCP(d, m);
    return;
  case RuleId::B:
    applyB(d, m);
    return;
  case RuleId::GB:
    applyGB(d, m);
    return;
  case RuleId::HF:
    applyHF(d, m);
    return;
  case RuleId::S:
    applyS(d, m);
    return;
  case RuleId::EULER:
    applyEuler(d, m);
    return;
  }
}

ZxDiagram apply(const ZxDiagram& d, const RuleMatch& m) {
  ZxDiagram out = d;
  applyInPlace(out, m);
  return out;
}

SizeMeasure sizeMeasure(const ZxDiagram& d) {
  return {d.spiderCount(), d.wireCount(), d.xSpiderCount(), d.hadamardCount()};
}

} // namespace zxlat::zx
