#include "zxlat/zx/diagram.hpp"

#include "zxlat/errors.hpp"

#include <algorithm>
#include <string>

namespace zxlat::zx {

int ZxDiagram::addSpider(NodeKind kind, Phase phase) {
  if (kind == NodeKind::Boundary) {
    throw std::invalid_argument("use addInput/addOutput for ports");
  }
  const int id = nextNode_++;
  nodes_[id] = Node{kind, phase, {}};
  return id;
}

int ZxDiagram::addInput() {
  const int id = nextNode_++;
  nodes_[id] = Node{NodeKind::Boundary, {}, {}};
  inputs_.push_back(id);
  return id;
}

int ZxDiagram::addOutput() {
  const int id = nextNode_++;
  nodes_[id] = Node{NodeKind::Boundary, {}, {}};
  outputs_.push_back(id);
  return id;
}

int ZxDiagram::addWire(int a, int b, bool hadamard) {
  auto& na = nodes_.at(a);
  auto& nb = nodes_.at(b);
  if ((na.kind == NodeKind::Boundary && !na.wires.empty()) ||
      (nb.kind == NodeKind::Boundary && !nb.wires.empty()) ||
      (a == b && na.kind == NodeKind::Boundary)) {
    throw std::invalid_argument("a port takes exactly one wire");
  }
  const int id = nextWire_++;
  wires_[id] = Wire{a, b, hadamard};
  na.wires.push_back(id);
  nodes_.at(b).wires.push_back(id);
  return id;
}

void ZxDiagram::detach(int v, int w) {
  auto& ws = nodes_.at(v).wires;
  auto it = std::find(ws.begin(), ws.end(), w);
  if (it != ws.end()) {
    ws.erase(it);
  }
}

void ZxDiagram::removeWire(int w) {
  const auto wr = wires_.at(w);
  detach(wr.a, w);
  detach(wr.b, w);
  wires_.erase(w);
}

void ZxDiagram::removeNode(int v) {
  while (!nodes_.at(v).wires.empty()) {
    removeWire(nodes_.at(v).wires.front());
  }
  nodes_.erase(v);
  std::erase(inputs_, v);
  std::erase(outputs_, v);
}

void ZxDiagram::fusePorts(int p, int q) {
  if (!isBoundary(p) || !isBoundary(q) || degree(p) != 1 || degree(q) != 1) {
    throw GluingMismatch("fusePorts needs two wired boundary ports");
  }
  const int wp = node(p).wires.front();
  const int wq = node(q).wires.front();
  if (wp == wq) {
    multiplyScalar(wire(wp).hadamard ? Scalar::zero() : Scalar::sqrt2Power(2));
    removeNode(p);
    removeNode(q);
    return;
  }
  const int x = otherEnd(wp, p);
  const int y = otherEnd(wq, q);
  const bool h = wire(wp).hadamard != wire(wq).hadamard;
  removeNode(p);
  removeNode(q);
  addWire(x, y, h);
}

int ZxDiagram::otherEnd(int w, int v) const {
  const auto& wr = wire(w);
  return wr.a == v ? wr.b : wr.a;
}

std::vector<int> ZxDiagram::wiresBetween(int u, int v) const {
  std::vector<int> out;
  for (int w : node(u).wires) {
    const auto& wr = wire(w);
    if ((wr.a == u && wr.b == v) || (wr.a == v && wr.b == u)) {
      out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> ZxDiagram::spiderIds() const {
  std::vector<int> out;
  for (const auto& [id, n] : nodes_) {
    if (n.kind != NodeKind::Boundary) {
      out.push_back(id);
    }
  }
  return out;
}

std::vector<int> ZxDiagram::wireIds() const {
  std::vector<int> out;
  out.reserve(wires_.size());
  for (const auto& [id, w] : wires_) {
    out.push_back(id);
  }
  return out;
}

std::size_t ZxDiagram::spiderCount() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const auto& kv) {
        return kv.second.kind != NodeKind::Boundary;
      }));
}

std::size_t ZxDiagram::hadamardCount() const {
  return static_cast<std::size_t>(std::count_if(
      wires_.begin(), wires_.end(),
      [](const auto& kv) { return kv.second.hadamard; }));
}

std::size_t ZxDiagram::xSpiderCount() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const auto& kv) {
        return kv.second.kind == NodeKind::X;
      }));
}

std::map<int, int> ZxDiagram::absorb(const ZxDiagram& other) {
  std::map<int, int> idMap;
  for (const auto& [id, n] : other.nodes_) {
    const int fresh = nextNode_++;
    nodes_[fresh] = Node{n.kind, n.phase, {}};
    idMap[id] = fresh;
  }
  for (const auto& [id, w] : other.wires_) {
    addWire(idMap.at(w.a), idMap.at(w.b), w.hadamard);
  }
  scalar_ *= other.scalar_;
  return idMap;
}

void ZxDiagram::insertNode(int id, NodeKind kind, Phase phase) {
  if (nodes_.count(id) != 0) {
    throw ParseError("duplicate node id " + std::to_string(id));
  }
  nodes_[id] = Node{kind, phase, {}};
  nextNode_ = std::max(nextNode_, id + 1);
}

void ZxDiagram::insertWire(int id, int a, int b, bool hadamard) {
  if (wires_.count(id) != 0) {
    throw ParseError("duplicate wire id " + std::to_string(id));
  }
  if (!hasNode(a) || !hasNode(b)) {
    throw ParseError("wire " + std::to_string(id) + " references unknown node");
  }
  wires_[id] = Wire{a, b, hadamard};
  nodes_.at(a).wires.push_back(id);
  nodes_.at(b).wires.push_back(id);
  nextWire_ = std::max(nextWire_, id + 1);
}

bool ZxDiagram::operator==(const ZxDiagram& other) const {
  if (inputs_ != other.inputs_ || outputs_ != other.outputs_ ||
      !(scalar_ == other.scalar_) || nodes_.size() != other.nodes_.size() ||
      wires_.size() != other.wires_.size()) {
    return false;
  }
  for (const auto& [id, n] : nodes_) {
    auto it = other.nodes_.find(id);
    if (it == other.nodes_.end() || it->second.kind != n.kind ||
        !(it->second.phase == n.phase)) {
      return false;
    }
  }
  for (const auto& [id, w] : wires_) {
    auto it = other.wires_.find(id);
    if (it == other.wires_.end() || it->second.hadamard != w.hadamard) {
      return false;
    }
    const auto& o = it->second;
    if (!((o.a == w.a && o.b == w.b) || (o.a == w.b && o.b == w.a))) {
      return false;
    }
  }
  return true;
}

namespace {

ZxDiagram spider(NodeKind kind, std::size_t nIn, std::size_t nOut,
                 Phase phase) {
  ZxDiagram d;
  const int s = d.addSpider(kind, phase);
  for (std::size_t i = 0; i < nIn; ++i) {
    d.addWire(d.addInput(), s);
  }
  for (std::size_t i = 0; i < nOut; ++i) {
    d.addWire(s, d.addOutput());
  }
  return d;
}

} // namespace

ZxDiagram zSpider(std::size_t nIn, std::size_t nOut, Phase phase) {
  return spider(NodeKind::Z, nIn, nOut, phase);
}

ZxDiagram xSpider(std::size_t nIn, std::size_t nOut, Phase phase) {
  return spider(NodeKind::X, nIn, nOut, phase);
}

ZxDiagram hadamardGate() {
  ZxDiagram d;
  const int in = d.addInput();
  d.addWire(in, d.addOutput(), true);
  return d;
}

ZxDiagram identityWires(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = i;
  }
  return permutationDiagram(perm);
}

ZxDiagram swapGate() { return permutationDiagram({1, 0}); }

ZxDiagram cup() {
  ZxDiagram d;
  const int a = d.addOutput();
  d.addWire(a, d.addOutput());
  return d;
}

ZxDiagram cap() {
  ZxDiagram d;
  const int a = d.addInput();
  d.addWire(a, d.addInput());
  return d;
}

ZxDiagram permutationDiagram(const std::vector<std::size_t>& perm) {
  ZxDiagram d;
  std::vector<int> ins;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    ins.push_back(d.addInput());
  }
  std::vector<int> outs;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    outs.push_back(d.addOutput());
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t q = 0; q < perm.size(); ++q) {
    if (perm[q] >= perm.size() || seen[perm[q]]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[perm[q]] = true;
    d.addWire(ins[q], outs[perm[q]]);
  }
  return d;
}

ZxDiagram scalarDiagram(const Scalar& s) {
  ZxDiagram d;
  d.setScalar(s);
  return d;
}

ZxDiagram tensor(const ZxDiagram& a, const ZxDiagram& b) {
  ZxDiagram out = a;
  const auto idMap = out.absorb(b);
  for (int p : b.inputs()) {
    out.inputs().push_back(idMap.at(p));
  }
  for (int p : b.outputs()) {
    out.outputs().push_back(idMap.at(p));
  }
  return out;
}

ZxDiagram compose(const ZxDiagram& after, const ZxDiagram& before) {
  if (before.outputs().size() != after.inputs().size()) {
    throw ArityMismatch("compose: " + std::to_string(before.outputs().size()) +
                        " outputs feed " +
                        std::to_string(after.inputs().size()) + " inputs");
  }
  ZxDiagram out = before;
  const auto idMap = out.absorb(after);
  const auto glueFrom = before.outputs();
  out.outputs().clear();
  for (std::size_t k = 0; k < glueFrom.size(); ++k) {
    out.fusePorts(glueFrom[k], idMap.at(after.inputs()[k]));
  }
  for (int p : after.outputs()) {
    out.outputs().push_back(idMap.at(p));
  }
  return out;
}

ZxDiagram conjugate(const ZxDiagram& d) {
  ZxDiagram out = d;
  for (int s : d.spiderIds()) {
    out.setPhase(s, -d.phase(s));
  }
  out.setScalar(d.scalar().conjugate());
  return out;
}

ZxDiagram transpose(const ZxDiagram& d) {
  ZxDiagram out = d;
  std::swap(out.inputs(), out.outputs());
  return out;
}

ZxDiagram adjoint(const ZxDiagram& d) { return transpose(conjugate(d)); }

ZxDiagram replicatePeriodic(const std::function<ZxDiagram(std::size_t)>& cell,
                            std::size_t count, const Gluing& gluing) {
  if (gluing.east.size() != gluing.west.size()) {
    throw GluingMismatch("east has " + std::to_string(gluing.east.size()) +
                         " ports, west has " +
                         std::to_string(gluing.west.size()));
  }
  ZxDiagram out;
  struct Copy {
    std::vector<int> ins;
    std::vector<int> outs;
  };
  std::vector<Copy> copies;
  for (std::size_t i = 0; i < count; ++i) {
    const auto c = cell(i);
    const auto idMap = out.absorb(c);
    Copy cp;
    for (int p : c.inputs()) {
      cp.ins.push_back(idMap.at(p));
    }
    for (int p : c.outputs()) {
      cp.outs.push_back(idMap.at(p));
    }
    copies.push_back(std::move(cp));
  }
  auto port = [&](std::size_t copy, const PortRef& r) {
    const auto& list = r.output ? copies[copy].outs : copies[copy].ins;
    if (r.index >= list.size()) {
      throw GluingMismatch("gluing refers to a missing port");
    }
    return list[r.index];
  };
  std::vector<int> glued;
  if (count > 0) {
    const std::size_t links = gluing.periodic ? count : count - 1;
    for (std::size_t i = 0; i < links; ++i) {
      const std::size_t j = (i + 1) % count;
      for (std::size_t k = 0; k < gluing.east.size(); ++k) {
        const int e = port(i, gluing.east[k]);
        const int w = port(j, gluing.west[k]);
        glued.push_back(e);
        glued.push_back(w);
        out.fusePorts(e, w);
      }
    }
  }
  for (const auto& cp : copies) {
    for (int p : cp.ins) {
      if (std::find(glued.begin(), glued.end(), p) == glued.end()) {
        out.inputs().push_back(p);
      }
    }
    for (int p : cp.outs) {
      if (std::find(glued.begin(), glued.end(), p) == glued.end()) {
        out.outputs().push_back(p);
      }
    }
  }
  return out;
}

ZxDiagram replicatePeriodic(const ZxDiagram& cell, std::size_t count,
                            const Gluing& gluing) {
  return replicatePeriodic([&](std::size_t) { return cell; }, count, gluing);
}

} // namespace zxlat::zx
