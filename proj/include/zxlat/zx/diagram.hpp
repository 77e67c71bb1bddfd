#pragma once

#include "zxlat/zx/phase.hpp"
#include "zxlat/zx/scalar.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace zxlat::zx {

enum class NodeKind { Z, X, Boundary };

inline NodeKind opposite(NodeKind k) {
  return k == NodeKind::Z ? NodeKind::X : NodeKind::Z;
}

struct Node {
  NodeKind kind = NodeKind::Z;
  Phase phase;
  /// Incident wire ids; a self-loop appears twice.
  std::vector<int> wires;
};

struct Wire {
  int a = -1;
  int b = -1;
  bool hadamard = false;
};

/// Open graph of spiders and boundary ports. Spiders and ports share one id
/// space; every port has exactly one wire. Parallel wires and self-loops are
/// allowed. Qubit order follows the inputs/outputs lists (qubit 0 is the most
/// significant bit of a basis index).
class ZxDiagram {
public:
  ZxDiagram() = default;

  int addSpider(NodeKind kind, Phase phase = {});
  int addInput();
  int addOutput();
  int addWire(int a, int b, bool hadamard = false);
  void removeWire(int w);
  /// Removes a node together with all incident wires.
  void removeNode(int v);

  /// Joins the wires ending at two ports and deletes the ports. A port wired
  /// straight to the other closes a loop, worth 2 (plain) or 0 (Hadamard).
  void fusePorts(int p, int q);

  [[nodiscard]] bool hasNode(int v) const { return nodes_.count(v) != 0; }
  [[nodiscard]] bool hasWire(int w) const { return wires_.count(w) != 0; }
  [[nodiscard]] const Node& node(int v) const { return nodes_.at(v); }
  [[nodiscard]] const Wire& wire(int w) const { return wires_.at(w); }
  [[nodiscard]] bool isBoundary(int v) const {
    return node(v).kind == NodeKind::Boundary;
  }
  [[nodiscard]] bool isSpider(int v) const {
    return hasNode(v) && !isBoundary(v);
  }
  [[nodiscard]] NodeKind kind(int v) const { return node(v).kind; }
  [[nodiscard]] const Phase& phase(int v) const { return node(v).phase; }
  [[nodiscard]] std::size_t degree(int v) const {
    return node(v).wires.size();
  }
  [[nodiscard]] int otherEnd(int w, int v) const;
  [[nodiscard]] bool isSelfLoop(int w) const {
    return wire(w).a == wire(w).b;
  }
  /// Wires between two distinct nodes, sorted by id.
  [[nodiscard]] std::vector<int> wiresBetween(int u, int v) const;

  void setPhase(int v, Phase p) { nodes_.at(v).phase = p; }
  void addPhase(int v, const Phase& p) { nodes_.at(v).phase += p; }
  void setKind(int v, NodeKind k) { nodes_.at(v).kind = k; }
  void setHadamard(int w, bool h) { wires_.at(w).hadamard = h; }
  void toggleHadamard(int w) { wires_.at(w).hadamard = !wires_.at(w).hadamard; }

  /// Sorted ids.
  [[nodiscard]] std::vector<int> spiderIds() const;
  [[nodiscard]] std::vector<int> wireIds() const;
  [[nodiscard]] const std::map<int, Node>& nodes() const { return nodes_; }
  [[nodiscard]] const std::map<int, Wire>& wires() const { return wires_; }

  [[nodiscard]] std::size_t spiderCount() const;
  [[nodiscard]] std::size_t wireCount() const { return wires_.size(); }
  [[nodiscard]] std::size_t hadamardCount() const;
  [[nodiscard]] std::size_t xSpiderCount() const;

  [[nodiscard]] const std::vector<int>& inputs() const { return inputs_; }
  [[nodiscard]] const std::vector<int>& outputs() const { return outputs_; }
  std::vector<int>& inputs() { return inputs_; }
  std::vector<int>& outputs() { return outputs_; }

  [[nodiscard]] const Scalar& scalar() const { return scalar_; }
  void setScalar(const Scalar& s) { scalar_ = s; }
  void multiplyScalar(const Scalar& s) { scalar_ *= s; }

  /// Copies all nodes and wires of `other` in with fresh ids. Returns the id
  /// map; boundary lists are not touched.
  std::map<int, int> absorb(const ZxDiagram& other);

  /// Low-level insertion with a chosen id (used by deserialization).
  void insertNode(int id, NodeKind kind, Phase phase);
  void insertWire(int id, int a, int b, bool hadamard);

  bool operator==(const ZxDiagram& other) const;

private:
  std::map<int, Node> nodes_;
  std::map<int, Wire> wires_;
  std::vector<int> inputs_;
  std::vector<int> outputs_;
  Scalar scalar_;
  int nextNode_ = 0;
  int nextWire_ = 0;

  void detach(int v, int w);
};

// generators
ZxDiagram zSpider(std::size_t nIn, std::size_t nOut, Phase phase = {});
ZxDiagram xSpider(std::size_t nIn, std::size_t nOut, Phase phase = {});
ZxDiagram hadamardGate();
ZxDiagram identityWires(std::size_t n = 1);
ZxDiagram swapGate();
ZxDiagram cup();
ZxDiagram cap();
/// Input q is wired to output perm[q].
ZxDiagram permutationDiagram(const std::vector<std::size_t>& perm);
ZxDiagram scalarDiagram(const Scalar& s);

ZxDiagram tensor(const ZxDiagram& a, const ZxDiagram& b);
/// Glues before's outputs to after's inputs.
ZxDiagram compose(const ZxDiagram& after, const ZxDiagram& before);
ZxDiagram conjugate(const ZxDiagram& d);
ZxDiagram transpose(const ZxDiagram& d);
ZxDiagram adjoint(const ZxDiagram& d);

/// Port matching for replicated cells. Positions refer to the cell's inputs
/// or outputs lists.
struct PortRef {
  bool output = false;
  std::size_t index = 0;
};

struct Gluing {
  std::vector<PortRef> east;
  std::vector<PortRef> west;
  bool periodic = true;
};

/// Concatenates `count` copies of a cell, gluing east ports of copy i to the
/// west ports of copy i+1 (and the last to the first when periodic). The
/// remaining ports keep the cell's order, copy by copy.
ZxDiagram replicatePeriodic(const std::function<ZxDiagram(std::size_t)>& cell,
                            std::size_t count, const Gluing& gluing);
ZxDiagram replicatePeriodic(const ZxDiagram& cell, std::size_t count,
                            const Gluing& gluing);

} // namespace zxlat::zx
