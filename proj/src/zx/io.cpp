#include "zxlat/zx/io.hpp"

#include "zxlat/errors.hpp"

#include <set>

namespace zxlat::zx {

using nlohmann::json;

json scalarToJson(const Scalar& s) {
  return json{{"zero", s.isZero()},
              {"half_power", s.halfPower()},
              {"eighth_root", s.eighthRoot()},
              {"residual_re", s.residual().real()},
              {"residual_im", s.residual().imag()}};
}

Scalar scalarFromJson(const json& j) {
  return Scalar::fromParts(j.value("zero", false), j.value("half_power", 0),
                           j.value("eighth_root", 0),
                           {j.value("residual_re", 1.0),
                            j.value("residual_im", 0.0)});
}

json toJson(const ZxDiagram& d) {
  json spiders = json::array();
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind == NodeKind::Boundary) {
      continue;
    }
    json s{{"id", id}, {"color", n.kind == NodeKind::Z ? "Z" : "X"}};
    if (n.phase.isExact()) {
      s["phase_num"] = n.phase.numerator();
      s["phase_den_log2"] = n.phase.log2Denominator();
    } else {
      s["phase_num"] = 0;
      s["phase_den_log2"] = 0;
      s["phase_radians"] = n.phase.toRadians();
    }
    spiders.push_back(s);
  }
  json wires = json::array();
  for (const auto& [id, w] : d.wires()) {
    wires.push_back(json{{"id", id}, {"a", w.a}, {"b", w.b},
                         {"hadamard", w.hadamard}});
  }
  return json{{"spiders", spiders},
              {"wires", wires},
              {"inputs", d.inputs()},
              {"outputs", d.outputs()},
              {"scalar", scalarToJson(d.scalar())}};
}

ZxDiagram fromJson(const json& j) {
  try {
    ZxDiagram d;
    for (const auto& s : j.at("spiders")) {
      const auto color = s.at("color").get<std::string>();
      if (color != "Z" && color != "X") {
        throw ParseError("spider color must be Z or X, got " + color);
      }
      Phase phase = s.contains("phase_radians")
                        ? Phase::radians(s.at("phase_radians").get<double>())
                        : Phase::exact(s.value("phase_num", 0),
                                       s.value("phase_den_log2", 0));
      d.insertNode(s.at("id").get<int>(),
                   color == "Z" ? NodeKind::Z : NodeKind::X, phase);
    }
    std::set<int> ports;
    for (const auto* key : {"inputs", "outputs"}) {
      for (const auto& p : j.at(key)) {
        const int id = p.get<int>();
        if (!ports.insert(id).second) {
          throw ParseError("port " + std::to_string(id) + " listed twice");
        }
        d.insertNode(id, NodeKind::Boundary, {});
        (std::string(key) == "inputs" ? d.inputs() : d.outputs()).push_back(id);
      }
    }
    int autoId = 0;
    for (const auto& w : j.at("wires")) {
      if (w.contains("id")) {
        autoId = std::max(autoId, w.at("id").get<int>() + 1);
      }
    }
    for (const auto& w : j.at("wires")) {
      const int id = w.contains("id") ? w.at("id").get<int>() : autoId++;
      d.insertWire(id, w.at("a").get<int>(), w.at("b").get<int>(),
                   w.value("hadamard", false));
    }
    for (int p : ports) {
      if (d.degree(p) != 1) {
        throw ParseError("port " + std::to_string(p) +
                         " must have exactly one wire");
      }
    }
    if (j.contains("scalar")) {
      d.setScalar(scalarFromJson(j.at("scalar")));
    }
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed diagram JSON: ") + e.what());
  }
}

} // namespace zxlat::zx
