#include "zxlat/models/graph_io.hpp"

#include "zxlat/errors.hpp"

#include <fstream>

namespace zxlat::models {

using nlohmann::json;

namespace {

std::vector<std::string> labels(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(std::string("missing array \"") + key + "\"");
  }
  std::vector<std::string> out;
  for (const auto& e : doc[key]) {
    out.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  }
  return out;
}

} // namespace

BipartiteModel loadGraph(const json& doc, std::vector<std::string>* warnings) {
  if (!doc.is_object()) {
    throw ParseError("graph document must be an object");
  }
  BipartiteModel m;
  m.name = doc.value("name", std::string("graph"));
  m.vLabels = labels(doc, "v");
  m.vhatLabels = labels(doc, "vhat");
  if (!doc.contains("sigma_rows") || !doc["sigma_rows"].is_array()) {
    throw ParseError("missing array \"sigma_rows\"");
  }
  const auto& rows = doc["sigma_rows"];
  if (rows.size() != m.vhatLabels.size()) {
    throw ParseError("sigma_rows needs one row per vhat");
  }
  std::vector<std::string> bits;
  for (const auto& r : rows) {
    if (!r.is_string()) {
      throw ParseError("sigma rows must be bit strings");
    }
    const auto s = r.get<std::string>();
    if (s.size() != m.vLabels.size()) {
      throw ParseError("sigma row length must equal |V|");
    }
    for (char c : s) {
      if (c != '0' && c != '1') {
        throw NonBinaryEntry("sigma entry '" + std::string(1, c) + "' is not 0 or 1");
      }
    }
    bits.push_back(s);
  }
  m.sigma = gf2::BitMatrix::fromRows(bits, m.vLabels.size());
  if (doc.contains("kappa") && !doc["kappa"].is_null()) {
    const auto& k = doc["kappa"];
    try {
      m.kappa = k.is_string() ? Rational::parse(k.get<std::string>())
                              : Rational::of(k.get<std::int64_t>());
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad kappa: ") + e.what());
    }
  } else {
    m.kappa = Rational::of(static_cast<std::int64_t>(m.edgeCount()) -
                               static_cast<std::int64_t>(m.nVHat()),
                           2);
  }
  if (warnings != nullptr && !m.isConnected()) {
    warnings->push_back("graph on V + V-hat is disconnected");
  }
  return m;
}

BipartiteModel loadGraphFile(const std::string& path,
                             std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return loadGraph(doc, warnings);
}

json saveGraph(const BipartiteModel& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.nVHat(); ++r) {
    rows.push_back(m.sigma.row(r).toString());
  }
  return json{{"name", m.name},
              {"v", m.vLabels},
              {"vhat", m.vhatLabels},
              {"sigma_rows", rows},
              {"kappa", m.kappa.toString()}};
}

CellSet loadCellSet(const json& doc, const Lattice3& lat) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("cells")) {
    throw ParseError("cell set needs \"kind\" and \"cells\"");
  }
  const auto kind = doc["kind"].get<std::string>();
  CellSet out{CellSetKind::Curve, {}};
  std::size_t n = lat.links();
  if (kind == "dual_surface") {
    out.kind = CellSetKind::DualSurface;
  } else if (kind == "curve") {
    out.kind = CellSetKind::Curve;
  } else if (kind == "dual_curve") {
    out.kind = CellSetKind::DualCurve;
    n = lat.plaquettes();
  } else {
    throw ParseError("unknown cell set kind " + kind);
  }
  out.cells = gf2::BitVector(n);
  for (const auto& c : doc["cells"]) {
    const auto i = c.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= n) {
      if (out.kind == CellSetKind::Curve) {
        throw BadCurve("cell index out of range");
      }
      throw BadSurface("cell index out of range");
    }
    out.cells.flip(static_cast<std::size_t>(i));
  }
  return out;
}

} // namespace zxlat::models
