#pragma once

#include "zxlat/models/bipartite.hpp"
#include "zxlat/models/lattice3.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace zxlat::models {

/// {"v": [labels], "vhat": [labels], "sigma_rows": ["0110", ...],
///  "kappa": "p/q" (optional), "name": (optional)}.
/// kappa defaults to (|E| - |V-hat|)/2. A disconnected graph loads but adds
/// a message to `warnings`.
BipartiteModel loadGraph(const nlohmann::json& doc,
                         std::vector<std::string>* warnings = nullptr);
BipartiteModel loadGraphFile(const std::string& path,
                             std::vector<std::string>* warnings = nullptr);
nlohmann::json saveGraph(const BipartiteModel& m);

enum class CellSetKind { DualSurface, Curve, DualCurve };

struct CellSet {
  CellSetKind kind;
  /// Over links for surfaces and curves, over plaquettes for dual curves.
  gf2::BitVector cells;
};

/// {"kind": "dual_surface" | "curve" | "dual_curve", "cells": [indices]}.
CellSet loadCellSet(const nlohmann::json& doc, const Lattice3& lat);

} // namespace zxlat::models
