#pragma once

#include "zxlat/zx/diagram.hpp"

#include <json.hpp>

namespace zxlat::zx {

/// Ports are the ids listed in "inputs"/"outputs"; every other wire endpoint
/// must be a spider. Wire ids and non-exact phases ("phase_radians") are
/// written too so that a round trip is lossless.
nlohmann::json toJson(const ZxDiagram& d);
ZxDiagram fromJson(const nlohmann::json& j);

nlohmann::json scalarToJson(const Scalar& s);
Scalar scalarFromJson(const nlohmann::json& j);

} // namespace zxlat::zx
