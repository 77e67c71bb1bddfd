#pragma once

#include "zxlat/models/bipartite.hpp"

namespace zxlat::models {

struct SearchOptions {
  /// Largest |V| + |V-hat| searched exhaustively.
  std::size_t searchCap = 64;
  /// Stop after this many automorphisms.
  std::size_t limit = 1u << 20;
};

/// Every preserving (reversing = false) or reversing automorphism, by
/// backtracking with degree and neighbour-degree pruning. Deterministic:
/// results are in lexicographic order of the image list of V then V-hat.
/// Throws SearchCapExceeded above the cap.
std::vector<Automorphism> findAutomorphisms(const BipartiteModel& m,
                                            bool reversing,
                                            const SearchOptions& opts = {});

} // namespace zxlat::models
