#pragma once

#include <optional>
#include <string>

#include "tlimm/immanant.hpp"
#include "tlimm/tl.hpp"

namespace tlimm::io {

// Unprimed vertices down the left column, primed down the right; same-side
// pairs bend inward as nested brackets, through strands run between columns.
std::string render_ascii(const NonCrossingMatching& m);
std::string render_svg(const NonCrossingMatching& m);

// n×n grid, '#' for cells of the shape and '.' outside; when `points` is
// given its entries (i, w(i)) are drawn as '*'.
std::string render_ascii(const SkewShape& s, const std::optional<Permutation>& points = std::nullopt);
std::string render_svg(const SkewShape& s, const std::optional<Permutation>& points = std::nullopt);

}  // namespace tlimm::io
