#pragma once

#include <string>
#include <vector>

#include "gabortile/boxset.hpp"
#include "gabortile/polygon.hpp"

namespace gabortile {

/// Planar box sets drawn in distinct colours, one per part. Throws DimMismatch
/// for d != 2.
std::string svg_parts(const std::vector<BoxSet>& parts, const std::string& title);

/// Arrangement cells shaded by multiplicity, with the polygon outline.
std::string svg_arrangement(const ConvexPolygon& p, const ArrangementResult& r, const std::string& title);

}  // namespace gabortile
