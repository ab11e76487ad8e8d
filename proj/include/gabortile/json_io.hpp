#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gabortile/expcomplete.hpp"
#include "gabortile/gabor.hpp"
#include "gabortile/polygon.hpp"
#include "gabortile/window.hpp"

namespace gabortile {

using Json = nlohmann::ordered_json;

/// Inputs of every CLI command; absent fields are simply not used.
struct Scene {
  std::optional<BoxSet> window;
  std::optional<ConvexPolygon> polygon;
  std::optional<RatMatrix> lattice;  // generator, row-major
  std::optional<std::size_t> block_split;
  std::optional<RatMatrix> A, B, D;
};

/// Throws ParseError: syntax errors carry line and column, semantic errors
/// the JSON pointer of the offending value.
Scene parse_scene(std::string_view text);
Json scene_to_json(const Scene& scene);
bool same_scene(const Scene& a, const Scene& b);

// Rationals travel as "p" or "p/q" strings.
Json to_json(const Rat& r);
Json to_json(const RatVec& v);
Json to_json(const IntVec& v);
Json to_json(const RatMatrix& m);
Json to_json(const Box& b);
Json to_json(const BoxSet& k);
Json to_json(const ConvexPolygon& p);
Json to_json(const FourierValue& v);
Json to_json(const Verdict& v);
Json to_json(const StructureReport& s);
Json to_json(const ShiftSolution& s);
Json to_json(const ExpClassification& c);
Json to_json(const WindowConstruction& w);
Json to_json(const ArrangementCell& c);
Json to_json(const ArrangementResult& r);
Json to_json(const OctagonReport& r);

Rat rat_from_json(const Json& j, const std::string& where);
RatMatrix matrix_from_json(const Json& j, const std::string& where);
BoxSet boxset_from_json(const Json& j, const std::string& where);
ConvexPolygon polygon_from_json(const Json& j, const std::string& where);

}  // namespace gabortile
