#include "gabortile/json_io.hpp"

#include "gabortile/error.hpp"

namespace gabortile {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string child_key(const std::string& where, const char* key) { return where + "/" + key; }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Json blocks_to_json(const TimeFrequencyBlocks& f) {
  Json j;
  j["A"] = to_json(f.A);
  j["D"] = to_json(f.D);
  j["C"] = to_json(f.C);
  j["B"] = to_json(f.B);
  return j;
}

Json witness_to_json(const Witness& w) {
  Json j;
  j["m"] = to_json(w.m);
  j["n"] = to_json(w.n);
  j["frequency"] = to_json(w.frequency);
  j["overlap"] = to_json(w.overlap);
  j["value"] = to_json(w.value);
  j["float_inner_product"] = w.float_inner_product;
  return j;
}

Json pair_to_json(const std::optional<std::pair<ArrangementCell, ArrangementCell>>& w) {
  if (!w) return nullptr;
  return Json::array({to_json(w->first), to_json(w->second)});
}

}  // namespace

Json to_json(const Rat& r) { return format_rat(r); }

Json to_json(const RatVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const IntVec& v) {
  Json j = Json::array();
  for (long long x : v) j.push_back(x);
  return j;
}

Json to_json(const RatMatrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
  return j;
}

Json to_json(const Box& b) {
  Json j = Json::array();
  for (std::size_t i = 0; i < b.dim(); ++i) j.push_back(Json::array({to_json(b.lo[i]), to_json(b.hi[i])}));
  return j;
}

Json to_json(const BoxSet& k) {
  Json j;
  j["dim"] = k.dim();
  j["boxes"] = Json::array();
  for (const auto& b : k.boxes()) j["boxes"].push_back(to_json(b));
  return j;
}

Json to_json(const ConvexPolygon& p) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(to_json(v));
  return j;
}

Json to_json(const FourierValue& v) {
  Json j;
  j["xi"] = to_json(v.xi);
  j["zero"] = v.is_zero();
  j["numerator"] = v.numerator.to_string();
  j["rational_scale"] = to_json(v.rational_scale);
  auto z = v.to_complex();
  j["approx"] = Json::array({z.real(), z.imag()});
  return j;
}

Json to_json(const StructureReport& s) {
  Json j;
  j["N"] = s.N;
  j["time_domains"] = Json::array();
  for (const auto& d : s.time_domains) j["time_domains"].push_back(to_json(d));
  j["freq_domains"] = Json::array();
  for (const auto& d : s.freq_domains) j["freq_domains"].push_back(to_json(d));
  j["tiles_and_spectral"] = s.tiles_and_spectral;
  j["spectrum"] = s.spectrum ? to_json(s.spectrum->generator()) : Json(nullptr);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = std::string(to_string(v.status));
  j["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  j["structure"] = v.structure ? to_json(*v.structure) : Json(nullptr);
  j["form"] = blocks_to_json(v.form);
  return j;
}

Json to_json(const ShiftSolution& s) {
  Json j;
  j["status"] = s.status == ShiftStatus::Satisfiable ? "SATISFIABLE" : "EMPTY";
  j["reason"] = s.reason;
  j["system"] = Json::array();
  for (const auto& c : s.system) {
    Json cj;
    cj["m"] = to_json(c.m);
    cj["overlap"] = to_json(c.overlap);
    cj["options"] = Json::array();
    for (const auto& o : c.options) {
      Json oj;
      oj["coord"] = o.coord;
      oj["residues"] = to_json(o.residues);
      oj["modulus"] = to_json(o.modulus);
      cj["options"].push_back(oj);
    }
    j["system"].push_back(cj);
  }
  j["C"] = s.C ? to_json(*s.C) : Json(nullptr);
  return j;
}

Json to_json(const ExpClassification& c) {
  Json j;
  j["status"] = std::string(to_string(c.status));
  if (c.form) {
    Json f;
    f["kind"] = c.form->kind == NormalFormKind::Form1 ? "FORM1" : "FORM2";
    f["modulus"] = c.form->modulus.get_str();
    f["shear"] = to_json(c.form->shear);
    f["matrix"] = to_json(c.form->matrix);
    j["form"] = f;
  } else {
    j["form"] = nullptr;
  }
  j["U"] = c.U ? to_json(*c.U) : Json(nullptr);
  j["xi"] = c.xi ? to_json(*c.xi) : Json(nullptr);
  return j;
}

Json to_json(const WindowConstruction& w) {
  Json j;
  j["A"] = to_json(w.A);
  j["D"] = to_json(w.D);
  j["E"] = to_json(w.E);
  j["X"] = to_json(w.X);
  j["original"] = to_json(w.original.generator());
  j["lattice"] = to_json(w.equivalent_lattice.generator());
  j["window"] = to_json(w.window);
  return j;
}

Json to_json(const ArrangementCell& c) {
  Json j;
  j["sample"] = to_json(c.sample);
  j["area"] = to_json(c.area);
  j["multiplicity"] = c.multiplicity;
  return j;
}

Json to_json(const ArrangementResult& r) {
  Json j;
  j["level"] = r.level ? Json(*r.level) : Json(nullptr);
  j["complete"] = r.complete;
  j["cell_count"] = r.cells.size();
  j["covered_area"] = to_json(r.covered_area);
  j["witness"] = pair_to_json(r.witness);
  return j;
}

Json to_json(const OctagonReport& r) {
  Json j;
  j["octagon"] = to_json(r.octagon);
  j["area"] = to_json(r.octagon_area);
  j["shift"] = to_json(r.shift);
  j["parallelogram"] = to_json(r.parallelogram);
  j["Q"] = to_json(r.Q);
  j["offset"] = to_json(r.offset);
  j["factorization_verified"] = r.factorization_verified;
  j["max_param"] = r.max_param;
  j["integer_B"] = "excluded: an integer B would force the octagon to tile, but its area is 14";
  j["general_p"] = "cited, not verified: parameters above max_param";
  j["cases"] = Json::array();
  for (const auto& c : r.cases) {
    Json cj;
    cj["lattice"] = to_json(RatMatrix::diagonal({c.alpha, 1 / c.alpha}));
    cj["required_level"] = c.required_level;
    cj["refuted"] = c.refuted;
    cj["witness"] = pair_to_json(c.witness);
    j["cases"].push_back(cj);
  }
  j["candidates"] = Json::array();
  for (const auto& c : r.candidates) {
    Json cj;
    cj["form"] = c.form.kind == NormalFormKind::Form1 ? "FORM1" : "FORM2";
    cj["QtB"] = to_json(c.form.matrix);
    cj["xi"] = to_json(c.xi);
    cj["witness_validated"] = c.witness_validated;
    cj["B"] = to_json(c.B);
    cj["U"] = to_json(c.U);
    cj["reduced"] = to_json(c.reduced);
    cj["alpha"] = to_json(c.alpha);
    cj["tiling_lattice"] = to_json(c.tiling);
    cj["tiling_refuted"] = c.tiling_refuted;
    cj["tiling_witness"] = pair_to_json(c.tiling_witness);
    j["candidates"].push_back(cj);
  }
  j["all_refuted"] = r.all_refuted;
  j["unrefuted_candidates"] = r.unrefuted_candidates;
  return j;
}

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return to_rat(j.get<long long>());
  if (!j.is_string()) fail(where, "rationals must be strings such as \"3/2\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

RatMatrix matrix_from_json(const Json& j, const std::string& where) {
  require_array(j, where);
  if (j.empty()) fail(where, "empty matrix");
  std::vector<RatVec> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& row = require_array(j[r], child(where, r));
    RatVec v;
    for (std::size_t c = 0; c < row.size(); ++c) v.push_back(rat_from_json(row[c], child(child(where, r), c)));
    if (!rows.empty() && v.size() != rows.front().size()) fail(child(where, r), "ragged matrix");
    rows.push_back(std::move(v));
  }
  return RatMatrix::from_rows(rows);
}

BoxSet boxset_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("boxes")) fail(where, "expected {\"dim\", \"boxes\"}");
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0) fail(child_key(where, "dim"), "positive integer");
  const std::size_t d = j["dim"].get<std::size_t>();
  const std::string bw = child_key(where, "boxes");
  const Json& boxes = require_array(j["boxes"], bw);
  std::vector<Box> out;
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    const Json& box = require_array(boxes[b], child(bw, b));
    if (box.size() != d) fail(child(bw, b), "expected " + std::to_string(d) + " intervals");
    Box bx;
    for (std::size_t i = 0; i < d; ++i) {
      const std::string iw = child(child(bw, b), i);
      const Json& iv = require_array(box[i], iw);
      if (iv.size() != 2) fail(iw, "an interval is [lo, hi]");
      bx.lo.push_back(rat_from_json(iv[0], child(iw, 0)));
      bx.hi.push_back(rat_from_json(iv[1], child(iw, 1)));
      if (!(bx.lo.back() < bx.hi.back())) fail(iw, "empty interval");
    }
    out.push_back(std::move(bx));
  }
  return BoxSet::from_boxes(d, out);
}

ConvexPolygon polygon_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("vertices")) fail(where, "expected {\"vertices\"}");
  const std::string vw = child_key(where, "vertices");
  const Json& vs = require_array(j["vertices"], vw);
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Json& v = require_array(vs[i], child(vw, i));
    if (v.size() != 2) fail(child(vw, i), "vertices are 2-vectors");
    out.push_back({rat_from_json(v[0], child(child(vw, i), 0)), rat_from_json(v[1], child(child(vw, i), 1))});
  }
  return ConvexPolygon(std::move(out));
}

Scene parse_scene(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                           ": malformed JSON");
  }
  if (!j.is_object()) fail("", "a scene is a JSON object");
  static const char* known[] = {"window", "lattice", "block_split", "A", "B", "D"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) fail("/" + key, "unknown field");
  }
  Scene s;
  if (j.contains("window")) {
    const Json& w = j["window"];
    if (w.is_object() && w.contains("vertices"))
      s.polygon = polygon_from_json(w, "/window");
    else
      s.window = boxset_from_json(w, "/window");
  }
  if (j.contains("lattice")) s.lattice = matrix_from_json(j["lattice"], "/lattice");
  if (j.contains("block_split")) {
    if (!j["block_split"].is_number_unsigned()) fail("/block_split", "positive integer");
    s.block_split = j["block_split"].get<std::size_t>();
  }
  if (j.contains("A")) s.A = matrix_from_json(j["A"], "/A");
  if (j.contains("B")) s.B = matrix_from_json(j["B"], "/B");
  if (j.contains("D")) s.D = matrix_from_json(j["D"], "/D");
  return s;
}

Json scene_to_json(const Scene& s) {
  Json j = Json::object();
  if (s.window) j["window"] = to_json(*s.window);
  if (s.polygon) j["window"] = to_json(*s.polygon);
  if (s.lattice) j["lattice"] = to_json(*s.lattice);
  if (s.block_split) j["block_split"] = *s.block_split;
  if (s.A) j["A"] = to_json(*s.A);
  if (s.B) j["B"] = to_json(*s.B);
  if (s.D) j["D"] = to_json(*s.D);
  return j;
}

bool same_scene(const Scene& a, const Scene& b) {
  auto same_box = [](const auto& x, const auto& y) { return x.has_value() == y.has_value() && (!x || same_set(*x, *y)); };
  auto same_poly = [](const auto& x, const auto& y) {
    return x.has_value() == y.has_value() && (!x || same_polygon(*x, *y));
  };
  return same_box(a.window, b.window) && same_poly(a.polygon, b.polygon) && a.lattice == b.lattice &&
         a.block_split == b.block_split && a.A == b.A && a.B == b.B && a.D == b.D;
}

}  // namespace gabortile
