#include "gabortile/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "gabortile/error.hpp"
#include "gabortile/json_io.hpp"
#include "gabortile/svg.hpp"

namespace gabortile {

namespace {

constexpr const char* kVersion = "1.0.0";

struct Options {
  std::string scene_path;
  std::string svg_path;
  long max_param = 50;
  bool compact = false;
};

struct Outcome {
  Json result;
  int code = kExitOk;
  std::string svg;
};

Error missing(const char* field) {
  return Error(ErrorKind::ParseError, std::string("scene lacks ") + field);
}

Scene load(const Options& o) {
  if (o.scene_path.empty()) throw Error(ErrorKind::ParseError, "--scene FILE is required");
  std::ifstream in(o.scene_path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + o.scene_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

RatLattice scene_lattice(const Scene& s) {
  if (!s.lattice) throw missing("/lattice");
  return RatLattice(*s.lattice);
}

const BoxSet& scene_boxes(const Scene& s) {
  if (!s.window) throw missing("a box-union /window");
  return *s.window;
}

Json generator_result(const RatLattice& l) {
  Json j;
  j["generator"] = to_json(l.generator());
  j["density"] = to_json(density(l));
  return j;
}

Outcome cmd_canonicalize(const Scene& s) {
  HermiteResult h = canonical_generator(scene_lattice(s).generator());
  Outcome o;
  o.result["generator"] = to_json(h.H);
  o.result["unimodular"] = to_json(h.P);
  return o;
}

Outcome cmd_dual(const Scene& s) { return {generator_result(dual(scene_lattice(s))), kExitOk, {}}; }

Outcome cmd_adjoint(const Scene& s) { return {generator_result(adjoint(scene_lattice(s))), kExitOk, {}}; }

GaborSpec scene_spec(const Scene& s) {
  GaborSpec spec = make_gabor_spec(scene_boxes(s), scene_lattice(s));
  if (s.block_split && *s.block_split != spec.block_split)
    throw Error(ErrorKind::DimMismatch, "block_split does not match the window dimension");
  return spec;
}

Outcome cmd_check(const Scene& s) {
  const GaborSpec spec = scene_spec(s);
  Verdict v = gabor_check(spec);
  if (v.status == GaborStatus::Orthonormal) v.structure = structure_report(spec, v);
  Outcome o;
  o.result = to_json(v);
  if (v.structure && spec.window.dim() == 2) {
    std::vector<BoxSet> parts = v.structure->time_domains;
    o.svg = svg_parts(parts, "time-side fundamental domains");
  }
  return o;
}

Outcome cmd_multitile(const Scene& s) {
  const RatLattice lat = scene_lattice(s);
  Outcome o;
  if (s.polygon) {
    ArrangementResult r = multitile_verify_arrangement(*s.polygon, canonicalize(lat));
    o.result["window"] = "polygon";
    o.result["arrangement"] = to_json(r);
    o.svg = svg_arrangement(*s.polygon, r, "multiplicity by arrangement cell");
    return o;
  }
  const BoxSet& k = scene_boxes(s);
  auto direct = multitile_level_direct(k, lat);
  auto fourier = multitile_level_fourier(k, lat);
  if (direct != fourier) throw Error(ErrorKind::InvariantViolation, "direct and Fourier levels disagree");
  o.result["window"] = "boxes";
  o.result["level"] = direct ? Json(*direct) : Json(nullptr);
  o.result["packing"] = is_packing(k, lat);
  if (direct && k.dim() == 2) o.svg = svg_parts(fd_decomposition(k, lat), "fundamental domains");
  return o;
}

Outcome cmd_decompose(const Scene& s) {
  const BoxSet& k = scene_boxes(s);
  const RatLattice lat = scene_lattice(s);
  Outcome o;
  auto level = multitile_level_direct(k, lat);
  o.result["level"] = level ? Json(*level) : Json(nullptr);
  if (!level) return o;
  auto parts = fd_decomposition(k, lat);
  o.result["domains"] = Json::array();
  for (const auto& p : parts) o.result["domains"].push_back(to_json(p));
  o.result["classes"] = Json::array();
  for (const auto& c : ks_decomposition(k, lat)) {
    Json cj;
    cj["S"] = Json::array();
    for (const auto& t : c.S) cj["S"].push_back(to_json(t));
    cj["part"] = to_json(c.part);
    o.result["classes"].push_back(cj);
  }
  o.result["packing_shift"] = *level > 1 ? to_json(packing_shift(k, lat)) : Json(nullptr);
  if (k.dim() == 2) o.svg = svg_parts(parts, "fundamental domains");
  return o;
}

Outcome cmd_solve_shift(const Scene& s) {
  if (!s.A) throw missing("/A");
  if (!s.B) throw missing("/B");
  return {to_json(admissible_shift_solver(scene_boxes(s), *s.A, *s.B)), kExitOk, {}};
}

Outcome cmd_classify_exp(const Scene& s) {
  if (!s.B) throw missing("/B");
  const RatMatrix& b = *s.B;
  if (!b.square()) throw Error(ErrorKind::NotSquare, "B must be square");
  const std::size_t d = b.rows();
  const BoxSet cube = BoxSet::from_disjoint(d, {Box{RatVec(d, Rat(0)), RatVec(d, Rat(1))}});
  const bool on_cube = !s.window || same_set(*s.window, cube);
  Outcome o;
  if (on_cube && d == 1) {
    o.result = to_json(expcomplete_1d(b(0, 0)));
    o.result["decided_by"] = "one-dimensional law";
    return o;
  }
  if (on_cube && d == 2 && abs(b.determinant()) == 1) {
    o.result = to_json(classify_2x2(b));
    o.result["decided_by"] = "normal forms";
    return o;
  }
  if (auto xi = incompleteness_witness(b, s.window)) {
    ExpClassification c;
    c.status = ExpStatus::Incomplete;
    c.xi = *xi;
    o.result = to_json(c);
    o.result["decided_by"] = "validated witness";
    return o;
  }
  o.result["status"] = "INCONCLUSIVE";
  o.result["decided_by"] = "bounded witness search exhausted";
  o.code = kExitInconclusive;
  return o;
}

Outcome cmd_construct_window(const Scene& s) {
  if (!s.A) throw missing("/A");
  if (!s.D) throw missing("/D");
  WindowConstruction w = construct_window(*s.A, *s.D);
  Certification c = certify_construction(w);
  Outcome o;
  o.result["construction"] = to_json(w);
  o.result["verdict"] = to_json(c.equivalent);
  o.result["original_verdict"] = std::string(to_string(c.original.status));
  if (w.window.dim() == 2) o.svg = svg_parts({w.window}, "constructed window");
  return o;
}

Outcome cmd_octagon(const Options& opt) {
  OctagonReport r = octagon_pipeline(opt.max_param);
  Outcome o;
  o.result = to_json(r);
  if (!opt.svg_path.empty()) {
    ArrangementResult full =
        multitile_verify_arrangement(r.octagon, RatLattice(RatMatrix::diagonal({2, frac(1, 2)})));
    o.svg = svg_arrangement(r.octagon, full, "octagon by diag(2, 1/2)");
  }
  return o;
}

Outcome dispatch(const std::string& command, const Options& opt) {
  if (command == "octagon") return cmd_octagon(opt);
  const Scene s = load(opt);
  if (command == "canonicalize") return cmd_canonicalize(s);
  if (command == "dual") return cmd_dual(s);
  if (command == "adjoint") return cmd_adjoint(s);
  if (command == "check") return cmd_check(s);
  if (command == "multitile") return cmd_multitile(s);
  if (command == "decompose") return cmd_decompose(s);
  if (command == "solve-shift") return cmd_solve_shift(s);
  if (command == "classify-exp") return cmd_classify_exp(s);
  return cmd_construct_window(s);
}

void emit(std::ostream& out, const Json& j, bool compact) { out << (compact ? j.dump() : j.dump(2)) << "\n"; }

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const char* commands[][2] = {
      {"canonicalize", "Canonical lower-triangular generator of the lattice"},
      {"dual", "Dual lattice"},
      {"adjoint", "Adjoint time-frequency lattice"},
      {"check", "Orthonormal-basis decision with structure report"},
      {"multitile", "Multi-tiling level of the window"},
      {"decompose", "Fundamental-domain decomposition of a multi-tile"},
      {"solve-shift", "Admissible shift blocks C for blocks A, B"},
      {"classify-exp", "Exponential completeness of B(Z^d)"},
      {"construct-window", "Window and lattice from A and a symmetric shear"},
      {"octagon", "Bounded refutation for the octagon"},
  };
  CLI::App app{"Exact Gabor orthonormal-basis and tiling toolkit", "gabortile"};
  Options opt;
  app.add_option("--scene", opt.scene_path, "Scene JSON file");
  app.add_option("--svg", opt.svg_path, "Write an SVG drawing to this file");
  app.add_option("--max-param", opt.max_param, "Largest parameter for octagon")->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.compact, "Compact single-line JSON");
  app.require_subcommand(1);
  for (const auto& c : commands) app.add_subcommand(c[0], c[1])->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    Outcome o = dispatch(command, opt);
    Json j;
    j["tool"] = "gabortile";
    j["version"] = kVersion;
    j["command"] = command;
    j["result"] = std::move(o.result);
    emit(out, j, opt.compact);
    if (!opt.svg_path.empty()) {
      if (o.svg.empty()) {
        err << "note: nothing to draw for this command and input\n";
      } else {
        std::ofstream svg(opt.svg_path);
        if (!svg) throw Error(ErrorKind::ParseError, "cannot write " + opt.svg_path);
        svg << o.svg;
      }
    }
    return o.code;
  } catch (const Error& e) {
    Json j;
    j["tool"] = "gabortile";
    j["version"] = kVersion;
    j["command"] = command;
    j["error"] = std::string(error_kind_name(e.kind()));
    j["message"] = e.what();
    emit(out, j, opt.compact);
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace gabortile
