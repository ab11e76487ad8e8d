#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gabortile/cli.hpp"
#include "gabortile/error.hpp"
#include "gabortile/json_io.hpp"

using namespace gabortile;

namespace {

const std::string kFixtures = FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("gabortile_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

TEST(Cli, CheckExampleOrthonormal) {
  auto r = run({"check", "--scene", fixture("two_cell_c1.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["result"]["status"], "ORTHONORMAL");
  EXPECT_EQ(j["result"]["structure"]["N"], 2);
}

TEST(Cli, CheckExampleNotOrthogonalExitsZero) {
  auto r = run({"check", "--scene", fixture("two_cell_c2.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["result"]["status"], "NOT_ORTHOGONAL");
  EXPECT_EQ(j["result"]["witness"]["m"], Json::array({1, 0}));
  EXPECT_EQ(j["result"]["witness"]["n"], Json::array({0, -1}));
  EXPECT_NEAR(j["result"]["witness"]["float_inner_product"].get<double>(), 0.5, 1e-12);
  EXPECT_EQ(r.out.find('\n'), r.out.size() - 1) << "compact output is one line";
}

TEST(Cli, SolveShiftEmpty) {
  auto r = run({"solve-shift", "--scene", fixture("square_two.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["result"]["status"], "EMPTY");
  EXPECT_TRUE(j["result"]["C"].is_null());
  EXPECT_FALSE(j["result"]["system"].empty());
}

TEST(Cli, ConstructWindow) {
  auto r = run({"construct-window", "--scene", fixture("construct_diag.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["result"]["construction"]["E"], Json::parse(R"([["1","0"],["0","6"]])"));
  EXPECT_EQ(j["result"]["construction"]["window"]["boxes"], Json::parse(R"([[["0","1/2"],["0","1/3"]]])"));
  EXPECT_EQ(j["result"]["verdict"]["status"], "ORTHONORMAL");
  EXPECT_EQ(j["result"]["verdict"]["structure"]["N"], 1);
}

TEST(Cli, MultitilePolygonAndBoxes) {
  auto svg = (std::filesystem::temp_directory_path() / "gabortile_cli_octagon.svg").string();
  std::filesystem::remove(svg);
  auto r = run({"multitile", "--scene", fixture("octagon_z2.json"), "--svg", svg});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["arrangement"]["level"], 14);
  std::string drawing = read_file(svg);
  EXPECT_NE(drawing.find("<svg"), std::string::npos);
  EXPECT_NE(drawing.find("</svg>"), std::string::npos);
  auto b = run({"multitile", "--scene", fixture("two_cells_z2.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.json()["result"]["level"], 2);
  EXPECT_EQ(b.json()["result"]["packing"], false);
}

TEST(Cli, Decompose) {
  auto r = run({"decompose", "--scene", fixture("two_cells_z2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["result"]["level"], 2);
  EXPECT_EQ(j["result"]["domains"].size(), 2u);
  EXPECT_EQ(j["result"]["packing_shift"], Json::parse(R"(["1","0"])"));
}

TEST(Cli, LatticeCommands) {
  auto c = run({"canonicalize", "--scene", fixture("two_cell_c1.json")});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.json()["result"]["generator"].size(), 4u);
  auto d = run({"dual", "--scene", fixture("two_cell_c1.json")});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(d.json()["result"]["density"], "1");
  auto a = run({"adjoint", "--scene", fixture("two_cell_c1.json")});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.json()["result"]["generator"][0], Json::parse(R"(["0","0","2","0"])"));
}

TEST(Cli, ClassifyExp) {
  auto r = run({"classify-exp", "--scene", fixture("classify_diag.json")});
  ASSERT_EQ(r.code, 0);
  auto j = r.json();
  EXPECT_EQ(j["result"]["status"], "INCOMPLETE");
  EXPECT_EQ(j["result"]["form"]["kind"], "FORM1");
  EXPECT_EQ(j["result"]["xi"], Json::parse(R"(["0","1"])"));
  auto complete = run({"classify-exp", "--scene", temp_file("complete.json", R"({"B": [["1/2","0"],["1","2"]]})")});
  ASSERT_EQ(complete.code, 0);
  EXPECT_EQ(complete.json()["result"]["status"], "COMPLETE");
  auto one = run({"classify-exp", "--scene", temp_file("one.json", R"({"B": [["3"]]})")});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.json()["result"]["status"], "INCOMPLETE");
}

TEST(Cli, InconclusiveExitCode) {
  // B = I on a domain other than the cube: no witness within the search bounds.
  auto path = temp_file("inconclusive.json",
                        R"({"window": {"dim": 2, "boxes": [[["0","1"],["0","1"]], [["1","2"],["0","1/2"]]]},
                            "B": [["1","0"],["0","1"]]})");
  auto r = run({"classify-exp", "--scene", path});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.json()["result"]["status"], "INCONCLUSIVE");
}

TEST(Cli, Octagon) {
  auto r = run({"octagon", "--max-param", "5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["result"]["area"], "14");
  EXPECT_EQ(j["result"]["all_refuted"], true);
  EXPECT_EQ(j["result"]["cases"].size(), 8u);
  for (const auto& c : j["result"]["cases"]) {
    EXPECT_EQ(c["required_level"], 14);
    EXPECT_EQ(c["witness"].size(), 2u);
  }
  EXPECT_EQ(j["result"]["unrefuted_candidates"], 2);
}

TEST(Cli, InputErrors) {
  auto missing = run({"check", "--scene", fixture("does_not_exist.json")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.json()["error"], "ParseError");

  auto syntax = run({"check", "--scene", temp_file("syntax.json", "{\n  \"window\": [1, 2,\n}")});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.json()["message"].get<std::string>().find("line 3, column 1"), std::string::npos)
      << syntax.json()["message"];

  auto bad_rat = run({"dual", "--scene", temp_file("badrat.json", R"({"lattice": [["1","x"],["0","1"]]})")});
  EXPECT_EQ(bad_rat.code, 2);
  EXPECT_NE(bad_rat.json()["message"].get<std::string>().find("/lattice/0/1"), std::string::npos);

  auto floats = run({"dual", "--scene", temp_file("float.json", R"({"lattice": [[0.5, 0],[0, 2]]})")});
  EXPECT_EQ(floats.code, 2);

  auto unknown = run({"dual", "--scene", temp_file("unknown.json", R"({"latice": [["1"]]})")});
  EXPECT_EQ(unknown.code, 2);

  auto singular = run({"dual", "--scene", temp_file("singular.json", R"({"lattice": [["1","1"],["1","1"]]})")});
  EXPECT_EQ(singular.code, 2);
  EXPECT_EQ(singular.json()["error"], "SingularMatrix");

  auto odd = run({"adjoint", "--scene", temp_file("odd.json", R"({"lattice": [["1"]]})")});
  EXPECT_EQ(odd.code, 2);
  EXPECT_EQ(odd.json()["error"], "OddDimension");

  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"octagon", "--max-param", "zero"}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
}

TEST(Cli, Determinism) {
  for (const char* name : {"two_cell_c1.json", "square_two.json", "construct_diag.json", "octagon_z2.json"}) {
    for (const char* cmd : {"check", "solve-shift", "construct-window", "multitile"}) {
      auto a = run({cmd, "--scene", fixture(name)});
      auto b = run({cmd, "--scene", fixture(name)});
      EXPECT_EQ(a.code, b.code);
      EXPECT_EQ(a.out, b.out) << cmd << " " << name;
    }
  }
  EXPECT_EQ(run({"octagon", "--max-param", "4"}).out, run({"octagon", "--max-param", "4"}).out);
}

TEST(Cli, SceneRoundTrip) {
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".json") continue;
    const std::string text = read_file(entry.path().string());
    Scene first = parse_scene(text);
    const std::string again = scene_to_json(first).dump(2);
    Scene second = parse_scene(again);
    EXPECT_TRUE(same_scene(first, second)) << entry.path();
    EXPECT_EQ(scene_to_json(second).dump(2), again) << entry.path();
  }
}

}  // namespace
