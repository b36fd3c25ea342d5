#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>

#include "paravec/scene.hpp"
#include "test_util.hpp"

using namespace pv;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() /
          ("pv_scene_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(dir, ec); }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = dir / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("scene loading") {
  TempDir tmp;
  std::string p = tmp.file("min.json",
                           R"({"points":{"P":{"pos":[0,0,0],"weight":1}}})");
  Scene s = load_scene(p);
  REQUIRE(s.points.size() == 1);
  CHECK(s.points.at("P").weight == 1.0);
  CHECK(tu::vec_near(s.points.at("P").pos, {0, 0, 0}, 0.0));
  CHECK(s.segments.empty());

  // weight defaults to 1
  std::string q = tmp.file("noweight.json", R"({"points":{"A":{"pos":[1,2,3]}}})");
  CHECK(load_scene(q).points.at("A").weight == 1.0);

  std::string bad = tmp.file("bad.json",
                             R"({"points":{"P":{"pos":[0,0,0]}},"segments":[["P","Q"]]})");
  CHECK_THROWS_WITH_AS(load_scene(bad),
                       doctest::Contains("unknown point id \"Q\""), std::runtime_error);

  std::string nan = tmp.file("nan.json", R"({"points":{"P":{"pos":[0,0,0],"weight":1e999}}})");
  CHECK_THROWS_AS(load_scene(nan), std::runtime_error);

  std::string junk = tmp.file("junk.json", "{nope");
  CHECK_THROWS_AS(load_scene(junk), std::runtime_error);
  CHECK_THROWS_AS(load_scene(tmp.path("missing.json")), std::runtime_error);
}

TEST_CASE("round trip is byte identical") {
  TempDir tmp;
  Scene s;
  s.points["A"] = ScenePoint{{0.1, -2.5, 1.0 / 3.0}, 1.0, {}};
  s.points["B"] = ScenePoint{{1e-17, 3.25, -7.0}, 0.5, {"behind"}};
  s.points["C"] = ScenePoint{{2, 2, 4}, -1.25, {}};
  s.segments.push_back({"A", "B"});
  s.triangles.push_back({"A", "B", "C"});

  std::string p1 = tmp.path("s1.json");
  save_scene(s, p1);
  Scene back = load_scene(p1);
  std::string p2 = tmp.path("s2.json");
  save_scene(back, p2);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(scene_to_json(s) == scene_to_json(back));
}

TEST_CASE("script loading") {
  TempDir tmp;
  std::string p = tmp.file("script.json", R"({"steps":[
    {"op":"translate","v":[1,0,0]},
    {"op":"rotate","u":[1,0,0],"v":[0,1,0],"theta":1.5707963267948966},
    {"op":"cotranslate","v":[0,0,1]}
  ]})");
  TransformScript sc = load_script(p);
  REQUIRE(sc.steps.size() == 3);
  CHECK(sc.steps[0].op == "translate");
  CHECK(sc.steps[1].theta == doctest::Approx(1.5707963267948966));

  std::string bad = tmp.file("badop.json", R"({"steps":[{"op":"frobnicate"}]})");
  CHECK_THROWS_WITH_AS(load_script(bad), doctest::Contains("unknown op"),
                       std::runtime_error);
}

TEST_CASE("running scripts") {
  Scene s;
  s.points["O"] = ScenePoint{{0, 0, 0}, 1.0, {}};

  TransformScript move;
  move.steps.push_back(ScriptStep{"translate", {}, {}, {1, 0, 0}, 0, 0});
  Scene moved = run_script(s, move);
  CHECK(tu::vec_near(moved.points.at("O").pos, {1, 0, 0}, 1e-12));
  CHECK(moved.points.at("O").weight == doctest::Approx(1.0));

  // a rotation and its inverse cancel
  Scene many;
  for (int i = 0; i < 10; ++i)
    many.points["p" + std::to_string(i)] = ScenePoint{tu::rand_vec(), 1.0, {}};
  TransformScript spin;
  spin.steps.push_back(ScriptStep{"rotate", {}, {1, 0, 0}, {0, 1, 0}, 0, M_PI / 2});
  spin.steps.push_back(ScriptStep{"rotate", {}, {1, 0, 0}, {0, 1, 0}, 0, -M_PI / 2});
  Scene spun = run_script(many, spin);
  for (auto& [id, p] : many.points)
    CHECK(tu::vec_near(spun.points.at(id).pos, p.pos, 1e-9));

  // cotranslation converts position into weight: (0,0,2) + v=(0,0,1) -> 3 + 2 e3
  Scene cs;
  cs.points["P"] = ScenePoint{{0, 0, 2}, 1.0, {}};
  TransformScript cot;
  cot.steps.push_back(ScriptStep{"cotranslate", {}, {}, {0, 0, 1}, 0, 0});
  Scene cout_ = run_script(cs, cot);
  CHECK(cout_.points.at("P").weight == doctest::Approx(3.0));
  CHECK(tu::vec_near(cout_.points.at("P").pos, {0, 0, 2.0 / 3.0}, 1e-12));

  // constructor failures carry the step index and op name
  TransformScript bad;
  bad.steps.push_back(ScriptStep{"translate", {}, {}, {1, 0, 0}, 0, 0});
  bad.steps.push_back(ScriptStep{"reflect", {0, 0, 2}, {}, {}, 0, 0});
  CHECK_THROWS_WITH_AS(run_script(s, bad), doctest::Contains("step 1 (reflect)"),
                       std::runtime_error);
}

TEST_CASE("perspective scene projection") {
  Scene s;
  s.points["front"] = ScenePoint{{2, 2, 4}, 1.0, {}};
  s.points["onplane"] = ScenePoint{{0.5, 0, 1}, 1.0, {}};
  s.points["behind"] = ScenePoint{{0, 0, -1}, 1.0, {}};
  s.points["inf"] = ScenePoint{{1, 1, 0}, 1.0, {}};

  std::vector<std::string> warnings;
  Scene out = project_scene(s, {0, 0, 0}, {0, 0, 1}, 1.0, ProjectionMode::Perspective,
                            &warnings);

  CHECK(out.points.at("front").weight == doctest::Approx(0.25));
  CHECK(tu::vec_near(out.points.at("front").pos, {0.5, 0.5, 1.0}, 1e-12));
  CHECK(out.points.at("front").flags.empty());

  CHECK(out.points.at("onplane").weight == doctest::Approx(1.0));
  CHECK(tu::vec_near(out.points.at("onplane").pos, {0.5, 0, 1}, 1e-12));

  CHECK(out.points.at("behind").weight == doctest::Approx(-1.0));
  REQUIRE(out.points.at("behind").flags.size() == 1);
  CHECK(out.points.at("behind").flags[0] == "behind");

  // unprojectable point keeps its input value but is flagged
  REQUIRE(out.points.at("inf").flags.size() == 1);
  CHECK(out.points.at("inf").flags[0] == "at_infinity");
  CHECK(tu::vec_near(out.points.at("inf").pos, {1, 1, 0}, 0.0));
  CHECK(warnings.size() == 2);

  CHECK_THROWS_AS(project_scene(s, {0, 0, 1}, {0, 0, 1}, 1.0, ProjectionMode::Perspective,
                                nullptr),
                  std::domain_error);
}

TEST_CASE("pseudo-perspective scene projection") {
  Scene s;
  s.points["eye"] = ScenePoint{{0, 0, -1}, 1.0, {}};  // the point 1 - e3
  s.points["f1"] = ScenePoint{{1, 0, 0}, 1.0, {}};    // frustum corner, s = 1

  std::vector<std::string> warnings;
  Scene out = project_scene(s, {}, {0, 0, 1}, 0.0, ProjectionMode::Pseudo, &warnings);

  CHECK(out.points.at("eye").weight == 0.0);
  CHECK(tu::vec_near(out.points.at("eye").pos, {0, 0, -1}, 1e-12));
  REQUIRE(out.points.at("eye").flags.size() == 1);
  CHECK(out.points.at("eye").flags[0] == "at_infinity");
  CHECK(warnings.size() == 1);

  CHECK(out.points.at("f1").weight == doctest::Approx(1.0));
  CHECK(tu::vec_near(out.points.at("f1").pos, {1, 0, 0}, 1e-12));
}

TEST_CASE("classification report") {
  Scene s;
  s.points["o"] = ScenePoint{{0, 0, 0}, 1.0, {}};
  s.points["x"] = ScenePoint{{1, 0, 0}, 1.0, {}};
  s.points["y"] = ScenePoint{{0, 1, 0}, 1.0, {}};
  s.points["xs"] = ScenePoint{{0, 0, 1}, 1.0, {}};   // shifted x-axis start
  s.points["xe"] = ScenePoint{{1, 0, 1}, 1.0, {}};
  s.points["ys"] = ScenePoint{{0, 0, 1}, 1.0, {}};   // shifted y-axis start
  s.points["ye"] = ScenePoint{{0, 1, 1}, 1.0, {}};

  std::string perp = classify_report(s, {"o", "x"}, {"o", "y"});
  CHECK(perp.substr(0, perp.find('\n')) == "intersecting, perpendicular");

  std::string par = classify_report(s, {"o", "x"}, {"xs", "xe"});
  CHECK(par.substr(0, par.find('\n')) == "parallel");

  std::string skew = classify_report(s, {"o", "x"}, {"ys", "ye"});
  CHECK(skew.substr(0, skew.find('\n')) == "skew");
  CHECK(skew.find("volume=") != std::string::npos);

  CHECK_THROWS_AS(classify_report(s, {"o", "nope"}, {"o", "y"}), std::runtime_error);
}

TEST_CASE("info report") {
  Scene s;
  s.points["o"] = ScenePoint{{0, 0, 0}, 1.0, {}};
  s.points["x"] = ScenePoint{{1, 0, 0}, 1.0, {}};
  s.points["y"] = ScenePoint{{0, 1, 0}, 1.0, {}};
  s.segments.push_back({"o", "x"});
  s.triangles.push_back({"o", "x", "y"});

  std::string rep = info_report(s);
  CHECK(rep.find("point o:") != std::string::npos);
  CHECK(rep.find("plucker l=(1, 0, 0)") != std::string::npos);
  CHECK(rep.find("plane n=") != std::string::npos);

  // a degenerate segment is reported, not fatal
  s.segments.push_back({"o", "o"});
  CHECK(info_report(s).find("degenerate") != std::string::npos);
}

TEST_CASE("scene point multivector round trip") {
  for (int i = 0; i < 50; ++i) {
    ScenePoint p{tu::rand_vec(), tu::rand_real(-3.0, 3.0), {}};
    if (p.weight == 0.0) continue;
    ScenePoint q = ScenePoint::from_multivector(p.to_multivector());
    CHECK(q.weight == doctest::Approx(p.weight).epsilon(1e-14));
    CHECK(tu::vec_near(q.pos, p.pos, 1e-12));
  }
}
