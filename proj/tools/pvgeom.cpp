#include <array>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paravec/scene.hpp"

namespace {

pv::Vector3 parse_triple(const std::string& s, const std::string& flag) {
  std::istringstream in(s);
  double x, y, z;
  char c1, c2;
  if (!(in >> x >> c1 >> y >> c2 >> z) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
    throw CLI::ValidationError(flag, "expected x,y,z");
  return {x, y, z};
}

std::array<std::string, 2> parse_pair(const std::string& s, const std::string& flag) {
  size_t comma = s.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == s.size())
    throw CLI::ValidationError(flag, "expected id,id");
  return {s.substr(0, comma), s.substr(comma + 1)};
}

void emit(const pv::Scene& s, const std::string& out_path) {
  if (out_path.empty())
    std::cout << pv::scene_to_json(s);
  else
    pv::save_scene(s, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paravector scene tool"};
  app.require_subcommand(1);

  std::string scene_path, script_path, out_path;
  std::string eye_str = "0,0,0", normal_str, a_str, b_str;
  double plane_c = 0.0;
  bool pseudo = false;

  CLI::App* cmd_transform = app.add_subcommand("transform", "apply a transform script");
  cmd_transform->add_option("--scene", scene_path)->required();
  cmd_transform->add_option("--script", script_path)->required();
  cmd_transform->add_option("--out", out_path);

  CLI::App* cmd_project = app.add_subcommand("project", "project the scene points");
  cmd_project->add_option("--scene", scene_path)->required();
  cmd_project->add_option("--eye", eye_str);
  cmd_project->add_option("--normal", normal_str)->required();
  cmd_project->add_option("--c", plane_c);
  cmd_project->add_flag("--pseudo", pseudo);
  cmd_project->add_option("--out", out_path);

  CLI::App* cmd_classify = app.add_subcommand("classify", "classify a pair of lines");
  cmd_classify->add_option("--scene", scene_path)->required();
  cmd_classify->add_option("--a", a_str)->required();
  cmd_classify->add_option("--b", b_str)->required();

  CLI::App* cmd_info = app.add_subcommand("info", "print line/plane data for the scene");
  cmd_info->add_option("--scene", scene_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    pv::Scene scene = pv::load_scene(scene_path);

    if (cmd_transform->parsed()) {
      pv::TransformScript script = pv::load_script(script_path);
      emit(pv::run_script(scene, script), out_path);
    } else if (cmd_project->parsed()) {
      std::vector<std::string> warnings;
      pv::Scene out = pv::project_scene(
          scene, parse_triple(eye_str, "--eye"), parse_triple(normal_str, "--normal"), plane_c,
          pseudo ? pv::ProjectionMode::Pseudo : pv::ProjectionMode::Perspective, &warnings);
      for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
      emit(out, out_path);
    } else if (cmd_classify->parsed()) {
      std::cout << pv::classify_report(scene, parse_pair(a_str, "--a"), parse_pair(b_str, "--b"));
    } else if (cmd_info->parsed()) {
      std::cout << pv::info_report(scene);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
