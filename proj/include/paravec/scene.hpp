#pragma once

#include <map>
#include <string>
#include <vector>

#include "paravec/batch.hpp"

namespace pv {

struct ScenePoint {
  Vector3 pos;
  double weight = 1.0;
  std::vector<std::string> flags;  // e.g. "behind", "at_infinity" after projection

  Multivector to_multivector() const;
  static ScenePoint from_multivector(const Multivector& m);
};

struct Scene {
  std::map<std::string, ScenePoint> points;  // ordered: output is diffable
  std::vector<std::array<std::string, 2>> segments;
  std::vector<std::array<std::string, 3>> triangles;

  const ScenePoint& point(const std::string& id) const;  // throws on unknown id
};

struct ScriptStep {
  std::string op;  // reflect | scale | shear | rotate | hrotate | translate | cotranslate
  Vector3 n, u, v;
  double t = 0.0;
  double theta = 0.0;
};

struct TransformScript {
  std::vector<ScriptStep> steps;
};

Scene load_scene(const std::string& path);
void save_scene(const Scene& s, const std::string& path);
std::string scene_to_json(const Scene& s);

TransformScript load_script(const std::string& path);

Scene run_script(const Scene& s, const TransformScript& script);

enum class ProjectionMode { Perspective, Pseudo };

// Replaces every point by its projection; unprojectable points keep their
// input value and gain an "at_infinity" flag, negative weights gain "behind".
// Diagnostics for flagged points are appended to `warnings` when non-null.
Scene project_scene(const Scene& s, const Vector3& eye, const Vector3& normal, double c,
                    ProjectionMode mode, std::vector<std::string>* warnings = nullptr);

std::string classify_report(const Scene& s, const std::array<std::string, 2>& a,
                            const std::array<std::string, 2>& b);

std::string info_report(const Scene& s);

}  // namespace pv
