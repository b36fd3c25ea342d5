#include "paravec/scene.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pv {

namespace {

using json = nlohmann::json;

std::string fmt_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw std::runtime_error("scene: expected a number at " + where);
  double v = j.get<double>();
  if (!std::isfinite(v)) throw std::runtime_error("scene: non-finite number at " + where);
  return v;
}

Vector3 parse_vec3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw std::runtime_error("scene: expected [x, y, z] at " + where);
  return {finite_number(j[0], where), finite_number(j[1], where), finite_number(j[2], where)};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

void write_quoted(std::ostream& out, const std::string& s) { out << '"' << s << '"'; }

void write_point(std::ostream& out, const std::string& id, const ScenePoint& p) {
  out << "    ";
  write_quoted(out, id);
  out << ": {\"pos\": [" << fmt_num(p.pos.x) << ", " << fmt_num(p.pos.y) << ", "
      << fmt_num(p.pos.z) << "], \"weight\": " << fmt_num(p.weight);
  if (!p.flags.empty()) {
    out << ", \"flags\": [";
    for (size_t i = 0; i < p.flags.size(); ++i) {
      if (i) out << ", ";
      write_quoted(out, p.flags[i]);
    }
    out << "]";
  }
  out << "}";
}

}  // namespace

Multivector ScenePoint::to_multivector() const {
  return Multivector::scalar(weight) + Multivector::vector(pos * std::abs(weight));
}

ScenePoint ScenePoint::from_multivector(const Multivector& m) {
  ScenePoint p;
  p.weight = m.scalar_part();
  if (p.weight == 0.0) {
    p.pos = m.vector_part();  // point at infinity: keep the raw direction
  } else {
    p.pos = m.vector_part() / std::abs(p.weight);
  }
  return p;
}

const ScenePoint& Scene::point(const std::string& id) const {
  auto it = points.find(id);
  if (it == points.end()) throw std::runtime_error("unknown point id: " + id);
  return it->second;
}

Scene load_scene(const std::string& path) {
  json j = read_json_file(path);
  Scene s;
  try {
  if (!j.is_object()) throw std::runtime_error(path + ": scene must be a JSON object");
  if (j.contains("points")) {
    if (!j["points"].is_object()) throw std::runtime_error(path + ": \"points\" must be an object");
    for (auto& [id, jp] : j["points"].items()) {
      ScenePoint p;
      p.pos = parse_vec3(jp.at("pos"), "points." + id + ".pos");
      if (jp.contains("weight")) p.weight = finite_number(jp["weight"], "points." + id + ".weight");
      if (jp.contains("flags"))
        for (auto& f : jp["flags"]) p.flags.push_back(f.get<std::string>());
      s.points[id] = p;
    }
  }
  auto check_id = [&](const std::string& id, const char* what) {
    if (!s.points.count(id))
      throw std::runtime_error(path + ": " + what + " references unknown point id \"" + id + "\"");
  };
  if (j.contains("segments"))
    for (auto& seg : j["segments"]) {
      if (!seg.is_array() || seg.size() != 2)
        throw std::runtime_error(path + ": segments entries must be [id, id]");
      std::array<std::string, 2> ids{seg[0].get<std::string>(), seg[1].get<std::string>()};
      check_id(ids[0], "segment");
      check_id(ids[1], "segment");
      s.segments.push_back(ids);
    }
  if (j.contains("triangles"))
    for (auto& tri : j["triangles"]) {
      if (!tri.is_array() || tri.size() != 3)
        throw std::runtime_error(path + ": triangles entries must be [id, id, id]");
      std::array<std::string, 3> ids{tri[0].get<std::string>(), tri[1].get<std::string>(),
                                     tri[2].get<std::string>()};
      for (auto& id : ids) check_id(id, "triangle");
      s.triangles.push_back(ids);
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return s;
}

std::string scene_to_json(const Scene& s) {
  std::ostringstream out;
  out << "{\n  \"points\": {";
  bool first = true;
  for (auto& [id, p] : s.points) {
    out << (first ? "\n" : ",\n");
    write_point(out, id, p);
    first = false;
  }
  out << (first ? "},\n" : "\n  },\n");
  out << "  \"segments\": [";
  for (size_t i = 0; i < s.segments.size(); ++i) {
    out << (i ? ",\n    [" : "\n    [");
    write_quoted(out, s.segments[i][0]);
    out << ", ";
    write_quoted(out, s.segments[i][1]);
    out << "]";
  }
  out << (s.segments.empty() ? "],\n" : "\n  ],\n");
  out << "  \"triangles\": [";
  for (size_t i = 0; i < s.triangles.size(); ++i) {
    out << (i ? ",\n    [" : "\n    [");
    write_quoted(out, s.triangles[i][0]);
    out << ", ";
    write_quoted(out, s.triangles[i][1]);
    out << ", ";
    write_quoted(out, s.triangles[i][2]);
    out << "]";
  }
  out << (s.triangles.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

void save_scene(const Scene& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << scene_to_json(s);
}

TransformScript load_script(const std::string& path) {
  json j = read_json_file(path);
  TransformScript script;
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
    throw std::runtime_error(path + ": script must be {\"steps\": [...]}");
  size_t idx = 0;
  try {
  for (auto& js : j["steps"]) {
    std::string where = "steps[" + std::to_string(idx) + "]";
    ScriptStep step;
    step.op = js.at("op").get<std::string>();
    if (step.op == "reflect") {
      step.n = parse_vec3(js.at("n"), where + ".n");
    } else if (step.op == "scale") {
      step.v = parse_vec3(js.at("v"), where + ".v");
      step.t = finite_number(js.at("t"), where + ".t");
    } else if (step.op == "shear") {
      step.u = parse_vec3(js.at("u"), where + ".u");
      step.v = parse_vec3(js.at("v"), where + ".v");
      step.t = finite_number(js.at("t"), where + ".t");
    } else if (step.op == "rotate" || step.op == "hrotate") {
      step.u = parse_vec3(js.at("u"), where + ".u");
      step.v = parse_vec3(js.at("v"), where + ".v");
      step.theta = finite_number(js.at("theta"), where + ".theta");
    } else if (step.op == "translate" || step.op == "cotranslate") {
      step.v = parse_vec3(js.at("v"), where + ".v");
    } else {
      throw std::runtime_error(path + ": " + where + ": unknown op \"" + step.op + "\"");
    }
    script.steps.push_back(step);
    ++idx;
  }
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": steps[" + std::to_string(idx) + "]: " + e.what());
  }
  return script;
}

Scene run_script(const Scene& s, const TransformScript& script) {
  std::vector<std::string> ids;
  std::vector<Multivector> pts;
  ids.reserve(s.points.size());
  for (auto& [id, p] : s.points) {
    ids.push_back(id);
    pts.push_back(p.to_multivector());
  }

  size_t idx = 0;
  for (const ScriptStep& step : script.steps) {
    try {
      if (step.op == "cotranslate") {
        cotranslate_points_parallel(step.v, pts);
      } else {
        Transform t;
        if (step.op == "reflect") t = reflection(step.n);
        else if (step.op == "scale") t = scale_along(step.v, step.t);
        else if (step.op == "shear") t = shear(step.u, step.v, step.t);
        else if (step.op == "rotate") t = rotation(step.u, step.v, step.theta);
        else if (step.op == "hrotate") t = hyperbolic_rotation(step.u, step.v, step.theta);
        else if (step.op == "translate") t = translation(step.v);
        else throw std::runtime_error("unknown op \"" + step.op + "\"");
        transform_points_parallel(t, pts);
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("step " + std::to_string(idx) + " (" + step.op + "): " + e.what());
    }
    for (const Multivector& p : pts)
      if (!p.is_finite())
        throw std::runtime_error("step " + std::to_string(idx) + " produced non-finite point");
    ++idx;
  }

  Scene out = s;
  for (size_t i = 0; i < ids.size(); ++i) {
    std::vector<std::string> flags = out.points[ids[i]].flags;
    out.points[ids[i]] = ScenePoint::from_multivector(pts[i]);
    out.points[ids[i]].flags = flags;
  }
  return out;
}

Scene project_scene(const Scene& s, const Vector3& eye, const Vector3& normal, double c,
                    ProjectionMode mode, std::vector<std::string>* warnings) {
  Scene out = s;
  if (mode == ProjectionMode::Pseudo) {
    for (auto& [id, p] : out.points) {
      Point res = pseudo_perspective(normal, Point(p.to_multivector()));
      ScenePoint np = ScenePoint::from_multivector(res.mv);
      if (np.weight == 0.0) {
        np.flags.push_back("at_infinity");
        if (warnings) warnings->push_back("point " + id + " mapped to infinity");
      }
      p = np;
    }
    return out;
  }

  PerspectiveCamera cam(eye, normal, c);
  for (auto& [id, p] : out.points) {
    try {
      ProjectedPoint res = perspective_project(cam, Point(p.to_multivector()));
      ScenePoint np = ScenePoint::from_multivector(res.point.mv);
      if (!res.in_front) {
        np.flags.push_back("behind");
        if (warnings) warnings->push_back("point " + id + " is behind the eye");
      }
      p = np;
    } catch (const std::domain_error&) {
      p.flags.push_back("at_infinity");
      if (warnings) warnings->push_back("point " + id + " projects to infinity");
    }
  }
  return out;
}

std::string classify_report(const Scene& s, const std::array<std::string, 2>& a,
                            const std::array<std::string, 2>& b) {
  auto segment_line = [&](const std::array<std::string, 2>& ids) {
    return line_through(Point(s.point(ids[0]).to_multivector()),
                        Point(s.point(ids[1]).to_multivector()));
  };
  LineClassification c = classify_lines(segment_line(a), segment_line(b));
  std::string rel;
  switch (c.relation) {
    case LineRelation::Skew: rel = "skew"; break;
    case LineRelation::Parallel: rel = "parallel"; break;
    case LineRelation::Coincident: rel = "coincident"; break;
    case LineRelation::Intersecting:
      rel = c.perpendicular ? "intersecting, perpendicular" : "intersecting";
      break;
  }
  return rel + "\nvolume=" + fmt_num(c.volume) + "\n";
}

std::string info_report(const Scene& s) {
  std::ostringstream out;
  for (auto& [id, p] : s.points) {
    out << "point " << id << ": pos=(" << fmt_num(p.pos.x) << ", " << fmt_num(p.pos.y) << ", "
        << fmt_num(p.pos.z) << ") weight=" << fmt_num(p.weight) << "\n";
  }
  auto vec_str = [](const Vector3& v) {
    return "(" + fmt_num(v.x) + ", " + fmt_num(v.y) + ", " + fmt_num(v.z) + ")";
  };
  for (auto& seg : s.segments) {
    out << "segment [" << seg[0] << ", " << seg[1] << "]: ";
    try {
      LineSegment l = line_through(Point(s.point(seg[0]).to_multivector()),
                                   Point(s.point(seg[1]).to_multivector()));
      auto [dir, moment] = plucker(l);
      out << "plucker l=" << vec_str(dir) << " m=" << vec_str(moment)
          << " support=" << vec_str(l.support()) << "\n";
    } catch (const std::exception& e) {
      out << "degenerate (" << e.what() << ")\n";
    }
  }
  for (auto& tri : s.triangles) {
    out << "triangle [" << tri[0] << ", " << tri[1] << ", " << tri[2] << "]: ";
    try {
      PlaneFragment pl = plane_through(Point(s.point(tri[0]).to_multivector()),
                                       Point(s.point(tri[1]).to_multivector()),
                                       Point(s.point(tri[2]).to_multivector()));
      auto [n, c] = plane_dual(pl);
      out << "plane n=" << vec_str(n) << " c=" << fmt_num(c)
          << " support=" << vec_str(pl.support()) << "\n";
    } catch (const std::exception& e) {
      out << "degenerate (" << e.what() << ")\n";
    }
  }
  return out.str();
}

}  // namespace pv
