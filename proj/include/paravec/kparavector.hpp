#pragma once

#include <stdexcept>
#include <tuple>

#include "paravec/multivector.hpp"

namespace pv {

// Relative tolerance used by the incidence predicates and degeneracy checks:
// a residual counts as zero when ||r|| <= kIncidenceTol * (1 + scale).
inline constexpr double kIncidenceTol = 1e-9;

inline bool near_zero(double value, double scale) {
  return std::abs(value) <= kIncidenceTol * (1.0 + scale);
}

// A k-paravector: a multivector supported on grades {k-1, k}.
struct KParavector {
  Multivector data;
  int k = 0;

  KParavector() = default;
  KParavector(const Multivector& m, int band);  // validates the grade support

  Multivector lower() const { return k >= 1 ? grade_project(data, k - 1) : Multivector(); }
  Multivector upper() const { return k <= 3 ? grade_project(data, k) : Multivector(); }
};

// <A ^ B>_{k+l}; throws std::domain_error when k+l > 4.
KParavector pv_product(const KParavector& a, const KParavector& b);

// Orientation flip: on a point 1+p gives -1+p, and distributes over the
// paravector product in reversed factor order.
KParavector dagger(const KParavector& a);

// ---- geometric wrappers -------------------------------------------------

struct Point {
  Multivector mv;  // grades {0,1}

  Point() = default;
  explicit Point(const Multivector& m);
  static Point at(const Vector3& location, double weight = 1.0);

  double weight() const { return std::abs(mv.scalar_part()); }
  int orientation() const { return mv.scalar_part() < 0 ? -1 : 1; }
  Vector3 location() const;  // throws when weight is 0
  // Same location and orientation, weight 1.
  Point normalized() const;

  KParavector pv() const { return KParavector(mv, 1); }
};

struct LineSegment {
  KParavector pv;  // k = 2

  Vector3 direction() const { return pv.data.vector_part(); }
  Multivector moment() const { return grade_project(pv.data, 2); }
  Vector3 support() const;
};

struct PlaneFragment {
  KParavector pv;  // k = 3

  Multivector direction_bivector() const { return grade_project(pv.data, 2); }
  double moment_trivector() const { return pv.data.trivector_part(); }
  Vector3 support() const;
};

struct VolumeElement {
  KParavector pv;  // k = 4 (trivector only)
  double signed_volume() const { return pv.data.trivector_part(); }
};

Point make_point(const Vector3& p, double weight = 1.0);
// (weight, orientation, location); throws on zero weight.
std::tuple<double, int, Vector3> point_parts(const Point& p);

LineSegment line_through(const Point& p, const Point& q);  // throws on coincident points
std::tuple<Vector3, Multivector, Vector3> line_parts(const LineSegment& l);
LineSegment dagger(const LineSegment& l);

PlaneFragment plane_through(const Point& p, const Point& q, const Point& r);  // throws on collinear
std::tuple<Multivector, double, Vector3> plane_parts(const PlaneFragment& pl);
// (n, c) with the plane equation n.x = c.
std::pair<Vector3, double> plane_dual(const PlaneFragment& pl);

bool on_line(const LineSegment& l, const Point& x);
bool on_plane(const PlaneFragment& pl, const Point& x);

enum class LineRelation { Skew, Parallel, Coincident, Intersecting };

struct LineClassification {
  LineRelation relation;
  double volume = 0.0;        // signed quadriparavector coefficient
  bool perpendicular = false; // meaningful for Intersecting
};

LineClassification classify_lines(const LineSegment& l, const LineSegment& m);

double tetra_volume(const Point& p, const Point& q, const Point& r, const Point& s);

// Pluecker coordinates (l, m) with m the Hodge dual of the moment bivector.
std::pair<Vector3, Vector3> plucker(const LineSegment& l);

}  // namespace pv
