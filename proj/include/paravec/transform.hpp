#pragma once

#include <string>

#include "paravec/kparavector.hpp"
#include "paravec/op_element.hpp"

namespace pv {

enum class TransformKind {
  Reflection,
  Scale,
  Shear,
  Rotation,
  HRotation,
  Translation,
  Composed,
};

// A sandwich operator U together with its validated scalar epsilon = conj(U)*U.
// Odd-band objects (points, plane fragments) transform as eps*U*X*reversion(U),
// even-band objects (line segments, volumes) as eps*U*X*conjugation(U).
struct Transform {
  OpElement U;
  double epsilon = 1.0;
  TransformKind kind = TransformKind::Composed;
};

Transform reflection(const Vector3& n);                             // |n| = 1 required
Transform scale_along(const Vector3& v, double t);                  // v != 0
Transform shear(const Vector3& u, const Vector3& v, double t);      // u.v = 0
Transform rotation(const Vector3& u, const Vector3& v, double theta);            // orthonormal u,v
Transform hyperbolic_rotation(const Vector3& u, const Vector3& v, double theta); // orthonormal u,v
Transform translation(const Vector3& v);

Transform compose(const Transform& a, const Transform& b);

// Gram-Schmidt an independent pair into the orthonormal frame the rotation
// constructors require.
std::pair<Vector3, Vector3> orthonormal_frame(const Vector3& u, const Vector3& v);

// Sandwich application; validates that the result is creation-only and lands
// in the input band (throws std::runtime_error otherwise).
KParavector apply(const Transform& t, const KParavector& x);
Point apply(const Transform& t, const Point& p);
LineSegment apply(const Transform& t, const LineSegment& l);
PlaneFragment apply(const Transform& t, const PlaneFragment& pl);
VolumeElement apply(const Transform& t, const VolumeElement& v);

// Star-translate-star conjugation: adds (upper part).v to a k-paravector,
// converting position into weight. Not a Transform (it is not a sandwich).
KParavector cotranslate(const Vector3& v, const KParavector& x);
Point cotranslate(const Vector3& v, const Point& p);
LineSegment cotranslate(const Vector3& v, const LineSegment& l);
PlaneFragment cotranslate(const Vector3& v, const PlaneFragment& pl);

struct PerspectiveCamera {
  Vector3 eye;
  Vector3 normal;  // unit normal of the perspective plane  normal.x = c
  double c = 0.0;
  double a = 0.0;  // c - normal.eye; nonzero (eye not on the plane)

  PerspectiveCamera(const Vector3& eye, const Vector3& normal, double c);
};

struct ProjectedPoint {
  Point point;    // raw weighted point, never conjugated
  bool in_front;  // weight > 0: P was in front of the eye
};

// Perspective projection of P from the camera eye onto the camera plane,
// computed as translate -> cotranslate by n/a -> translate back applied to
// P - E. Throws std::domain_error when P is at infinity for this camera
// (n.(p-e) ~ 0).
ProjectedPoint perspective_project(const PerspectiveCamera& cam, const Point& p);

// Cotranslation by a unit n; maps the eye 1-n to the point at infinity -n
// and a viewing frustum to a box. Throws on non-unit n.
Point pseudo_perspective(const Vector3& n, const Point& p);

std::string to_string(TransformKind k);

}  // namespace pv
