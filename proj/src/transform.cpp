#include "paravec/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace pv {

namespace {

constexpr double kFrameTol = 1e-9;

// H(t) of the one-parameter groups e^{t u v*}: (e^{ts} - 1)/s with s = v.u,
// continued by its limit t at the removable singularity.
double h_of_t(double t, double s) {
  if (std::abs(s) < 1e-12) return t;
  return std::expm1(t * s) / s;
}

Transform finalize(OpElement u, TransformKind kind) {
  OpElement check = op_mul(conjugation(u), u);
  double eps = check[0];
  check[0] = 0.0;
  if (op_max_abs(check) > 1e-9 || std::abs(std::abs(eps) - 1.0) > 1e-9)
    throw std::runtime_error("transform: conj(U)*U is not a unit scalar");
  return Transform{u, eps < 0 ? -1.0 : 1.0, kind};
}

void require_unit(const Vector3& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > kFrameTol)
    throw std::invalid_argument(std::string(what) + ": vector must be unit length");
}

void require_orthonormal(const Vector3& u, const Vector3& v, const char* what) {
  require_unit(u, what);
  require_unit(v, what);
  if (std::abs(u.dot(v)) > kFrameTol)
    throw std::invalid_argument(std::string(what) + ": vectors must be orthogonal");
}

KParavector sandwich(const Transform& t, const KParavector& x) {
  // odd bands take reversion(U) on the right, even bands conjugation(U)
  OpElement right = (x.k & 1) ? reversion(t.U) : conjugation(t.U);
  OpElement res = op_mul(op_mul(t.U, iota(x.data)), right) * t.epsilon;
  if (!is_creation_only(res, 1e-9))
    throw std::runtime_error("apply: sandwich result is not creation-only");
  Multivector out = op_apply(res, Multivector::scalar(1.0));
  // band check: off-band coefficients must be negligible, then are dropped
  Multivector banded;
  if (x.k >= 1) banded += grade_project(out, x.k - 1);
  if (x.k <= 3) banded += grade_project(out, x.k);
  double scale = norm(out);
  if (norm(out - banded) > 1e-9 * (1.0 + scale))
    throw std::runtime_error("apply: sandwich result left the paravector band");
  return KParavector(banded, x.k);
}

}  // namespace

Transform reflection(const Vector3& n) {
  require_unit(n, "reflection");
  OpElement cre = creation(n), ann = annihilation(n);
  OpElement u = op_mul(ann, cre) - op_mul(cre, ann);
  return finalize(u, TransformKind::Reflection);
}

Transform scale_along(const Vector3& v, double t) {
  double s = v.dot(v);
  if (s == 0.0) throw std::invalid_argument("scale_along: zero direction");
  // e^{t [v, v*] / 2} = e^{-t s / 2} (1 + H(t) v v*)
  OpElement u = OpElement::identity() + h_of_t(t, s) * op_mul(creation(v), annihilation(v));
  return finalize(std::exp(-t * s / 2.0) * u, TransformKind::Scale);
}

Transform shear(const Vector3& u, const Vector3& v, double t) {
  if (u.norm() == 0.0 || v.norm() == 0.0)
    throw std::invalid_argument("shear: zero vector");
  if (std::abs(u.dot(v)) > kFrameTol * (1.0 + u.norm() * v.norm()))
    throw std::invalid_argument("shear: vectors must be orthogonal");
  // with v.u = 0 the exponential truncates: e^{t [u, v*] / 2} = 1 + t u v*
  OpElement w = OpElement::identity() + t * op_mul(creation(u), annihilation(v));
  return finalize(w, TransformKind::Shear);
}

Transform rotation(const Vector3& u, const Vector3& v, double theta) {
  require_orthonormal(u, v, "rotation");
  OpElement cu = creation(u) + annihilation(u), cv = creation(v) + annihilation(v);
  OpElement du = creation(u) - annihilation(u), dv = creation(v) - annihilation(v);
  OpElement i1 = 0.5 * commutator(cu, cv);  // squares to -1 on an orthonormal frame
  OpElement i2 = 0.5 * commutator(du, dv);
  double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  OpElement w = op_mul(c * OpElement::identity() + s * i1,
                       c * OpElement::identity() - s * i2);
  return finalize(w, TransformKind::Rotation);
}

Transform hyperbolic_rotation(const Vector3& u, const Vector3& v, double theta) {
  require_orthonormal(u, v, "hyperbolic_rotation");
  OpElement s1 = 0.5 * commutator(creation(u) - annihilation(u),
                                  creation(v) + annihilation(v));
  OpElement s2 = 0.5 * commutator(creation(u) + annihilation(u),
                                  creation(v) - annihilation(v));
  double ch = std::cosh(theta / 2.0), sh = std::sinh(theta / 2.0);
  OpElement w = op_mul(ch * OpElement::identity() + sh * s1,
                       ch * OpElement::identity() - sh * s2);
  return finalize(w, TransformKind::HRotation);
}

Transform translation(const Vector3& v) {
  OpElement u = OpElement::identity() + 0.5 * creation(v);
  return finalize(u, TransformKind::Translation);
}

Transform compose(const Transform& a, const Transform& b) {
  return Transform{op_mul(a.U, b.U), a.epsilon * b.epsilon, TransformKind::Composed};
}

std::pair<Vector3, Vector3> orthonormal_frame(const Vector3& u, const Vector3& v) {
  double un = u.norm();
  if (un == 0.0) throw std::invalid_argument("orthonormal_frame: zero vector");
  Vector3 e1 = u / un;
  Vector3 w = v - e1 * v.dot(e1);
  double wn = w.norm();
  if (wn <= kFrameTol * (1.0 + v.norm()))
    throw std::invalid_argument("orthonormal_frame: vectors are collinear");
  return {e1, w / wn};
}

KParavector apply(const Transform& t, const KParavector& x) { return sandwich(t, x); }

Point apply(const Transform& t, const Point& p) {
  return Point(sandwich(t, KParavector(p.mv, 1)).data);
}

LineSegment apply(const Transform& t, const LineSegment& l) {
  return LineSegment{sandwich(t, l.pv)};
}

PlaneFragment apply(const Transform& t, const PlaneFragment& pl) {
  return PlaneFragment{sandwich(t, pl.pv)};
}

VolumeElement apply(const Transform& t, const VolumeElement& v) {
  return VolumeElement{sandwich(t, v.pv)};
}

KParavector cotranslate(const Vector3& v, const KParavector& x) {
  // star - translate - star; the dual lives in band 4-k
  OpElement dual = op_star(iota(x.data));
  KParavector y(op_apply(dual, Multivector::scalar(1.0)), 4 - x.k);
  KParavector moved = sandwich(translation(v), y);
  OpElement back = op_star(iota(moved.data));
  Multivector out = op_apply(back, Multivector::scalar(1.0));
  Multivector banded;
  if (x.k >= 1) banded += grade_project(out, x.k - 1);
  if (x.k <= 3) banded += grade_project(out, x.k);
  return KParavector(banded, x.k);
}

Point cotranslate(const Vector3& v, const Point& p) {
  return Point(cotranslate(v, KParavector(p.mv, 1)).data);
}

LineSegment cotranslate(const Vector3& v, const LineSegment& l) {
  return LineSegment{cotranslate(v, l.pv)};
}

PlaneFragment cotranslate(const Vector3& v, const PlaneFragment& pl) {
  return PlaneFragment{cotranslate(v, pl.pv)};
}

PerspectiveCamera::PerspectiveCamera(const Vector3& eye_, const Vector3& normal_, double c_)
    : eye(eye_), normal(normal_), c(c_) {
  require_unit(normal, "perspective camera");
  a = c - normal.dot(eye);
  if (std::abs(a) <= 1e-12 * (1.0 + std::abs(c) + std::abs(normal.dot(eye))))
    throw std::domain_error("perspective camera: eye lies on the perspective plane");
}

ProjectedPoint perspective_project(const PerspectiveCamera& cam, const Point& p) {
  Vector3 pl = p.location();
  double denom = cam.normal.dot(pl - cam.eye);
  if (std::abs(denom) <= 1e-9 * (1.0 + pl.norm() + cam.eye.norm()))
    throw std::domain_error("perspective_project: point projects to infinity");

  // P0 = (translate by e) o (cotranslate by n/a) o (translate by -e) on P - E
  KParavector x(Multivector::vector(pl - cam.eye), 1);
  x = sandwich(translation(-cam.eye), x);
  x = cotranslate(cam.normal / cam.a, x);
  x = sandwich(translation(cam.eye), x);
  // the route produces scalar part denom/a; the conventional weight of the
  // projection is its reciprocal a/denom. Rescaling by the positive factor
  // (a/denom)^2 fixes the weight while preserving location and orientation.
  double f = cam.a / denom;
  Point out(x.data * (f * f));
  return ProjectedPoint{out, out.mv.scalar_part() > 0.0};
}

Point pseudo_perspective(const Vector3& n, const Point& p) {
  require_unit(n, "pseudo_perspective");
  return cotranslate(n, p);
}

std::string to_string(TransformKind k) {
  switch (k) {
    case TransformKind::Reflection: return "reflection";
    case TransformKind::Scale: return "scale";
    case TransformKind::Shear: return "shear";
    case TransformKind::Rotation: return "rotation";
    case TransformKind::HRotation: return "hrotation";
    case TransformKind::Translation: return "translation";
    case TransformKind::Composed: return "composed";
  }
  return "unknown";
}

}  // namespace pv
