#include "paravec/kparavector.hpp"

#include <cmath>

namespace pv {

namespace {

bool in_band(int mask, int k) {
  int g = grade_of(mask);
  return g == k || g == k - 1;
}

// Weight-1, positive-orientation copy of a point's multivector (divide by the
// scalar part). The geometric constructors assume unit-weight inputs.
Multivector unit_point(const Point& p) {
  double x0 = p.mv.scalar_part();
  if (x0 == 0.0) throw std::invalid_argument("point has zero weight (pure vector)");
  return p.mv * (1.0 / x0);
}

Vector3 interior_as_vector(const Multivector& a, const Multivector& b) {
  return interior(a, b).vector_part();
}

}  // namespace

KParavector::KParavector(const Multivector& m, int band) : data(m), k(band) {
  if (band < 0 || band > 4) throw std::invalid_argument("paravector band must be in [0,4]");
  for (int s = 0; s < 8; ++s) {
    if (!in_band(s, band) && m[s] != 0.0)
      throw std::invalid_argument("multivector not supported on the paravector band");
  }
}

KParavector pv_product(const KParavector& a, const KParavector& b) {
  int k = a.k + b.k;
  if (k > 4) throw std::domain_error("paravector product overflows grade 4");
  Multivector w = wedge(a.data, b.data);
  Multivector r;
  if (k >= 1) r += grade_project(w, k - 1);
  if (k <= 3) r += grade_project(w, k);
  return KParavector(r, k);
}

KParavector dagger(const KParavector& a) {
  return KParavector(reversion(a.upper()) - reversion(a.lower()), a.k);
}

// ---- Point ----------------------------------------------------------------

Point::Point(const Multivector& m) : mv(m) {
  for (int s = 0; s < 8; ++s)
    if (grade_of(s) > 1 && m[s] != 0.0)
      throw std::invalid_argument("point must be scalar + vector");
}

Point Point::at(const Vector3& location, double weight) {
  return Point(Multivector::scalar(weight) + Multivector::vector(location * weight));
}

Vector3 Point::location() const {
  double x0 = mv.scalar_part();
  if (x0 == 0.0) throw std::domain_error("location undefined for zero-weight point");
  return mv.vector_part() / std::abs(x0);
}

Point Point::normalized() const {
  double x0 = mv.scalar_part();
  if (x0 == 0.0) throw std::domain_error("cannot normalize a zero-weight point");
  return Point(mv * (1.0 / std::abs(x0)));
}

Point make_point(const Vector3& p, double weight) { return Point::at(p, weight); }

std::tuple<double, int, Vector3> point_parts(const Point& p) {
  return {p.weight(), p.orientation(), p.location()};
}

// ---- LineSegment ----------------------------------------------------------

LineSegment line_through(const Point& p, const Point& q) {
  KParavector pp(unit_point(p), 1);
  KParavector qq(unit_point(q), 1);
  KParavector l = pv_product(pp, dagger(qq));
  double scale = norm(pp.data) + norm(qq.data);
  if (norm(l.data) <= kIncidenceTol * (1.0 + scale))
    throw std::invalid_argument("degenerate line: coincident points");
  return LineSegment{l};
}

Vector3 LineSegment::support() const {
  Vector3 l = direction();
  double n2 = l.dot(l);
  if (n2 == 0.0) throw std::domain_error("support undefined: zero direction");
  return interior(grade_project(pv.data, 2), Multivector::vector(l)).vector_part() / n2;
}

std::tuple<Vector3, Multivector, Vector3> line_parts(const LineSegment& l) {
  return {l.direction(), l.moment(), l.support()};
}

LineSegment dagger(const LineSegment& l) { return LineSegment{dagger(l.pv)}; }

// ---- PlaneFragment --------------------------------------------------------

PlaneFragment plane_through(const Point& p, const Point& q, const Point& r) {
  KParavector pp(unit_point(p), 1);
  KParavector qq(unit_point(q), 1);
  KParavector rr(unit_point(r), 1);
  KParavector pl = pv_product(pv_product(pp, dagger(qq)), rr);
  Multivector dir = grade_project(pl.data, 2);
  double scale = norm(pp.data) + norm(qq.data) + norm(rr.data);
  if (norm(dir) <= kIncidenceTol * (1.0 + scale))
    throw std::invalid_argument("degenerate plane: collinear points");
  return PlaneFragment{pl};
}

std::pair<Vector3, double> plane_dual(const PlaneFragment& pl) {
  // P = star(n + c): the bivector part is star(n), the trivector part c*Omega.
  Vector3 n = hodge(grade_project(pl.pv.data, 2)).vector_part();
  double c = pl.pv.data.trivector_part();
  return {n, c};
}

Vector3 PlaneFragment::support() const {
  auto [n, c] = plane_dual(*this);
  double n2 = n.dot(n);
  if (n2 == 0.0) throw std::domain_error("support undefined: degenerate plane");
  return n * (c / n2);
}

std::tuple<Multivector, double, Vector3> plane_parts(const PlaneFragment& pl) {
  return {pl.direction_bivector(), pl.moment_trivector(), pl.support()};
}

// ---- incidence ------------------------------------------------------------

bool on_line(const LineSegment& l, const Point& x) {
  KParavector xx(unit_point(x), 1);
  KParavector res = pv_product(l.pv, xx);
  double scale = norm(l.pv.data) * norm(xx.data);
  return norm(res.data) <= kIncidenceTol * (1.0 + scale);
}

bool on_plane(const PlaneFragment& pl, const Point& x) {
  KParavector xx(unit_point(x), 1);
  KParavector res = pv_product(pl.pv, dagger(xx));
  double scale = norm(pl.pv.data) * norm(xx.data);
  return norm(res.data) <= kIncidenceTol * (1.0 + scale);
}

LineClassification classify_lines(const LineSegment& l, const LineSegment& m) {
  Vector3 dl = l.direction(), dm = m.direction();
  if (dl.norm() == 0.0 || dm.norm() == 0.0)
    throw std::invalid_argument("classify_lines: degenerate input line");

  KParavector joint = pv_product(l.pv, m.pv);  // quadriparavector
  double vol = joint.data.trivector_part();
  double scale = norm(l.pv.data) * norm(m.pv.data);
  if (std::abs(vol) > kIncidenceTol * (1.0 + scale))
    return {LineRelation::Skew, vol, false};

  // coplanar: parallel directions?
  Vector3 x = dl.cross(dm);
  if (x.norm() > kIncidenceTol * (1.0 + dl.norm() * dm.norm())) {
    bool perp = std::abs(dl.dot(dm)) <= kIncidenceTol * (1.0 + dl.norm() * dm.norm());
    return {LineRelation::Intersecting, vol, perp};
  }

  // parallel directions: coincident iff the supports agree
  Vector3 diff = l.support() - m.support();
  if (diff.norm() <= kIncidenceTol * (1.0 + l.support().norm() + m.support().norm()))
    return {LineRelation::Coincident, vol, false};
  return {LineRelation::Parallel, vol, false};
}

double tetra_volume(const Point& p, const Point& q, const Point& r, const Point& s) {
  KParavector pp(unit_point(p), 1);
  KParavector qq(unit_point(q), 1);
  KParavector rr(unit_point(r), 1);
  KParavector ss(unit_point(s), 1);
  KParavector v = pv_product(pv_product(pv_product(pp, dagger(qq)), rr), dagger(ss));
  return v.data.trivector_part();
}

std::pair<Vector3, Vector3> plucker(const LineSegment& l) {
  Vector3 moment_dual = hodge(grade_project(l.pv.data, 2)).vector_part();
  return {l.direction(), moment_dual};
}

}  // namespace pv
