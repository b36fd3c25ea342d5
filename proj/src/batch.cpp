#include "paravec/batch.hpp"

#include <cstddef>

namespace pv {

namespace {

BladeMatrix matrix_of(const OpElement& sandwiched_u, const OpElement& right, double eps) {
  BladeMatrix m{};
  for (int j = 0; j < 8; ++j) {
    OpElement res = op_mul(op_mul(sandwiched_u, OpElement::monomial(j, 0)), right) * eps;
    Multivector col = op_apply(res, Multivector::scalar(1.0));
    for (int i = 0; i < 8; ++i) m[i][j] = col[i];
  }
  return m;
}

}  // namespace

BladeMatrix point_sandwich_matrix(const Transform& t) {
  return matrix_of(t.U, reversion(t.U), t.epsilon);
}

BladeMatrix point_cotranslate_matrix(const Vector3& v) {
  BladeMatrix m{};
  for (int i = 0; i < 8; ++i) m[i][i] = 1.0;
  // grade-1 blades feed the scalar slot with their v component
  m[0][1] += v.x;
  m[0][2] += v.y;
  m[0][4] += v.z;
  return m;
}

Multivector mat_apply(const BladeMatrix& m, const Multivector& p) {
  Multivector r;
  for (int i = 0; i < 8; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 8; ++j) acc += m[i][j] * p[j];
    r[i] = acc;
  }
  return r;
}

void transform_points_serial(const Transform& t, std::vector<Multivector>& pts) {
  for (Multivector& p : pts) p = apply(t, KParavector(p, 1)).data;
}

void transform_points_parallel(const Transform& t, std::vector<Multivector>& pts) {
  const BladeMatrix m = point_sandwich_matrix(t);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(pts.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) pts[i] = mat_apply(m, pts[i]);
}

void cotranslate_points_serial(const Vector3& v, std::vector<Multivector>& pts) {
  for (Multivector& p : pts) p = cotranslate(v, KParavector(p, 1)).data;
}

void cotranslate_points_parallel(const Vector3& v, std::vector<Multivector>& pts) {
  const BladeMatrix m = point_cotranslate_matrix(v);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(pts.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) pts[i] = mat_apply(m, pts[i]);
}

}  // namespace pv
