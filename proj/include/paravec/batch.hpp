#pragma once

#include <array>
#include <vector>

#include "paravec/transform.hpp"

namespace pv {

// 8x8 matrix acting on multivector coefficient vectors.
using BladeMatrix = std::array<std::array<double, 8>, 8>;

// Matrix of the point sandwich p -> eps * U * p * reversion(U); column j is
// the image of basis blade j. The sandwich is linear, so batches of points
// reduce to one dense 8x8 apply per point.
BladeMatrix point_sandwich_matrix(const Transform& t);

// Matrix of the point cotranslation p -> p + <p>_1 . v.
BladeMatrix point_cotranslate_matrix(const Vector3& v);

Multivector mat_apply(const BladeMatrix& m, const Multivector& p);

// Reference path: full operator sandwich per point, no shared precomputation.
void transform_points_serial(const Transform& t, std::vector<Multivector>& pts);

// Production path: precomputed sandwich matrix + OpenMP parallel loop.
void transform_points_parallel(const Transform& t, std::vector<Multivector>& pts);

void cotranslate_points_serial(const Vector3& v, std::vector<Multivector>& pts);
void cotranslate_points_parallel(const Vector3& v, std::vector<Multivector>& pts);

}  // namespace pv
