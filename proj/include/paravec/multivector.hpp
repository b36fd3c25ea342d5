#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

namespace pv {

struct Vector3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vector3 operator+(const Vector3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vector3 operator-(const Vector3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vector3 operator-() const { return {-x, -y, -z}; }
  Vector3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vector3 operator/(double s) const { return {x / s, y / s, z / s}; }

  double dot(const Vector3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  Vector3 cross(const Vector3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
};

inline Vector3 operator*(double s, const Vector3& v) { return v * s; }

// Element of the exterior algebra of R^3 over doubles. Coefficients are
// indexed by the blade bitmask S in {0..7}: bit i-1 set means e_i is a factor,
// with the coefficient stored for the ascending-index ordering of the blade.
class Multivector {
 public:
  static constexpr int kBlades = 8;

  Multivector() = default;

  double& operator[](int blade) { return c_[blade]; }
  double operator[](int blade) const { return c_[blade]; }

  static Multivector scalar(double s) {
    Multivector m;
    m.c_[0] = s;
    return m;
  }
  static Multivector vector(const Vector3& v) {
    Multivector m;
    m.c_[1] = v.x;
    m.c_[2] = v.y;
    m.c_[4] = v.z;
    return m;
  }
  static Multivector blade(int mask, double coeff) {
    Multivector m;
    m.c_[mask] = coeff;
    return m;
  }

  double scalar_part() const { return c_[0]; }
  Vector3 vector_part() const { return {c_[1], c_[2], c_[4]}; }
  // Trivector coefficient (of e1^e2^e3).
  double trivector_part() const { return c_[7]; }

  Multivector operator+(const Multivector& o) const {
    Multivector r;
    for (int i = 0; i < kBlades; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  Multivector operator-(const Multivector& o) const {
    Multivector r;
    for (int i = 0; i < kBlades; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  Multivector operator-() const {
    Multivector r;
    for (int i = 0; i < kBlades; ++i) r.c_[i] = -c_[i];
    return r;
  }
  Multivector operator*(double s) const {
    Multivector r;
    for (int i = 0; i < kBlades; ++i) r.c_[i] = c_[i] * s;
    return r;
  }
  Multivector& operator+=(const Multivector& o) {
    for (int i = 0; i < kBlades; ++i) c_[i] += o.c_[i];
    return *this;
  }

  bool is_finite() const {
    for (double v : c_)
      if (!std::isfinite(v)) return false;
    return true;
  }

 private:
  std::array<double, kBlades> c_{};
};

inline Multivector operator*(double s, const Multivector& m) { return m * s; }

inline int grade_of(int mask) { return __builtin_popcount(static_cast<unsigned>(mask)); }

// Sign of e_A ^ e_B when A and B are disjoint ascending blades, as the
// parity of the merge into ascending order; 0 is not handled here.
int merge_sign(int a, int b);

Multivector wedge(const Multivector& a, const Multivector& b);
Multivector interior(const Multivector& a, const Multivector& b);
Multivector grade_project(const Multivector& a, int k);  // throws std::invalid_argument
Multivector grade_involution(const Multivector& a);
Multivector reversion(const Multivector& a);
Multivector conjugation(const Multivector& a);
double scalar_product(const Multivector& a, const Multivector& b);
Multivector hodge(const Multivector& a);

inline double norm(const Multivector& a) { return std::sqrt(scalar_product(a, a)); }

std::string to_string(const Multivector& a);

}  // namespace pv
