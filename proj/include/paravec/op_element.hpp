#pragma once

#include <array>

#include "paravec/multivector.hpp"

namespace pv {

// Element of the 64-dimensional algebra of endomorphisms of the exterior
// algebra, generated by the creation operators cre(i) (left wedge by e_i) and
// annihilation operators ann(i) (left contraction by e_i) under the
// anticommutation relations  cre_i ann_j + ann_j cre_i = delta_ij.
//
// Storage is the normal-ordered basis: coefficient index (S << 3) | T holds
// the monomial cre_S ann_T, where cre_S (resp. ann_T) is the ascending-index
// product over the bits of S (resp. T). "Creation-only" is then simply the
// predicate that all T != 0 coefficients vanish.
class OpElement {
 public:
  static constexpr int kDim = 64;

  OpElement() = default;

  double& operator[](int idx) { return c_[idx]; }
  double operator[](int idx) const { return c_[idx]; }

  double& at(int s_mask, int t_mask) { return c_[(s_mask << 3) | t_mask]; }
  double at(int s_mask, int t_mask) const { return c_[(s_mask << 3) | t_mask]; }

  static OpElement identity() {
    OpElement e;
    e.c_[0] = 1.0;
    return e;
  }
  static OpElement monomial(int s_mask, int t_mask, double coeff = 1.0) {
    OpElement e;
    e.at(s_mask, t_mask) = coeff;
    return e;
  }

  OpElement operator+(const OpElement& o) const {
    OpElement r;
    for (int i = 0; i < kDim; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  OpElement operator-(const OpElement& o) const {
    OpElement r;
    for (int i = 0; i < kDim; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  OpElement operator-() const {
    OpElement r;
    for (int i = 0; i < kDim; ++i) r.c_[i] = -c_[i];
    return r;
  }
  OpElement operator*(double s) const {
    OpElement r;
    for (int i = 0; i < kDim; ++i) r.c_[i] = c_[i] * s;
    return r;
  }
  OpElement& operator+=(const OpElement& o) {
    for (int i = 0; i < kDim; ++i) c_[i] += o.c_[i];
    return *this;
  }

  bool is_finite() const {
    for (double v : c_)
      if (!std::isfinite(v)) return false;
    return true;
  }

 private:
  std::array<double, kDim> c_{};
};

inline OpElement operator*(double s, const OpElement& x) { return x * s; }

// cre(v)[phi] = v ^ phi ; ann(v)[phi] = v . phi
OpElement creation(const Vector3& v);
OpElement annihilation(const Vector3& v);

// Natural map: blade e_S -> monomial cre_S. Image is creation-only.
OpElement iota(const Multivector& a);

OpElement op_mul(const OpElement& x, const OpElement& y);
Multivector op_apply(const OpElement& x, const Multivector& phi);

OpElement reversion(const OpElement& x);        // antiautomorphism fixing generators
OpElement grade_involution(const OpElement& x); // automorphism negating generators
OpElement conjugation(const OpElement& x);      // composition of the two

OpElement commutator(const OpElement& x, const OpElement& y);

// Exponential by scaling-and-squaring with a truncated power series.
// Throws std::invalid_argument on non-finite input.
OpElement op_exp_series(const OpElement& x, double tol = 1e-14);

bool is_creation_only(const OpElement& x, double tol = 1e-12);

// Hodge star through the vacuum: op_star(X) = iota(hodge(X[1])).
// Throws std::domain_error when X is not creation-only.
OpElement op_star(const OpElement& x);

// The bracket-based star on a single creation monomial cre_M, used as an
// independent check of op_star in the tests.
OpElement op_star_bracket(int m_mask);

// Band projection of a creation-only element through the vacuum:
// iota of grades {k-1, k} of X[1]. Throws std::domain_error otherwise.
OpElement op_grade_project(const OpElement& x, int k);

// Coefficient-wise euclidean norm and max-abs (test helpers).
double op_norm(const OpElement& x);
double op_max_abs(const OpElement& x);

// The induced 8x8 action on the exterior algebra: column j is X[blade j].
// Used as the independent oracle for op_mul.
std::array<std::array<double, 8>, 8> action_matrix(const OpElement& x);

}  // namespace pv
