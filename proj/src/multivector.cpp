#include "paravec/multivector.hpp"

#include <sstream>
#include <stdexcept>

namespace pv {

namespace {

// Blade-level interior product e_S . e_T, defined only for |S| <= |T| via the
// recursive contraction rules: a single e_s removes s from T with sign
// (-1)^{#elements of T below s}, and a blade applies its factors with the
// highest index innermost. Returns the result mask; sign 0 means the product
// vanishes.
struct BladeTerm {
  int mask;
  int sign;  // -1, 0, +1
};

BladeTerm contract_blade(int s_mask, int t_mask) {
  if (grade_of(s_mask) > grade_of(t_mask)) return {0, 0};
  if ((s_mask & t_mask) != s_mask) return {0, 0};
  int sign = 1;
  int t = t_mask;
  // highest factor of S acts first
  for (int bit = 2; bit >= 0; --bit) {
    int b = 1 << bit;
    if (!(s_mask & b)) continue;
    int below = grade_of(t & (b - 1));
    if (below & 1) sign = -sign;
    t &= ~b;
  }
  return {t, sign};
}

struct InteriorTable {
  BladeTerm entry[8][8];
  InteriorTable() {
    for (int s = 0; s < 8; ++s) {
      for (int t = 0; t < 8; ++t) {
        int k = grade_of(s), j = grade_of(t);
        if (k == 0) {
          entry[s][t] = {t, 1};  // scalar acts by multiplication
        } else if (j == 0) {
          entry[s][t] = {0, 0};  // v . 1 = 0 and extensions
        } else if (k <= j) {
          entry[s][t] = contract_blade(s, t);
        } else {
          // A_k . B_j = (-1)^{j(k-1)} B_j . A_k
          BladeTerm flipped = contract_blade(t, s);
          int sign = ((j * (k - 1)) & 1) ? -flipped.sign : flipped.sign;
          entry[s][t] = {flipped.mask, sign};
        }
      }
    }
  }
};

const InteriorTable& interior_table() {
  static const InteriorTable table;
  return table;
}

int involution_sign(int k, int kind) {
  // kind: 0 grade involution, 1 reversion, 2 conjugation
  int exp = kind == 0 ? k : (kind == 1 ? k * (k - 1) / 2 : k * (k + 1) / 2);
  return (exp & 1) ? -1 : 1;
}

Multivector apply_involution(const Multivector& a, int kind) {
  Multivector r;
  for (int s = 0; s < 8; ++s) r[s] = involution_sign(grade_of(s), kind) * a[s];
  return r;
}

}  // namespace

int merge_sign(int a, int b) {
  int sign = 1;
  for (int bit = 0; bit < 3; ++bit) {
    int bb = 1 << bit;
    if (!(b & bb)) continue;
    // factors of a with index above this factor of b must jump over it
    int above = grade_of(a & ~(2 * bb - 1));
    if (above & 1) sign = -sign;
  }
  return sign;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (int s = 0; s < 8; ++s) {
    if (a[s] == 0.0) continue;
    for (int t = 0; t < 8; ++t) {
      if (b[t] == 0.0) continue;
      if (s & t) continue;
      r[s | t] += merge_sign(s, t) * a[s] * b[t];
    }
  }
  return r;
}

Multivector interior(const Multivector& a, const Multivector& b) {
  const InteriorTable& table = interior_table();
  Multivector r;
  for (int s = 0; s < 8; ++s) {
    if (a[s] == 0.0) continue;
    for (int t = 0; t < 8; ++t) {
      if (b[t] == 0.0) continue;
      const BladeTerm& e = table.entry[s][t];
      if (e.sign == 0) continue;
      r[e.mask] += e.sign * a[s] * b[t];
    }
  }
  return r;
}

Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("grade_project: grade must be in [0,3]");
  Multivector r;
  for (int s = 0; s < 8; ++s)
    if (grade_of(s) == k) r[s] = a[s];
  return r;
}

Multivector grade_involution(const Multivector& a) { return apply_involution(a, 0); }
Multivector reversion(const Multivector& a) { return apply_involution(a, 1); }
Multivector conjugation(const Multivector& a) { return apply_involution(a, 2); }

double scalar_product(const Multivector& a, const Multivector& b) {
  // (A_k|B_k) = reversion(A_k) . B_k per grade; cross-grade terms vanish.
  // On blades this reduces to a signed diagonal, which for an orthonormal
  // basis is just +1 on every blade.
  double r = 0.0;
  for (int s = 0; s < 8; ++s) r += a[s] * b[s];
  return r;
}

Multivector hodge(const Multivector& a) {
  // star A_k = reversion(A_k) . Omega, star 1 = Omega
  static const Multivector omega = Multivector::blade(7, 1.0);
  return interior(reversion(a), omega);
}

std::string to_string(const Multivector& a) {
  static const char* names[8] = {"1", "e1", "e2", "e12", "e3", "e13", "e23", "e123"};
  std::ostringstream out;
  bool first = true;
  for (int s = 0; s < 8; ++s) {
    if (a[s] == 0.0) continue;
    if (!first) out << " + ";
    out << a[s] << "*" << names[s];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace pv
