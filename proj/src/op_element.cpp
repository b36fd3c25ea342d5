#include "paravec/op_element.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pv {

namespace {

struct NOTerm {
  int s_mask;  // creation part
  int t_mask;  // annihilation part
  int sign;
};

// Normal-order the product ann_T cre_S, i.e. rewrite it as a signed sum of
// cre_A ann_B monomials using the anticommutation relations. Recursion on
// t = max(T): moving ann_t through cre_S costs (-1)^{|S|} plus, when t is in
// S, a contraction term with sign (-1)^{#bits of S below t}.
std::vector<NOTerm> ann_cre_order(int t_mask, int s_mask) {
  if (t_mask == 0) return {{s_mask, 0, 1}};
  int t_bit = 1 << (31 - __builtin_clz(static_cast<unsigned>(t_mask)));
  int rest = t_mask & ~t_bit;

  std::vector<NOTerm> out;
  int pass_sign = (grade_of(s_mask) & 1) ? -1 : 1;
  for (const NOTerm& term : ann_cre_order(rest, s_mask)) {
    // all bits of rest are below t_bit, so appending ann_t keeps ascending order
    out.push_back({term.s_mask, term.t_mask | t_bit, term.sign * pass_sign});
  }
  if (s_mask & t_bit) {
    int below = grade_of(s_mask & (t_bit - 1));
    int c_sign = (below & 1) ? -1 : 1;
    for (const NOTerm& term : ann_cre_order(rest, s_mask & ~t_bit))
      out.push_back({term.s_mask, term.t_mask, term.sign * c_sign});
  }
  return out;
}

const std::vector<NOTerm>& ann_cre_table(int t_mask, int s_mask) {
  static const auto table = [] {
    std::array<std::vector<NOTerm>, 64> tab;
    for (int t = 0; t < 8; ++t)
      for (int s = 0; s < 8; ++s) tab[t * 8 + s] = ann_cre_order(t, s);
    return tab;
  }();
  return table[t_mask * 8 + s_mask];
}

int rev_sign(int mask) {
  int k = grade_of(mask);
  return (k * (k - 1) / 2) % 2 ? -1 : 1;
}

}  // namespace

OpElement creation(const Vector3& v) {
  OpElement r;
  r.at(1, 0) = v.x;
  r.at(2, 0) = v.y;
  r.at(4, 0) = v.z;
  return r;
}

OpElement annihilation(const Vector3& v) {
  OpElement r;
  r.at(0, 1) = v.x;
  r.at(0, 2) = v.y;
  r.at(0, 4) = v.z;
  return r;
}

OpElement iota(const Multivector& a) {
  OpElement r;
  for (int s = 0; s < 8; ++s) r.at(s, 0) = a[s];
  return r;
}

OpElement op_mul(const OpElement& x, const OpElement& y) {
  OpElement r;
  for (int i = 0; i < 64; ++i) {
    if (x[i] == 0.0) continue;
    int s = i >> 3, t = i & 7;
    for (int j = 0; j < 64; ++j) {
      if (y[j] == 0.0) continue;
      int u = j >> 3, v = j & 7;
      double c = x[i] * y[j];
      // (cre_S ann_T)(cre_U ann_V): normal-order the inner ann_T cre_U,
      // then merge cre_S with the creation part and ann_V with the
      // annihilation part.
      for (const NOTerm& term : ann_cre_table(t, u)) {
        if (s & term.s_mask) continue;
        if (term.t_mask & v) continue;
        int sign = term.sign * merge_sign(s, term.s_mask) * merge_sign(term.t_mask, v);
        r.at(s | term.s_mask, term.t_mask | v) += sign * c;
      }
    }
  }
  return r;
}

namespace {

// Strict iterated contraction of the ascending product ann_T on blade b:
// zero unless T is a subset of b. The rightmost (largest-index) factor acts
// first; each single contraction e_i . e_B costs (-1)^{#bits of B below i}.
// Note this differs from the multivector interior product, which flips its
// arguments when the left grade exceeds the right instead of vanishing.
bool contract_blade(int t_mask, int b, int& out_blade, int& out_sign) {
  if (t_mask & ~b) return false;
  int sign = 1;
  for (int bit = 2; bit >= 0; --bit) {
    int m = 1 << bit;
    if (!(t_mask & m)) continue;
    if (grade_of(b & (m - 1)) & 1) sign = -sign;
    b &= ~m;
  }
  out_blade = b;
  out_sign = sign;
  return true;
}

}  // namespace

Multivector op_apply(const OpElement& x, const Multivector& phi) {
  Multivector r;
  for (int i = 0; i < 64; ++i) {
    if (x[i] == 0.0) continue;
    int s = i >> 3, t = i & 7;
    // ann_T acts first, then wedge by e_S
    Multivector contracted;
    for (int b = 0; b < 8; ++b) {
      if (phi[b] == 0.0) continue;
      int rest, sign;
      if (contract_blade(t, b, rest, sign)) contracted[rest] += sign * phi[b];
    }
    r += x[i] * wedge(Multivector::blade(s, 1.0), contracted);
  }
  return r;
}

OpElement reversion(const OpElement& x) {
  OpElement r;
  for (int i = 0; i < 64; ++i) {
    if (x[i] == 0.0) continue;
    int s = i >> 3, t = i & 7;
    // reverse the monomial: ann_T cre_S with both groups reversed, then
    // normal-order back
    double c = x[i] * rev_sign(s) * rev_sign(t);
    for (const NOTerm& term : ann_cre_table(t, s))
      r.at(term.s_mask, term.t_mask) += term.sign * c;
  }
  return r;
}

OpElement grade_involution(const OpElement& x) {
  OpElement r;
  for (int i = 0; i < 64; ++i) {
    int s = i >> 3, t = i & 7;
    int sign = ((grade_of(s) + grade_of(t)) & 1) ? -1 : 1;
    r[i] = sign * x[i];
  }
  return r;
}

OpElement conjugation(const OpElement& x) { return grade_involution(reversion(x)); }

OpElement commutator(const OpElement& x, const OpElement& y) {
  return op_mul(x, y) - op_mul(y, x);
}

double op_norm(const OpElement& x) {
  double s = 0.0;
  for (int i = 0; i < 64; ++i) s += x[i] * x[i];
  return std::sqrt(s);
}

double op_max_abs(const OpElement& x) {
  double m = 0.0;
  for (int i = 0; i < 64; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

OpElement op_exp_series(const OpElement& x, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("op_exp_series: tol must be positive");
  if (!x.is_finite()) throw std::invalid_argument("op_exp_series: non-finite input");

  double n1 = 0.0;
  for (int i = 0; i < 64; ++i) n1 += std::abs(x[i]);

  int squarings = 0;
  while (n1 > 0.5) {
    n1 *= 0.5;
    ++squarings;
  }
  OpElement scaled = x * std::ldexp(1.0, -squarings);

  OpElement result = OpElement::identity();
  OpElement term = OpElement::identity();
  for (int n = 1; n <= 200; ++n) {
    term = op_mul(term, scaled) * (1.0 / n);
    result += term;
    if (op_norm(term) < tol) break;
  }
  for (int k = 0; k < squarings; ++k) result = op_mul(result, result);
  return result;
}

bool is_creation_only(const OpElement& x, double tol) {
  double scale = op_max_abs(x);
  for (int i = 0; i < 64; ++i)
    if ((i & 7) != 0 && std::abs(x[i]) > tol * (1.0 + scale)) return false;
  return true;
}

OpElement op_star(const OpElement& x) {
  if (!is_creation_only(x))
    throw std::domain_error("op_star: defined for creation-only elements");
  return iota(hodge(op_apply(x, Multivector::scalar(1.0))));
}

OpElement op_star_bracket(int m_mask) {
  // star(cre_M) = { tau(reversion(cre_M)) | cre_Omega }.  Reversal puts the
  // annihilation indices in descending order, so the innermost bracket takes
  // the smallest index; iterate bits of M ascending, tracking the creation
  // degree of the intermediate result.
  OpElement x = OpElement::monomial(7, 0);  // Omega
  int degree = 3;
  for (int bit = 0; bit < 3; ++bit) {
    int b = 1 << bit;
    if (!(m_mask & b)) continue;
    OpElement a = OpElement::monomial(0, b);  // ann_{bit+1}
    OpElement left = op_mul(a, x);
    OpElement right = op_mul(x, a);
    x = (degree & 1) ? left + right : left - right;
    --degree;
  }
  return x;
}

OpElement op_grade_project(const OpElement& x, int k) {
  if (!is_creation_only(x))
    throw std::domain_error("op_grade_project: requires a creation-only element");
  if (k < 0 || k > 4) throw std::invalid_argument("op_grade_project: band out of range");
  Multivector a = op_apply(x, Multivector::scalar(1.0));
  Multivector r;
  if (k >= 1) r += grade_project(a, k - 1);
  if (k <= 3) r += grade_project(a, k);
  return iota(r);
}

std::array<std::array<double, 8>, 8> action_matrix(const OpElement& x) {
  std::array<std::array<double, 8>, 8> m{};
  for (int j = 0; j < 8; ++j) {
    Multivector col = op_apply(x, Multivector::blade(j, 1.0));
    for (int i = 0; i < 8; ++i) m[i][j] = col[i];
  }
  return m;
}

}  // namespace pv
