#pragma once

// Arithmetic for the normed division algebras R, C, H, O.
//
// Octonions use the Cayley-Dickson doubling of the quaternions: an octonion
// is a pair (a, b) of quaternions with product
//
//     (a, b) (c, d) = (a c - conj(d) b,  d a + b conj(c))
//
// over the basis e0..e7 with e0 = 1, (e1,e2,e3) = (i,j,k) and
// (e4,e5,e6,e7) = (l, i l, j l, k l). This fixes the multiplication table;
// any other choice gives an isomorphic algebra.
//
// Quaternionic matrices are never handled natively: M = Z + j W maps to the
// complex realization  [[Z, -conj(W)], [W, conj(Z)]]  of twice the size
// (column vectors are v = a + j b with coordinates [a; b], complex scalars
// acting on the right), so one complex eigensolver/exponential serves all
// scalar types.

#include <array>
#include <complex>

#include "totgeo/linalg.hpp"

namespace totgeo::scalars {

enum class AlgebraTag { Real, Complex, Quaternion, Octonion };

// ============================================================================
// Octonions
// ============================================================================

struct Octonion {
  std::array<double, 8> c{};  // coefficients over e0..e7

  static Octonion unit(int i) {
    Octonion o;
    o.c[i] = 1.0;
    return o;
  }

  double norm2() const {
    double s = 0.0;
    for (double x : c) s += x * x;
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

  Octonion conj() const {
    Octonion o = *this;
    for (int i = 1; i < 8; ++i) o.c[i] = -o.c[i];
    return o;
  }

  Octonion operator+(const Octonion& o) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Octonion operator-(const Octonion& o) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Octonion operator*(double s) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] * s;
    return r;
  }
};

Octonion oct_mul(const Octonion& x, const Octonion& y);

/// Structure constants: e_i * e_j = sum_k table(i,j,k) e_k (entries 0, +-1).
double oct_table(int i, int j, int k);

// ============================================================================
// Quaternionic matrices via the 2n x 2n complex realization
// ============================================================================

/// A quaternionic n x n matrix given by its complex parts M = Z + j W.
struct QuatMat {
  lin::Mat Z, W;

  int n() const { return static_cast<int>(Z.rows()); }
  static QuatMat zero(int n) { return {lin::Mat::Zero(n, n), lin::Mat::Zero(n, n)}; }
  static QuatMat identity(int n) {
    return {lin::Mat::Identity(n, n), lin::Mat::Zero(n, n)};
  }
};

/// Complex realization [[Z, -conj(W)], [W, conj(Z)]]; sends j (1x1) to
/// [[0,-1],[1,0]] and is an algebra homomorphism.
lin::Mat quat_to_complex(const QuatMat& M);

QuatMat quat_mul(const QuatMat& A, const QuatMat& B);
QuatMat quat_conj_transpose(const QuatMat& A);

/// The structure map J = quat_to_complex(j I_n). A complex 2n x 2n matrix X
/// is the realization of a quaternionic matrix iff X J = J conj(X).
lin::Mat quat_structure_map(int n);

}  // namespace totgeo::scalars
