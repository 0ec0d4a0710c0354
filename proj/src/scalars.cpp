#include "totgeo/scalars.hpp"

namespace totgeo::scalars {

namespace {

struct Quat {
  double w = 0, x = 0, y = 0, z = 0;

  Quat conj() const { return {w, -x, -y, -z}; }
  Quat operator+(const Quat& q) const { return {w + q.w, x + q.x, y + q.y, z + q.z}; }
  Quat operator-(const Quat& q) const { return {w - q.w, x - q.x, y - q.y, z - q.z}; }
  Quat operator*(const Quat& q) const {
    return {w * q.w - x * q.x - y * q.y - z * q.z,
            w * q.x + x * q.w + y * q.z - z * q.y,
            w * q.y - x * q.z + y * q.w + z * q.x,
            w * q.z + x * q.y - y * q.x + z * q.w};
  }
};

}  // namespace

Octonion oct_mul(const Octonion& o1, const Octonion& o2) {
  const Quat a{o1.c[0], o1.c[1], o1.c[2], o1.c[3]};
  const Quat b{o1.c[4], o1.c[5], o1.c[6], o1.c[7]};
  const Quat c{o2.c[0], o2.c[1], o2.c[2], o2.c[3]};
  const Quat d{o2.c[4], o2.c[5], o2.c[6], o2.c[7]};
  const Quat p = a * c - d.conj() * b;
  const Quat q = d * a + b * c.conj();
  return Octonion{{p.w, p.x, p.y, p.z, q.w, q.x, q.y, q.z}};
}

double oct_table(int i, int j, int k) {
  const Octonion p = oct_mul(Octonion::unit(i), Octonion::unit(j));
  return p.c[k];
}

lin::Mat quat_to_complex(const QuatMat& M) {
  const int n = M.n();
  lin::Mat X(2 * n, 2 * n);
  X.topLeftCorner(n, n) = M.Z;
  X.topRightCorner(n, n) = -M.W.conjugate();
  X.bottomLeftCorner(n, n) = M.W;
  X.bottomRightCorner(n, n) = M.Z.conjugate();
  return X;
}

QuatMat quat_mul(const QuatMat& A, const QuatMat& B) {
  // (Z1 + j W1)(Z2 + j W2) = (Z1 Z2 - conj(W1) W2) + j (conj(Z1) W2 + W1 Z2)
  QuatMat C;
  C.Z = A.Z * B.Z - A.W.conjugate() * B.W;
  C.W = A.Z.conjugate() * B.W + A.W * B.Z;
  return C;
}

QuatMat quat_conj_transpose(const QuatMat& A) {
  // (Z + W j)^* = Z^* - W^T j
  return {A.Z.adjoint(), -A.W.transpose()};
}

lin::Mat quat_structure_map(int n) {
  QuatMat J = QuatMat::zero(n);
  J.W = lin::Mat::Identity(n, n);
  return quat_to_complex(J);
}

}  // namespace totgeo::scalars
