#include "totgeo/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace totgeo::lin {

Subspace orthonormalize(const std::vector<RVec>& vectors,
                        const InnerProduct& ip) {
  if (vectors.empty()) throw EmptyInput("orthonormalize needs vectors");
  const int n = static_cast<int>(vectors.front().size());

  double max_norm = 0.0;
  for (const auto& v : vectors) max_norm = std::max(max_norm, std::sqrt(ip(v, v)));
  if (max_norm == 0.0) return Subspace{n, RMat(n, 0)};

  std::vector<RVec> basis;
  for (RVec v : vectors) {
    // two rounds of projection for numerical stability
    for (int round = 0; round < 2; ++round)
      for (const auto& b : basis) v -= ip(b, v) * b;
    const double nrm = std::sqrt(std::max(0.0, ip(v, v)));
    if (nrm > tol().rank * max_norm) basis.push_back(v / nrm);
  }

  Subspace s;
  s.ambient_dim = n;
  s.basis.resize(n, static_cast<int>(basis.size()));
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) s.basis.col(j) = basis[j];
  return s;
}

Subspace orthonormalize_cols(const RMat& cols) {
  std::vector<RVec> v;
  v.reserve(cols.cols());
  for (int j = 0; j < cols.cols(); ++j) v.push_back(cols.col(j));
  return orthonormalize(v);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  // x in a and in b  <=>  x = A u = B w; solve [A -B] [u;w] = 0.
  if (a.dim() == 0 || b.dim() == 0)
    return Subspace{a.ambient_dim, RMat(a.ambient_dim, 0)};
  RMat M(a.ambient_dim, a.dim() + b.dim());
  M.leftCols(a.dim()) = a.basis;
  M.rightCols(b.dim()) = -b.basis;
  RMat ns = nullspace(M);
  RMat cand(a.ambient_dim, ns.cols());
  for (int j = 0; j < ns.cols(); ++j)
    cand.col(j) = a.basis * ns.col(j).head(a.dim());
  return orthonormalize_cols(cand);
}

Subspace complement(const Subspace& a) {
  const int n = a.ambient_dim;
  RMat P = RMat::Identity(n, n) - a.projector();
  Eigen::JacobiSVD<RMat> svd(P, Eigen::ComputeThinU);
  RMat cols(n, n - a.dim());
  int k = 0;
  for (int j = 0; j < n && k < n - a.dim(); ++j)
    if (svd.singularValues()(j) > 0.5) cols.col(k++) = svd.matrixU().col(j);
  cols.conservativeResize(n, k);
  return orthonormalize_cols(cols);
}

RMat nullspace(const RMat& A, double rel_tol) {
  Eigen::JacobiSVD<RMat> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() ? sv(0) : 0.0) * rel_tol;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff && sv(i) > 1e-300) ++rank;
  return svd.matrixV().rightCols(A.cols() - rank);
}

EigResult sym_eig(const Mat& A) {
  const double scale = A.norm();
  if (scale > 0 && (A - A.adjoint()).norm() > tol().symmetry * scale)
    throw NotSymmetric("sym_eig input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (A + A.adjoint()));
  return EigResult{es.eigenvalues(), es.eigenvectors()};
}

EigResult sym_eig_real(const RMat& A, RMat* vectors_out) {
  const double scale = A.norm();
  if (scale > 0 && (A - A.transpose()).norm() > tol().symmetry * scale)
    throw NotSymmetric("sym_eig input is not symmetric");
  Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (A + A.transpose()));
  if (vectors_out) *vectors_out = es.eigenvectors();
  EigResult r;
  r.values = es.eigenvalues();
  r.vectors = es.eigenvectors().cast<std::complex<double>>();
  return r;
}

Mat mat_exp(const Mat& X) {
  if (X.norm() == 0.0) return Mat::Identity(X.rows(), X.cols());
  return X.exp();
}

}  // namespace totgeo::lin
