#pragma once

// Dense real/complex kernel: subspaces, orthonormalization, Hermitian
// eigensolver, matrix exponential, projections. Everything downstream
// works in orthonormal coordinates, so the default inner product is
// Euclidean; a custom positive definite product can be supplied.

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "totgeo/config.hpp"
#include "totgeo/errors.hpp"

namespace totgeo::lin {

using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

using InnerProduct = std::function<double(const RVec&, const RVec&)>;

inline double dot_euclid(const RVec& a, const RVec& b) { return a.dot(b); }

// ============================================================================
// Subspace
// ============================================================================

/// A linear subspace of R^n given by an orthonormal basis (columns).
struct Subspace {
  int ambient_dim = 0;
  RMat basis;  // ambient_dim x dim, orthonormal columns

  int dim() const { return static_cast<int>(basis.cols()); }

  /// Orthogonal projector onto the subspace (w.r.t. the Euclidean product
  /// of the coordinates, which is the model metric in orthonormal coords).
  RMat projector() const { return basis * basis.transpose(); }

  RVec project(const RVec& v) const { return basis * (basis.transpose() * v); }

  /// Norm of the component of v orthogonal to the subspace.
  double residual(const RVec& v) const { return (v - project(v)).norm(); }

  /// Residual of another subspace inside this one (max column residual).
  double contains_residual(const Subspace& other) const {
    double r = 0.0;
    for (int j = 0; j < other.dim(); ++j)
      r = std::max(r, residual(other.basis.col(j)));
    return r;
  }
};

/// Modified Gram-Schmidt with a relative rank tolerance. Vectors whose
/// residual after projection falls below tol().rank * (largest input norm)
/// are treated as dependent and dropped.
Subspace orthonormalize(const std::vector<RVec>& vectors,
                        const InnerProduct& ip = dot_euclid);

Subspace orthonormalize_cols(const RMat& cols);

/// Orthonormal basis of the set-theoretic intersection of two subspaces.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Orthonormal complement of a inside the ambient space.
Subspace complement(const Subspace& a);

/// Orthonormal basis of the nullspace of A (relative singular value cutoff).
RMat nullspace(const RMat& A, double rel_tol = tol().rank);

// ============================================================================
// Hermitian eigensolver and matrix exponential
// ============================================================================

struct EigResult {
  RVec values;   // ascending
  Mat vectors;   // unitary, columns are eigenvectors
};

/// Eigendecomposition of a symmetric/Hermitian matrix.
/// Throws NotSymmetric when ||A - A*|| exceeds tol().symmetry * ||A||.
EigResult sym_eig(const Mat& A);

/// Eigendecomposition of a real symmetric matrix.
EigResult sym_eig_real(const RMat& A, RMat* vectors_out = nullptr);

/// Matrix exponential (scaling and squaring). exp(0) == I exactly.
Mat mat_exp(const Mat& X);

}  // namespace totgeo::lin
