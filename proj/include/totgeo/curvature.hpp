#pragma once

// Curvature tensor of a compact symmetric space model, sectional curvature,
// Lie-triple-system testing and closure. Sign convention:
//
//     R(X,Y)Z = -[[X,Y],Z]
//
// with the positive definite metric -c Re tr(XY); all sectional curvatures
// are then >= 0. For orthonormal X, Y this gives K = ||[X,Y]||^2.

#include "totgeo/symspace.hpp"

namespace totgeo::curv {

/// A candidate tangent space of a totally geodesic submanifold: an
/// orthonormal subspace of p, stored in g-coordinates.
struct TangentSubspace {
  sym::ModelPtr model;
  lin::Subspace U;  // ambient_dim = dim_g, columns orthonormal, inside p

  int dim() const { return U.dim(); }
};

/// Checked constructor: verifies U lies in p and the basis is orthonormal.
TangentSubspace make_tangent(const sym::ModelPtr& model,
                             const lin::Subspace& U);

/// Tangent space spanned by the given p-vectors (g-coords), orthonormalized.
TangentSubspace span_tangent(const sym::ModelPtr& model,
                             const std::vector<lin::RVec>& vectors);

/// R(X,Y)Z = -[[X,Y],Z] for X,Y,Z in p (g-coordinates).
/// Throws NotTangent when an argument leaves p.
lin::RVec curvature_op(const sym::SymmetricSpaceModel& m, const lin::RVec& X,
                       const lin::RVec& Y, const lin::RVec& Z);

/// K = ||[X,Y]||^2 / (||X||^2 ||Y||^2 - <X,Y>^2).
/// Throws DegeneratePlane when the denominator is below 1e-12.
double sectional_curvature(const sym::SymmetricSpaceModel& m,
                           const lin::RVec& X, const lin::RVec& Y);

/// max over basis triples of || proj_{U^perp} R(u_i,u_j) u_k ||;
/// zero (within tolerance) iff U is a Lie triple system.
double lts_defect(const TangentSubspace& T);

/// Smallest subspace containing the input vectors and closed under the
/// curvature operator, by iterated span growth.
TangentSubspace lts_closure(const sym::ModelPtr& model,
                            const std::vector<lin::RVec>& vectors);

/// Orthogonal complement of T inside p (the reflective complement).
TangentSubspace orthogonal_complement_in_p(const TangentSubspace& T);

}  // namespace totgeo::curv
