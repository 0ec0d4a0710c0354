#pragma once

// Registry of ambient symmetric space models. Each space is realized as a
// compact matrix Lie algebra g with an involution theta; the Cartan
// decomposition g = k + p and the invariant metric <X,Y> = -c Re tr(XY)
// are computed at construction. Group manifolds are modeled as
// (g + g, theta = swap) with p = {(X,-X)}, so the curvature formula
// R(X,Y)Z = -[[X,Y],Z] applies uniformly.
//
// All downstream subspace work happens in coordinates over the orthonormal
// g-basis, where the metric is Euclidean.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "totgeo/linalg.hpp"

namespace totgeo::sym {

enum class Family { G2R, G2C, G2H, AI, AII, DIII, GI, GrpSU3, GrpSp2, GrpG2 };

struct SpaceId {
  Family family;
  int n = 0;  // Grassmann parameter; ambient K^(n+2). 0 for the others.

  std::string str() const;
  static SpaceId parse(const std::string& s);  // "g2r:5", "ai", "grp-sp2"
  bool grassmann() const {
    return family == Family::G2R || family == Family::G2C ||
           family == Family::G2H;
  }
  bool group_space() const {
    return family == Family::GrpSU3 || family == Family::GrpSp2 ||
           family == Family::GrpG2;
  }
  bool operator==(const SpaceId& o) const {
    return family == o.family && n == o.n;
  }
};

enum class Convention { Srr1, Srr1Star };

struct SymmetricSpaceModel {
  SpaceId id;
  int N = 0;       // matrix size of the realization
  double c = 1.0;  // metric scale: <X,Y> = -c Re tr(XY)
  std::vector<lin::Mat> basis;  // orthonormal w.r.t. the metric
  std::function<lin::Mat(const lin::Mat&)> theta;
  lin::Subspace k_space, p_space;  // +-1 eigenspaces of theta, in g-coords
  std::vector<lin::RMat> ad;       // [B_a, B_b] = sum_e ad[a](e,b) B_e
  bool group_double = false;
  int inner_N = 0;  // block size of the doubled realization (group spaces)

  int dim_g() const { return static_cast<int>(basis.size()); }
  int dim_k() const { return k_space.dim(); }
  int dim_p() const { return p_space.dim(); }

  double inner(const lin::Mat& X, const lin::Mat& Y) const {
    return -c * (X * Y).trace().real();
  }

  lin::RVec coords(const lin::Mat& X) const;
  lin::Mat matrix(const lin::RVec& v) const;

  lin::RVec bracket(const lin::RVec& x, const lin::RVec& y) const;
  lin::RMat ad_of(const lin::RVec& x) const;

  /// Same space with the metric multiplied by s (basis kept orthonormal).
  SymmetricSpaceModel rescaled(double s) const;
};

using ModelPtr = std::shared_ptr<const SymmetricSpaceModel>;

/// Build (and cache) the model for a space id. Throws UnsupportedSpace for
/// invalid parameters or algebras above the registry size bound.
ModelPtr build_space(const SpaceId& id);

/// Rescale the metric so the shortest restricted root has length 1 (srr1)
/// or so the family-generic shortest root would have length 1 (srr1star,
/// Grassmann families only; NotApplicable otherwise).
ModelPtr normalize_metric(const ModelPtr& model, Convention conv);

/// Default paper convention for a space: srr1star for Grassmannians,
/// srr1 otherwise.
ModelPtr normalized_default(const SpaceId& id);

/// The metric scale that realizes srr=1* for a Grassmann family,
/// computed once from the n = 6 instance and cached.
double family_star_scale(Family f);

// ============================================================================
// Raw generator bases (non-orthonormal), shared with the catalog recipes
// ============================================================================

std::vector<lin::Mat> so_basis(int m);
std::vector<lin::Mat> su_basis(int m);
/// sp(m) in the 2m x 2m complex realization.
std::vector<lin::Mat> sp_basis(int m);
/// Derivation algebra of the octonions as real 8x8 matrices (dimension 14).
std::vector<lin::Mat> der_octonion_basis();

/// Embed an inner-algebra element X into the doubled model as (X, -X)
/// (tangent direction) when sign = -1, or (X, X) when sign = +1.
lin::Mat double_embed(const lin::Mat& X, int sign);

}  // namespace totgeo::sym
