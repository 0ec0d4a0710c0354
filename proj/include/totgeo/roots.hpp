#pragma once

// Maximal abelian subspaces, restricted root systems with multiplicities,
// the rank of a Lie triple system, and local-isometry fingerprints
// (dimension, rank, root-length multiset, sectional curvature range).

#include <optional>
#include <vector>

#include "totgeo/curvature.hpp"

namespace totgeo::roots {

struct RootPair {
  lin::RVec alpha;  // coefficients on the orthonormal a-basis; sign-canonical
  int mult = 0;     // dimension of the root space (per +- pair)
  double length() const { return alpha.norm(); }
};

struct RootDatum {
  lin::Subspace a;              // maximal abelian subspace, g-coords
  std::vector<RootPair> roots;  // positive representatives; +-alpha implied
  int zero_dim = 0;             // joint kernel of the (ad H)^2 on the module

  int rank() const { return a.dim(); }
  /// Dimension of the Euclidean factor: rank minus span of the roots.
  int flat_dim() const;
};

struct RootEntry {
  double length = 0;  // rounded to 6 decimals for multiset comparison
  int mult = 0;
  bool operator==(const RootEntry& o) const = default;
};

struct Fingerprint {
  int dim = 0;
  int rank = 0;
  int flat_dim = 0;
  std::vector<RootEntry> root_lengths;  // sorted ascending, merged by length
  double curv_min = 0.0;
  double curv_max = 0.0;

  /// Sphere radius 1/sqrt(K) when rank 1 and constant curvature K > 0.
  std::optional<double> sphere_radius() const;
  std::string str() const;
};

/// An abelian subspace of U of maximal dimension, found from generic
/// centralizers of random elements. Throws NotAnLTS when U fails the
/// defect precondition.
lin::Subspace maximal_abelian(const curv::TangentSubspace& U,
                              std::uint64_t seed = 12345);

int rank_of(const curv::TangentSubspace& U, std::uint64_t seed = 12345);

/// Restricted roots of U with respect to a (a abelian, a inside U):
/// simultaneous diagonalization of the commuting PSD operators -(ad H_i)^2
/// restricted to U; relative signs recovered from ad H_1 ad H_2.
RootDatum restricted_roots(const curv::TangentSubspace& U,
                           const lin::Subspace& a);

/// Sampled + polished sectional curvature range over 2-planes of U.
std::pair<double, double> curvature_range(const curv::TangentSubspace& U,
                                          std::uint64_t seed, int samples = 2000);

Fingerprint fingerprint(const curv::TangentSubspace& U,
                        std::uint64_t seed = 12345);

/// Fingerprint of the whole space (U = p).
Fingerprint space_fingerprint(const sym::ModelPtr& model,
                              std::uint64_t seed = 12345);

/// Shortest positive restricted root length of the ambient space.
double min_root_length(const sym::ModelPtr& model);

/// Distance used for clustering / matching: infinity when the discrete data
/// differ, otherwise the worst deviation among root lengths and curvature.
double fingerprint_distance(const Fingerprint& A, const Fingerprint& B);

/// Smallest t > 0 with exp(2 t X) = I in the model realization (the geodesic
/// through the base point returns); +infinity when no return below T_max.
double geodesic_period(const sym::SymmetricSpaceModel& m, const lin::RVec& X);

}  // namespace totgeo::roots
