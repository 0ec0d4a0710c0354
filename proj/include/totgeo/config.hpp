#pragma once

// Central floating-point policy. Every module reads its thresholds from
// here so that a tolerance change propagates consistently.

namespace totgeo {

struct Tolerances {
  double rank = 1e-9;         // relative rank decision in orthonormalization
  double ortho = 1e-10;       // Gram-matrix deviation from identity
  double residual = 1e-9;     // bracket / eigen reconstruction residuals
  double symmetry = 1e-9;     // relative Hermiticity requirement for sym_eig
  double lts_defect = 1e-8;   // catalog acceptance threshold on the LTS defect
  double search_defect = 1e-10; // accepted defect after search polish
  double abelian = 1e-8;      // commutator norm treated as zero
  double root_round = 1e-6;   // root length rounding for multiset comparison
  double cluster = 1e-4;      // fingerprint distance for search clustering
  double curv_match = 1e-5;   // curvature range comparison (optimized extremes)
  double period = 1e-8;       // geodesic return detection
};

inline const Tolerances& tol() {
  static const Tolerances t{};
  return t;
}

}  // namespace totgeo
