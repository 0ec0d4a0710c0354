#include "totgeo/curvature.hpp"

namespace totgeo::curv {

using lin::RMat;
using lin::RVec;

TangentSubspace make_tangent(const sym::ModelPtr& model,
                             const lin::Subspace& U) {
  for (int j = 0; j < U.dim(); ++j) {
    if (model->p_space.residual(U.basis.col(j)) > tol().residual)
      throw NotTangent("subspace leaves p");
  }
  const RMat gram = U.basis.transpose() * U.basis;
  if ((gram - RMat::Identity(U.dim(), U.dim())).norm() > tol().ortho * 10)
    throw NotTangent("basis is not orthonormal");
  return TangentSubspace{model, U};
}

TangentSubspace span_tangent(const sym::ModelPtr& model,
                             const std::vector<RVec>& vectors) {
  if (vectors.empty()) throw EmptyInput("span_tangent needs vectors");
  return make_tangent(model, lin::orthonormalize(vectors));
}

RVec curvature_op(const sym::SymmetricSpaceModel& m, const RVec& X,
                  const RVec& Y, const RVec& Z) {
  for (const RVec* v : {&X, &Y, &Z}) {
    const double nrm = v->norm();
    if (nrm > 0 && m.p_space.residual(*v) > tol().residual * std::max(1.0, nrm))
      throw NotTangent("curvature_op argument leaves p");
  }
  return -m.bracket(m.bracket(X, Y), Z);
}

double sectional_curvature(const sym::SymmetricSpaceModel& m, const RVec& X,
                           const RVec& Y) {
  const double den = X.squaredNorm() * Y.squaredNorm() - std::pow(X.dot(Y), 2);
  if (den < 1e-12) throw DegeneratePlane("plane spanned by X,Y is degenerate");
  return m.bracket(X, Y).squaredNorm() / den;
}

double lts_defect(const TangentSubspace& T) {
  const auto& m = *T.model;
  const int k = T.dim();
  const RMat& B = T.U.basis;
  double worst = 0.0;
  std::vector<std::vector<RVec>> pair_brackets(k);
  for (int i = 0; i < k; ++i) {
    pair_brackets[i].resize(k);
    for (int j = i + 1; j < k; ++j)
      pair_brackets[i][j] = m.bracket(B.col(i), B.col(j));
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        const RVec r = -m.bracket(pair_brackets[i][j], B.col(l));
        worst = std::max(worst, T.U.residual(r));
      }
  return worst;
}

TangentSubspace lts_closure(const sym::ModelPtr& model,
                            const std::vector<RVec>& vectors) {
  if (vectors.empty()) throw EmptyInput("lts_closure needs vectors");
  lin::Subspace S = lin::orthonormalize(vectors);
  const int dim_p = model->p_space.dim();
  while (true) {
    const int k = S.dim();
    std::vector<RVec> grown;
    grown.reserve(k + k * k * k);
    for (int j = 0; j < k; ++j) grown.push_back(S.basis.col(j));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const RVec pij = model->bracket(S.basis.col(i), S.basis.col(j));
        for (int l = 0; l < k; ++l)
          grown.push_back(-model->bracket(pij, S.basis.col(l)));
      }
    lin::Subspace next = lin::orthonormalize(grown);
    if (next.dim() == S.dim() || next.dim() >= dim_p) {
      S = next;
      break;
    }
    S = next;
  }
  return make_tangent(model, S);
}

TangentSubspace orthogonal_complement_in_p(const TangentSubspace& T) {
  // complement within p: project p-basis away from U.
  const auto& P = T.model->p_space.basis;
  std::vector<RVec> cand;
  for (int j = 0; j < P.cols(); ++j) {
    RVec v = P.col(j);
    v -= T.U.project(v);
    cand.push_back(v);
  }
  return span_tangent(T.model, cand);
}

}  // namespace totgeo::curv
