#include "totgeo/symspace.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "totgeo/roots.hpp"
#include "totgeo/scalars.hpp"

namespace totgeo::sym {

using lin::Mat;
using lin::RMat;
using lin::RVec;

namespace {

constexpr int kMaxAlgebraDim = 300;
constexpr std::complex<double> kI{0.0, 1.0};

std::string family_str(Family f) {
  switch (f) {
    case Family::G2R: return "g2r";
    case Family::G2C: return "g2c";
    case Family::G2H: return "g2h";
    case Family::AI: return "ai";
    case Family::AII: return "aii";
    case Family::DIII: return "diii";
    case Family::GI: return "gi";
    case Family::GrpSU3: return "grp-su3";
    case Family::GrpSp2: return "grp-sp2";
    case Family::GrpG2: return "grp-g2";
  }
  return "?";
}

}  // namespace

std::string SpaceId::str() const {
  if (grassmann()) return family_str(family) + ":" + std::to_string(n);
  return family_str(family);
}

SpaceId SpaceId::parse(const std::string& s) {
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  static const std::map<std::string, Family> names = {
      {"g2r", Family::G2R},         {"g2c", Family::G2C},
      {"g2h", Family::G2H},         {"ai", Family::AI},
      {"aii", Family::AII},         {"diii", Family::DIII},
      {"gi", Family::GI},           {"grp-su3", Family::GrpSU3},
      {"grp-sp2", Family::GrpSp2},  {"grp-g2", Family::GrpG2}};
  auto it = names.find(head);
  if (it == names.end()) throw UnsupportedSpace("unknown space id '" + s + "'");
  SpaceId id{it->second, 0};
  if (colon != std::string::npos) {
    id.n = std::stoi(s.substr(colon + 1));
    if (!id.grassmann())
      throw UnsupportedSpace("family '" + head + "' takes no parameter");
  } else if (id.grassmann()) {
    throw UnsupportedSpace("family '" + head + "' needs a parameter, e.g. " +
                           head + ":3");
  }
  return id;
}

RVec SymmetricSpaceModel::coords(const Mat& X) const {
  RVec v(dim_g());
  for (int a = 0; a < dim_g(); ++a) v(a) = inner(X, basis[a]);
  return v;
}

Mat SymmetricSpaceModel::matrix(const RVec& v) const {
  Mat X = Mat::Zero(N, N);
  for (int a = 0; a < dim_g(); ++a)
    if (v(a) != 0.0) X += v(a) * basis[a];
  return X;
}

RVec SymmetricSpaceModel::bracket(const RVec& x, const RVec& y) const {
  RVec w = RVec::Zero(dim_g());
  for (int a = 0; a < dim_g(); ++a)
    if (std::abs(x(a)) > 1e-300) w += x(a) * (ad[a] * y);
  return w;
}

RMat SymmetricSpaceModel::ad_of(const RVec& x) const {
  RMat M = RMat::Zero(dim_g(), dim_g());
  for (int a = 0; a < dim_g(); ++a)
    if (std::abs(x(a)) > 1e-300) M += x(a) * ad[a];
  return M;
}

SymmetricSpaceModel SymmetricSpaceModel::rescaled(double s) const {
  SymmetricSpaceModel m = *this;
  m.c = c * s;
  const double f = 1.0 / std::sqrt(s);
  for (auto& B : m.basis) B *= f;
  for (auto& A : m.ad) A *= f;
  return m;
}

// ============================================================================
// Generator bases
// ============================================================================

std::vector<Mat> so_basis(int m) {
  std::vector<Mat> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Mat A = Mat::Zero(m, m);
      A(i, j) = 1.0;
      A(j, i) = -1.0;
      out.push_back(A);
    }
  return out;
}

std::vector<Mat> su_basis(int m) {
  std::vector<Mat> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Mat A = Mat::Zero(m, m);
      A(i, j) = 1.0;
      A(j, i) = -1.0;
      out.push_back(A);
      Mat S = Mat::Zero(m, m);
      S(i, j) = kI;
      S(j, i) = kI;
      out.push_back(S);
    }
  for (int k = 0; k + 1 < m; ++k) {
    Mat D = Mat::Zero(m, m);
    D(k, k) = kI;
    D(k + 1, k + 1) = -kI;
    out.push_back(D);
  }
  return out;
}

std::vector<Mat> sp_basis(int m) {
  // M = Z + j W with Z in u(m) and W complex symmetric.
  std::vector<Mat> out;
  auto push = [&](const Mat& Z, const Mat& W) {
    out.push_back(scalars::quat_to_complex({Z, W}));
  };
  const Mat zero = Mat::Zero(m, m);
  for (const auto& Z : su_basis(m)) push(Z, zero);
  for (int k = 0; k < m; ++k) {  // u(m) beyond su: i E_kk
    Mat Z = Mat::Zero(m, m);
    Z(k, k) = kI;
    push(Z, zero);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Mat W = Mat::Zero(m, m);
      W(i, j) = 1.0;
      W(j, i) = 1.0;
      push(zero, W);
      Mat Wi = Mat::Zero(m, m);
      Wi(i, j) = kI;
      Wi(j, i) = kI;
      push(zero, Wi);
    }
  return out;
}

std::vector<Mat> der_octonion_basis() {
  // Solve D(e_i e_j) = D(e_i) e_j + e_i D(e_j) over all basis pairs.
  // L[i], R[j]: left/right multiplication operators on the octonions.
  RMat L[8], R[8];
  for (int i = 0; i < 8; ++i) {
    L[i] = RMat::Zero(8, 8);
    R[i] = RMat::Zero(8, 8);
    for (int b = 0; b < 8; ++b)
      for (int a = 0; a < 8; ++a) {
        L[i](a, b) = scalars::oct_table(i, b, a);
        R[i](a, b) = scalars::oct_table(b, i, a);
      }
  }
  std::vector<RMat> rows;
  RMat sys(8 * 36, 64);
  int row = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i; j < 8; ++j) {
      // unknown D stored column-major: D(:,k) at columns 8k..8k+7
      RMat block = RMat::Zero(8, 64);
      for (int k = 0; k < 8; ++k) {
        const double t = scalars::oct_table(i, j, k);
        if (t != 0.0) block.middleCols(8 * k, 8) += t * RMat::Identity(8, 8);
      }
      block.middleCols(8 * i, 8) -= R[j];
      block.middleCols(8 * j, 8) -= L[i];
      sys.middleRows(row, 8) = block;
      row += 8;
    }
  RMat ns = lin::nullspace(sys, 1e-10);
  std::vector<Mat> out;
  for (int v = 0; v < ns.cols(); ++v) {
    RMat D(8, 8);
    for (int k = 0; k < 8; ++k) D.col(k) = ns.col(v).segment(8 * k, 8);
    out.push_back(D.cast<std::complex<double>>());
  }
  return out;
}

Mat double_embed(const Mat& X, int sign) {
  const int n = static_cast<int>(X.rows());
  Mat M = Mat::Zero(2 * n, 2 * n);
  M.topLeftCorner(n, n) = X;
  M.bottomRightCorner(n, n) = static_cast<double>(sign) * X;
  return M;
}

// ============================================================================
// Model assembly
// ============================================================================

namespace {

SymmetricSpaceModel assemble(const SpaceId& id, int N,
                             std::vector<Mat> raw_basis,
                             std::function<Mat(const Mat&)> theta,
                             bool group_double, int inner_N) {
  if (static_cast<int>(raw_basis.size()) > kMaxAlgebraDim)
    throw UnsupportedSpace("algebra dimension " +
                           std::to_string(raw_basis.size()) +
                           " exceeds the registry bound");
  SymmetricSpaceModel m;
  m.id = id;
  m.N = N;
  m.c = 1.0;
  m.theta = std::move(theta);
  m.group_double = group_double;
  m.inner_N = inner_N;

  // Orthonormalize w.r.t. <X,Y> = -c Re tr(XY) by Gram-Schmidt on matrices.
  std::vector<Mat> ortho;
  for (Mat X : raw_basis) {
    for (int round = 0; round < 2; ++round)
      for (const auto& B : ortho) X -= m.inner(B, X) * B;
    const double nrm = std::sqrt(std::max(0.0, m.inner(X, X)));
    if (nrm > 1e-10) ortho.push_back(X / nrm);
  }
  m.basis = std::move(ortho);
  const int d = m.dim_g();

  // theta in coordinates; +-1 eigenspaces give k and p.
  RMat T(d, d);
  for (int b = 0; b < d; ++b) {
    const RVec col = m.coords(m.theta(m.basis[b]));
    T.col(b) = col;
  }
  std::vector<RVec> kcols, pcols;
  RMat vecs;
  lin::sym_eig_real(0.5 * (T + T.transpose()), &vecs);
  Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (T + T.transpose()));
  for (int j = 0; j < d; ++j) {
    const double lam = es.eigenvalues()(j);
    if (std::abs(lam - 1.0) < 1e-7)
      kcols.push_back(es.eigenvectors().col(j));
    else if (std::abs(lam + 1.0) < 1e-7)
      pcols.push_back(es.eigenvectors().col(j));
    else
      throw Error("involution eigenvalue " + std::to_string(lam) +
                  " is not +-1 for " + id.str());
  }
  m.k_space = lin::orthonormalize(kcols);
  m.p_space = lin::orthonormalize(pcols);

  // Structure tensor.
  m.ad.assign(d, RMat::Zero(d, d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Mat C = m.basis[a] * m.basis[b] - m.basis[b] * m.basis[a];
      m.ad[a].col(b) = m.coords(C);
    }
  return m;
}

SymmetricSpaceModel build_grassmann(const SpaceId& id) {
  const int n = id.n;
  if (n < 1) throw UnsupportedSpace("Grassmann parameter must be >= 1");
  const int m = n + 2;
  if (id.family == Family::G2R) {
    Mat S = Mat::Identity(m, m);
    S(0, 0) = S(1, 1) = -1.0;
    return assemble(id, m, so_basis(m),
                    [S](const Mat& X) { return Mat(S * X * S); }, false, 0);
  }
  if (id.family == Family::G2C) {
    Mat S = Mat::Identity(m, m);
    S(0, 0) = S(1, 1) = -1.0;
    return assemble(id, m, su_basis(m),
                    [S](const Mat& X) { return Mat(S * X * S); }, false, 0);
  }
  // G2H: signature matrix diag(-1,-1,1,..,1) over H, realized block-diagonally.
  Mat s = Mat::Identity(m, m);
  s(0, 0) = s(1, 1) = -1.0;
  Mat S = Mat::Zero(2 * m, 2 * m);
  S.topLeftCorner(m, m) = s;
  S.bottomRightCorner(m, m) = s;
  return assemble(id, 2 * m, sp_basis(m),
                  [S](const Mat& X) { return Mat(S * X * S); }, false, 0);
}

SymmetricSpaceModel build_single(const SpaceId& id) {
  switch (id.family) {
    case Family::AI:
      return assemble(id, 3, su_basis(3),
                      [](const Mat& X) { return Mat(X.conjugate()); }, false, 0);
    case Family::AII: {
      Mat J = Mat::Zero(6, 6);
      J.topRightCorner(3, 3) = -Mat::Identity(3, 3);
      J.bottomLeftCorner(3, 3) = Mat::Identity(3, 3);
      return assemble(id, 6, su_basis(6),
                      [J](const Mat& X) { return Mat(J * X.conjugate() * J.inverse()); },
                      false, 0);
    }
    case Family::DIII: {
      // J = block-diagonal 2x2 rotations.
      Mat J = Mat::Zero(10, 10);
      for (int k = 0; k < 5; ++k) {
        J(2 * k, 2 * k + 1) = -1.0;
        J(2 * k + 1, 2 * k) = 1.0;
      }
      return assemble(id, 10, so_basis(10),
                      [J](const Mat& X) { return Mat(J * X * J.inverse()); },
                      false, 0);
    }
    case Family::GI: {
      Mat g = Mat::Identity(8, 8);
      for (int i = 4; i < 8; ++i) g(i, i) = -1.0;
      return assemble(id, 8, der_octonion_basis(),
                      [g](const Mat& X) { return Mat(g * X * g); }, false, 0);
    }
    default:
      break;
  }
  // Group doubles (g + g, theta = swap), p = {(X, -X)}.
  std::vector<Mat> inner;
  int n = 0;
  if (id.family == Family::GrpSU3) {
    inner = su_basis(3);
    n = 3;
  } else if (id.family == Family::GrpSp2) {
    inner = sp_basis(2);
    n = 4;
  } else if (id.family == Family::GrpG2) {
    inner = der_octonion_basis();
    n = 8;
  } else {
    throw UnsupportedSpace(id.str());
  }
  std::vector<Mat> raw;
  for (const auto& X : inner) {
    Mat A = Mat::Zero(2 * n, 2 * n);
    A.topLeftCorner(n, n) = X;
    raw.push_back(A);
    Mat B = Mat::Zero(2 * n, 2 * n);
    B.bottomRightCorner(n, n) = X;
    raw.push_back(B);
  }
  auto swap_blocks = [n](const Mat& X) {
    Mat Y = Mat::Zero(2 * n, 2 * n);
    Y.topLeftCorner(n, n) = X.bottomRightCorner(n, n);
    Y.bottomRightCorner(n, n) = X.topLeftCorner(n, n);
    return Y;
  };
  return assemble(id, 2 * n, raw, swap_blocks, true, n);
}

}  // namespace

ModelPtr build_space(const SpaceId& id) {
  static std::map<std::string, ModelPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id.str());
  if (it != cache.end()) return it->second;
  auto model = std::make_shared<SymmetricSpaceModel>(
      id.grassmann() ? build_grassmann(id) : build_single(id));
  cache[id.str()] = model;
  return model;
}

double family_star_scale(Family f) {
  static std::map<Family, double> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(f);
  if (it != cache.end()) return it->second;
  // Reference root from a large instance: at n = 6 the generic shortest
  // root is present for all three families, and its length at c = 1 does
  // not depend on n (the trace form restricts consistently).
  const ModelPtr big = build_space(SpaceId{f, 6});
  const double len = roots::min_root_length(big);
  const double scale = len * len;  // root lengths scale as 1/sqrt(c)
  cache[f] = scale;
  return scale;
}

ModelPtr normalize_metric(const ModelPtr& model, Convention conv) {
  if (conv == Convention::Srr1Star && !model->id.grassmann())
    throw NotApplicable("srr1star applies to the Grassmann families only");
  double scale = 1.0;
  if (conv == Convention::Srr1) {
    const double len = roots::min_root_length(model);
    scale = len * len;
  } else {
    scale = family_star_scale(model->id.family) / model->c;
  }
  return std::make_shared<SymmetricSpaceModel>(model->rescaled(scale));
}

ModelPtr normalized_default(const SpaceId& id) {
  static std::map<std::string, ModelPtr> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id.str());
    if (it != cache.end()) return it->second;
  }
  ModelPtr m = build_space(id);
  m = normalize_metric(m, id.grassmann() ? Convention::Srr1Star
                                         : Convention::Srr1);
  std::lock_guard<std::mutex> lock(mu);
  cache[id.str()] = m;
  return m;
}

}  // namespace totgeo::sym
