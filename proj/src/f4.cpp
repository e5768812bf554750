#include "f4_internal.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace wallach {

namespace {

// kernel of A^t A below tol_rel * lambda_max, eigenvectors as rows
struct KernelSplit {
  Eigen::MatrixXd kernel;   // rows spanning the kernel
  Eigen::MatrixXd regular;  // rows spanning the complement
  double gap = 0.0;
};

KernelSplit kernel_split(const Eigen::MatrixXd& G, double tol_rel) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double lmax = ev[ev.size() - 1];
  const double thresh = tol_rel * std::max(lmax, 1.0);
  int nk = 0;
  while (nk < ev.size() && ev[nk] < thresh) ++nk;
  KernelSplit ks;
  ks.kernel = es.eigenvectors().leftCols(nk).transpose();
  ks.regular = es.eigenvectors().rightCols(ev.size() - nk).transpose();
  ks.gap = nk < ev.size() ? ev[nk] / std::max(lmax, 1e-300) : 1.0;
  return ks;
}

}  // namespace

const std::vector<DerMat>& g2_basis() {
  static const std::vector<DerMat> basis = [] {
    // Solve D(e_a e_b) = D(e_a) e_b + e_a D(e_b) for D on Im(Ca), D(1) = 0.
    // Unknowns D_{p,q}, p,q in 1..7, flattened as 7(p-1)+(q-1).
    auto idx = [](int p, int q) { return 7 * (p - 1) + (q - 1); };
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(49, 49);
    std::vector<std::pair<int, double>> row;
    for (int a = 1; a < 8; ++a) {
      for (int b = 1; b < 8; ++b) {
        for (int p = 0; p < 8; ++p) {
          row.clear();
          if (p == 0) {
            // real component: forces skewness
            row.push_back({idx(b, a), 1.0});
            row.push_back({idx(a, b), 1.0});
          } else {
            const UnitProduct& ab = unit_product(a, b);
            if (ab.index != 0) row.push_back({idx(p, ab.index), double(ab.sign)});
            for (int q = 1; q < 8; ++q) {
              const UnitProduct& qb = unit_product(q, b);
              if (qb.index == p) row.push_back({idx(q, a), -double(qb.sign)});
              const UnitProduct& aq = unit_product(a, q);
              if (aq.index == p) row.push_back({idx(q, b), -double(aq.sign)});
            }
          }
          for (const auto& [i1, v1] : row)
            for (const auto& [i2, v2] : row) G(i1, i2) += v1 * v2;
        }
      }
    }
    KernelSplit ks = kernel_split(G, 1e-9);
    if (ks.kernel.rows() != 14) throw std::logic_error("dim der(Ca) != 14");
    std::vector<DerMat> out;
    for (int k = 0; k < 14; ++k) {
      DerMat d;
      for (int p = 1; p < 8; ++p)
        for (int q = 1; q < 8; ++q) d(p - 1, q - 1) = ks.kernel(k, idx(p, q));
      // eigenvector rows satisfy tr(D E^t) = delta; rescale to Q-orthonormal
      out.push_back(std::sqrt(8.0) * d);
    }
    return out;
  }();
  return basis;
}

namespace detail {

namespace {

constexpr int kJDim = 27;
constexpr int kVec = kJDim * kJDim;

int jidx_diag(int p) { return p; }
int jidx_off(int slot, int u) { return 3 + 8 * slot + u; }

// Hermitian matrix <-> orthonormal coordinates (diagonal units, and
// off-diagonal units scaled by 1/sqrt(2)).
Eigen::VectorXd coords_of_hermitian(const Mat3& H) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(kJDim);
  for (int p = 0; p < 3; ++p) c[jidx_diag(p)] = H.at(p, p)[0];
  const double s2 = std::sqrt(2.0);
  for (int r = 0; r < 3; ++r) {
    const AlgElem& x = H.at((r + 1) % 3, (r + 2) % 3);
    for (int u = 0; u < 8; ++u) c[jidx_off(r, u)] = s2 * x[u];
  }
  return c;
}

// componentwise action of an octonion derivation on h3(Ca)
Eigen::MatrixXd hat_der(const DerMat& d) {
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(kJDim, kJDim);
  for (int r = 0; r < 3; ++r)
    for (int u = 1; u < 8; ++u)
      for (int v = 1; v < 8; ++v) D(jidx_off(r, u), jidx_off(r, v)) = d(u - 1, v - 1);
  return D;
}

Eigen::VectorXd vec_of(const Eigen::MatrixXd& D) {
  Eigen::VectorXd v(kVec);
  for (int r = 0; r < kJDim; ++r)
    for (int c = 0; c < kJDim; ++c) v[kJDim * r + c] = D(r, c);
  return v;
}

Eigen::MatrixXd mat_of(const Eigen::VectorXd& v) {
  Eigen::MatrixXd D(kJDim, kJDim);
  for (int r = 0; r < kJDim; ++r)
    for (int c = 0; c < kJDim; ++c) D(r, c) = v[kJDim * r + c];
  return D;
}

Eigen::MatrixXd inverse_sqrt(const Eigen::MatrixXd& T) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  const Eigen::VectorXd& ev = es.eigenvalues();
  if (ev[0] < 1e-10 * ev[ev.size() - 1])
    throw std::logic_error("degenerate Gram matrix in sa3 embedding");
  return es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace

Mat3 F4Context::generator(int k) const {
  const AlgebraTag t = kOctonion;
  Mat3 m(t);
  if (k < 24) {
    const int slot = k / 8, u = k % 8;
    const AlgElem e = AlgElem::unit(t, u);
    m.at((slot + 1) % 3, (slot + 2) % 3) = e;
    m.at((slot + 2) % 3, (slot + 1) % 3) = -conjugate(e);
  } else if (k < 31) {
    const AlgElem e = AlgElem::unit(t, k - 24 + 1);
    m.at(0, 0) = e;
    m.at(1, 1) = -e;
  } else {
    const AlgElem e = AlgElem::unit(t, k - 31 + 1);
    const double c = 1.0 / std::sqrt(3.0);
    m.at(0, 0) = c * e;
    m.at(1, 1) = c * e;
    m.at(2, 2) = -2.0 * c * e;
  }
  return m;
}

F4Context::F4Context() {
  // ---- exceptional Jordan algebra basis and product table -------------------
  std::array<Mat3, kJDim> jb;
  for (int p = 0; p < 3; ++p) {
    Mat3 m(kOctonion);
    m.at(p, p)[0] = 1.0;
    jb[static_cast<std::size_t>(jidx_diag(p))] = m;
  }
  const double is2 = 1.0 / std::sqrt(2.0);
  for (int r = 0; r < 3; ++r)
    for (int u = 0; u < 8; ++u) {
      Mat3 m(kOctonion);
      const AlgElem e = is2 * AlgElem::unit(kOctonion, u);
      m.at((r + 1) % 3, (r + 2) % 3) = e;
      m.at((r + 2) % 3, (r + 1) % 3) = conjugate(e);
      jb[static_cast<std::size_t>(jidx_off(r, u))] = m;
    }

  using SpVec = std::vector<std::pair<int, double>>;
  std::vector<SpVec> jp(kJDim * kJDim);             // x_i o x_j
  std::vector<SpVec> jpt(kJDim * kJDim);            // for fixed (j,p): (q, (x_q o x_j)_p)
  for (int i = 0; i < kJDim; ++i)
    for (int j = 0; j < kJDim; ++j) {
      const Mat3 prod = 0.5 * (mat_mul(jb[static_cast<std::size_t>(i)], jb[static_cast<std::size_t>(j)]) +
                               mat_mul(jb[static_cast<std::size_t>(j)], jb[static_cast<std::size_t>(i)]));
      const Eigen::VectorXd c = coords_of_hermitian(prod);
      for (int p = 0; p < kJDim; ++p)
        if (std::abs(c[p]) > 1e-14) {
          jp[static_cast<std::size_t>(kJDim * i + j)].push_back({p, c[p]});
          jpt[static_cast<std::size_t>(kJDim * j + p)].push_back({i, c[p]});
        }
    }

  // ---- derivation system: D(x_i o x_j) = D(x_i) o x_j + x_i o D(x_j) --------
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(kVec, kVec);
  {
    std::vector<std::pair<int, double>> row;
    std::vector<double> acc(kVec, 0.0);
    std::vector<int> touched;
    for (int i = 0; i < kJDim; ++i)
      for (int j = i; j < kJDim; ++j)
        for (int p = 0; p < kJDim; ++p) {
          auto add = [&](int unknown, double v) {
            if (acc[static_cast<std::size_t>(unknown)] == 0.0) touched.push_back(unknown);
            acc[static_cast<std::size_t>(unknown)] += v;
          };
          for (const auto& [c, v] : jp[static_cast<std::size_t>(kJDim * i + j)]) add(kJDim * p + c, v);
          for (const auto& [q, v] : jpt[static_cast<std::size_t>(kJDim * j + p)]) add(kJDim * q + i, -v);
          for (const auto& [q, v] : jpt[static_cast<std::size_t>(kJDim * i + p)]) add(kJDim * q + j, -v);
          row.clear();
          for (int t : touched) {
            if (acc[static_cast<std::size_t>(t)] != 0.0) row.push_back({t, acc[static_cast<std::size_t>(t)]});
            acc[static_cast<std::size_t>(t)] = 0.0;
          }
          touched.clear();
          for (const auto& [i1, v1] : row)
            for (const auto& [i2, v2] : row) G(i1, i2) += v1 * v2;
        }
  }
  KernelSplit ks = kernel_split(G, 1e-9);
  if (ks.kernel.rows() != 52) throw std::logic_error("dim der(h3(Ca)) != 52");
  der_onb_ = ks.kernel;
  kernel_gap_ = ks.gap;

  // ---- g2 inside der(J) ------------------------------------------------------
  g2q_ = g2_basis();
  g2hat_.resize(14, kVec);
  const double isqrt24 = 1.0 / std::sqrt(24.0);
  for (int k = 0; k < 14; ++k) {
    const Eigen::VectorXd v = vec_of(hat_der(g2q_[static_cast<std::size_t>(k)])) * isqrt24;
    const Eigen::VectorXd res = v - der_onb_.transpose() * (der_onb_ * v);
    if (res.norm() > 1e-8) throw std::logic_error("g2 does not embed in der(h3(Ca))");
    g2hat_.row(k) = v;
  }

  // ---- isotropy subalgebra: derivations killing the diagonal idempotents ----
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(81, 52);
  for (int p = 0; p < 3; ++p)
    for (int t = 0; t < kJDim; ++t)
      for (int k = 0; k < 52; ++k) B(27 * p + t, k) = der_onb_(k, kJDim * t + p);
  KernelSplit iso = kernel_split(B.transpose() * B, 1e-9);
  dim_h_ = static_cast<int>(iso.kernel.rows());
  if (dim_h_ != 28) throw std::logic_error("isotropy subalgebra of W24 is not 28-dimensional");

  const Eigen::MatrixXd Sm = iso.regular * der_onb_;   // 24 x 729, the V1+V2+V3 image
  Eigen::MatrixXd Hfull = iso.kernel * der_onb_;       // 28 x 729

  // orthocomplement of g2 inside the isotropy algebra (diagonal sa3 part)
  Eigen::MatrixXd Hd(14, kVec);
  {
    int got = 0;
    for (int k = 0; k < Hfull.rows() && got < 14; ++k) {
      Eigen::VectorXd v = Hfull.row(k).transpose();
      v -= g2hat_.transpose() * (g2hat_ * v);
      for (int t = 0; t < got; ++t) v -= Hd.row(t).transpose() * (Hd.row(t) * v);
      const double n = v.norm();
      if (n > 1e-6) Hd.row(got++) = v.transpose() / n;
    }
    if (got != 14) throw std::logic_error("diagonal part of the isotropy algebra is not 14-dimensional");
  }

  // ---- sa3 generators: project ad_a onto the matching invariant subspace ----
  auto ad_of = [&](const Mat3& a) {
    Eigen::MatrixXd A(kJDim, kJDim);
    for (int i = 0; i < kJDim; ++i)
      A.col(i) = coords_of_hermitian(mat_mul(a, jb[static_cast<std::size_t>(i)]) -
                                     mat_mul(jb[static_cast<std::size_t>(i)], a));
    return A;
  };

  auto build_block = [&](int first, int count, const Eigen::MatrixXd& span) {
    Eigen::MatrixXd psi(kVec, count);
    for (int k = 0; k < count; ++k) {
      const Eigen::VectorXd v = vec_of(ad_of(generator(first + k)));
      psi.col(k) = span.transpose() * (span * v);
    }
    const Eigen::MatrixXd T = psi.transpose() * psi / 24.0;
    return Eigen::MatrixXd(psi * inverse_sqrt(T));
  };

  phi_.resize(kVec, 38);
  phi_.leftCols(24) = build_block(0, 24, Sm);
  phi_.rightCols(14) = build_block(24, 14, Hd);

  // ---- orient the labels against the classical chain ------------------------
  auto der_of_gen = [&](int k) { return mat_of(phi_.col(k)); };
  auto coeff = [&](const Eigen::MatrixXd& C, int k) { return vec_of(C).dot(phi_.col(k)) / 24.0; };
  auto comm = [](const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
    return Eigen::MatrixXd(X * Y - Y * X);
  };

  // [1_2, 1_3] = -1_1 fixes the sign of the real-unit columns
  const double ta = coeff(comm(der_of_gen(8 * 1 + 0), der_of_gen(8 * 2 + 0)), 8 * 0 + 0);
  if (std::abs(std::abs(ta) - 1.0) > 1e-6) throw std::logic_error("W24 bracket: unexpected [1_2,1_3]");
  if (ta > 0)
    for (int slot = 0; slot < 3; ++slot) phi_.col(8 * slot + 0) *= -1.0;

  // [i_2, j_3] = +k_1 fixes the common sign of the imaginary-unit columns
  const double tb = coeff(comm(der_of_gen(8 * 1 + 1), der_of_gen(8 * 2 + 2)), 8 * 0 + 3);
  if (std::abs(std::abs(tb) - 1.0) > 1e-6) throw std::logic_error("W24 bracket: unexpected [i_2,j_3]");
  if (tb < 0)
    for (int slot = 0; slot < 3; ++slot)
      for (int u = 1; u < 8; ++u) phi_.col(8 * slot + u) *= -1.0;

  // [1_1, i_1] = diag(0,2i,-2i) fixes the sign of the diagonal columns
  const double tc = coeff(comm(der_of_gen(0), der_of_gen(1)), 24);
  if (std::abs(std::abs(tc) - 1.0) > 1e-6) throw std::logic_error("W24 bracket: unexpected [1_1,i_1]");
  if (tc > 0)
    for (int k = 24; k < 38; ++k) phi_.col(k) *= -1.0;
}

const F4Context& F4Context::get() {
  static const F4Context ctx;
  return ctx;
}

Eigen::MatrixXd F4Context::to_derivation(const Mat3& sa3_part, const DerMat& g2_part) const {
  // coordinates over the 38 sa3 generators
  Eigen::VectorXd genc = Eigen::VectorXd::Zero(38);
  for (int slot = 0; slot < 3; ++slot) {
    const AlgElem& x = sa3_part.at((slot + 1) % 3, (slot + 2) % 3);
    for (int u = 0; u < 8; ++u) genc[8 * slot + u] = x[u];
  }
  const AlgElem& d0 = sa3_part.at(0, 0);
  const AlgElem& d1 = sa3_part.at(1, 1);
  const AlgElem& d2 = sa3_part.at(2, 2);
  if (std::abs(d0[0]) + std::abs(d1[0]) + std::abs(d2[0]) > 1e-9)
    throw std::invalid_argument("sa3 part must have imaginary diagonal");
  // diagonal coordinates against the Q-orthonormal pair
  // f1_t = diag(e_t,-e_t,0) and f2_t = diag(e_t,e_t,-2e_t)/sqrt(3)
  const double s3 = std::sqrt(3.0);
  for (int t = 1; t < 8; ++t) {
    if (std::abs(d0[t] + d1[t] + d2[t]) > 1e-9)
      throw std::invalid_argument("sa3 part must be traceless");
    genc[24 + t - 1] = 0.5 * (d0[t] - d1[t]);
    genc[31 + t - 1] = 0.5 * ((d0[t] + d1[t]) / s3 - 2.0 * d2[t] / s3);
  }
  Eigen::MatrixXd D = mat_of(phi_ * genc);
  if (g2_part.cwiseAbs().maxCoeff() > 0.0) D += hat_der(g2_part);
  return D;
}

void F4Context::decompose(const Eigen::MatrixXd& C, Mat3* sa3_part, DerMat* g2_part) const {
  const Eigen::VectorXd v = vec_of(C);
  const Eigen::VectorXd gamma = g2hat_ * v;
  const Eigen::VectorXd sigma = phi_.transpose() * v / 24.0;
  const Eigen::VectorXd recon = phi_ * sigma + g2hat_.transpose() * gamma;
  if ((v - recon).norm() > 1e-7 * (1.0 + v.norm()))
    throw std::invalid_argument("matrix is not an element of f4");

  Mat3 m(kOctonion);
  for (int k = 0; k < 38; ++k)
    if (sigma[k] != 0.0) m = m + sigma[k] * generator(k);
  DerMat d = DerMat::Zero();
  const double isqrt24 = 1.0 / std::sqrt(24.0);
  for (int k = 0; k < 14; ++k)
    if (gamma[k] != 0.0) d += gamma[k] * isqrt24 * g2q_[static_cast<std::size_t>(k)];
  *sa3_part = m;
  *g2_part = d;
}

}  // namespace detail
}  // namespace wallach
