#include "wallach/lie.hpp"

#include "f4_internal.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace wallach {

AlgebraTag model_algebra(ModelName m) {
  switch (m) {
    case ModelName::W3: return kReal;
    case ModelName::W6: return kComplex;
    case ModelName::W12: return kQuaternion;
    case ModelName::W24: return kOctonion;
  }
  throw std::logic_error("bad model");
}

const char* model_label(ModelName m) {
  switch (m) {
    case ModelName::W3: return "W3";
    case ModelName::W6: return "W6";
    case ModelName::W12: return "W12";
    case ModelName::W24: return "W24";
  }
  throw std::logic_error("bad model");
}

ModelName parse_model(const std::string& name) {
  if (name == "W3" || name == "w3") return ModelName::W3;
  if (name == "W6" || name == "w6") return ModelName::W6;
  if (name == "W12" || name == "w12") return ModelName::W12;
  if (name == "W24" || name == "w24") return ModelName::W24;
  throw std::invalid_argument("unknown model '" + name + "' (expected W3, W6, W12 or W24)");
}

Mat3 operator+(const Mat3& x, const Mat3& y) {
  Mat3 r(x.tag);
  for (int t = 0; t < 9; ++t) r.e[t] = x.e[t] + y.e[t];
  return r;
}

Mat3 operator-(const Mat3& x, const Mat3& y) {
  Mat3 r(x.tag);
  for (int t = 0; t < 9; ++t) r.e[t] = x.e[t] - y.e[t];
  return r;
}

Mat3 operator*(double a, const Mat3& x) {
  Mat3 r(x.tag);
  for (int t = 0; t < 9; ++t) r.e[t] = a * x.e[t];
  return r;
}

Mat3 mat_mul(const Mat3& x, const Mat3& y) {
  Mat3 r(x.tag);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      AlgElem acc(x.tag);
      for (int t = 0; t < 3; ++t) acc = acc + multiply(x.at(i, t), y.at(t, j));
      r.at(i, j) = acc;
    }
  return r;
}

Mat3 conj_transpose(const Mat3& x) {
  Mat3 r(x.tag);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = conjugate(x.at(j, i));
  return r;
}

Mat3 commutator(const Mat3& x, const Mat3& y) {
  return mat_mul(x, y) - mat_mul(y, x);
}

double mat_dot(const Mat3& x, const Mat3& y) {
  double s = 0;
  for (int t = 0; t < 9; ++t)
    for (int u = 0; u < x.tag.dim(); ++u) s += x.e[t][u] * y.e[t][u];
  return s;
}

double mat_norm(const Mat3& x) {
  return std::sqrt(mat_dot(x, x));
}

GVector embed_m(const MVector& v) {
  GVector g(v.model);
  for (int r = 0; r < 3; ++r) {
    const int p1 = (r + 1) % 3, p2 = (r + 2) % 3;
    g.mat.at(p1, p2) = v.x[static_cast<std::size_t>(r)];
    g.mat.at(p2, p1) = -conjugate(v.x[static_cast<std::size_t>(r)]);
  }
  return g;
}

double q_inner(const GVector& X, const GVector& Y) {
  if (X.model != Y.model) throw std::invalid_argument("q_inner: model mismatch");
  // (1/2) Re tr(M N*) equals half the entrywise coefficient dot for all four
  // algebras; for f4 the g2 component adds (1/8) tr(D E^t).
  double q = 0.5 * mat_dot(X.mat, Y.mat);
  if (X.model == ModelName::W24) q += 0.125 * (X.der.cwiseProduct(Y.der)).sum();
  return q;
}

GVector bracket(const GVector& X, const GVector& Y) {
  if (X.model != Y.model) throw std::invalid_argument("bracket: model mismatch");
  GVector r(X.model);
  if (X.model == ModelName::W24) {
    const auto& ctx = detail::F4Context::get();
    const Eigen::MatrixXd C = ctx.to_derivation(X.mat, X.der) * ctx.to_derivation(Y.mat, Y.der) -
                              ctx.to_derivation(Y.mat, Y.der) * ctx.to_derivation(X.mat, X.der);
    ctx.decompose(C, &r.mat, &r.der);
  } else {
    r.mat = commutator(X.mat, Y.mat);
  }
  return r;
}

MVector project_m(const GVector& X) {
  MVector v(X.model);
  for (int r = 0; r < 3; ++r) v.x[static_cast<std::size_t>(r)] = X.mat.at((r + 1) % 3, (r + 2) % 3);
  return v;
}

GVector project_h(const GVector& X) {
  GVector h(X.model);
  for (int p = 0; p < 3; ++p) h.mat.at(p, p) = X.mat.at(p, p);
  h.der = X.der;
  return h;
}

namespace {

AlgElem imag_unit(AlgebraTag t, int u) { return AlgElem::unit(t, u); }

Mat3 diag_mat(AlgebraTag t, const AlgElem& d0, const AlgElem& d1, const AlgElem& d2) {
  Mat3 m(t);
  m.at(0, 0) = d0;
  m.at(1, 1) = d1;
  m.at(2, 2) = d2;
  return m;
}

}  // namespace

std::vector<GVector> h_basis(ModelName m) {
  std::vector<GVector> out;
  const AlgebraTag t = model_algebra(m);
  switch (m) {
    case ModelName::W3:
      break;
    case ModelName::W6: {
      // traceless imaginary diagonals of su(3), Q-orthonormalized
      GVector h1(m), h2(m);
      const AlgElem i = imag_unit(t, 1);
      h1.mat = diag_mat(t, i, -i, AlgElem(t));
      const double c = 1.0 / std::sqrt(3.0);
      h2.mat = c * diag_mat(t, i, i, -2.0 * i);
      out = {h1, h2};
      break;
    }
    case ModelName::W12: {
      // sp(1)^3: imaginary quaternion diagonals, position-major
      const double c = std::sqrt(2.0);
      for (int p = 0; p < 3; ++p)
        for (int u = 1; u <= 3; ++u) {
          GVector h(m);
          h.mat.at(p, p) = c * imag_unit(t, u);
          out.push_back(h);
        }
      break;
    }
    case ModelName::W24: {
      // traceless imaginary octonion diagonals (14) followed by g2 (14)
      for (int u = 1; u < 8; ++u) {
        GVector h(m);
        const AlgElem e = imag_unit(t, u);
        h.mat = diag_mat(t, e, -e, AlgElem(t));
        out.push_back(h);
      }
      for (int u = 1; u < 8; ++u) {
        GVector h(m);
        const AlgElem e = imag_unit(t, u);
        h.mat = (1.0 / std::sqrt(3.0)) * diag_mat(t, e, e, -2.0 * e);
        out.push_back(h);
      }
      for (const DerMat& d : g2_basis()) {
        GVector h(m);
        h.der = d;
        out.push_back(h);
      }
      break;
    }
  }
  return out;
}

Eigen::VectorXd m_coords(const MVector& v) {
  const int d = model_algebra(v.model).dim();
  Eigen::VectorXd c(3 * d);
  for (int r = 0; r < 3; ++r)
    for (int u = 0; u < d; ++u) c[r * d + u] = v.x[static_cast<std::size_t>(r)][u];
  return c;
}

MVector m_from_coords(ModelName m, const Eigen::VectorXd& c) {
  const int d = model_algebra(m).dim();
  if (c.size() != 3 * d) throw std::invalid_argument("m_from_coords: bad length");
  MVector v(m);
  for (int r = 0; r < 3; ++r)
    for (int u = 0; u < d; ++u) v.x[static_cast<std::size_t>(r)][u] = c[r * d + u];
  return v;
}

Eigen::VectorXd g_coords(const GVector& X) {
  const Model& mdl = Model::get(X.model);
  Eigen::VectorXd c(mdl.dim_g());
  for (int k = 0; k < mdl.dim_g(); ++k) c[k] = q_inner(X, mdl.basis(k));
  return c;
}

Model::Model(ModelName name) : name_(name), algebra_(model_algebra(name)) {
  dim_m_ = 3 * algebra_.dim();
  for (int slot = 0; slot < 3; ++slot)
    for (int u = 0; u < algebra_.dim(); ++u)
      basis_.push_back(embed_m(MVector::unit(name, slot, u)));
  for (const GVector& h : h_basis(name)) basis_.push_back(h);
  dim_g_ = static_cast<int>(basis_.size());
  dim_h_ = dim_g_ - dim_m_;

  struct Dims {
    int g, h;
  };
  const Dims expect = name == ModelName::W3    ? Dims{3, 0}
                      : name == ModelName::W6  ? Dims{8, 2}
                      : name == ModelName::W12 ? Dims{21, 9}
                                               : Dims{52, 28};
  if (dim_g_ != expect.g || dim_h_ != expect.h) throw std::logic_error("model dimension mismatch");

  // Gram check: the basis must be Q-orthonormal.
  for (int i = 0; i < dim_g_; ++i)
    for (int j = i; j < dim_g_; ++j) {
      const double q = q_inner(basis_[static_cast<std::size_t>(i)], basis_[static_cast<std::size_t>(j)]);
      if (std::abs(q - (i == j ? 1.0 : 0.0)) > 1e-12)
        throw std::logic_error("model basis is not Q-orthonormal");
    }

  rows_.reserve(static_cast<std::size_t>(dim_g_ * (dim_g_ - 1) / 2));
  for (int i = 0; i < dim_g_; ++i)
    for (int j = i + 1; j < dim_g_; ++j) {
      const GVector br = bracket(basis_[static_cast<std::size_t>(i)], basis_[static_cast<std::size_t>(j)]);
      Eigen::VectorXd c(dim_g_);
      for (int k = 0; k < dim_g_; ++k) c[k] = q_inner(br, basis_[static_cast<std::size_t>(k)]);
      // closure: Parseval residual of the expansion
      const double resid = q_inner(br, br) - c.squaredNorm();
      if (std::abs(resid) > 1e-8) throw std::logic_error("bracket does not close on the model basis");
      rows_.push_back(std::move(c));
    }
}

const Model& Model::get(ModelName name) {
  static std::map<ModelName, Model> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, Model(name)).first;
  return it->second;
}

const Eigen::VectorXd& Model::bracket_row(int i, int j) const {
  return rows_[static_cast<std::size_t>(pair_rank(i, j))];
}

Eigen::VectorXd Model::bracket_coords(int i, int j) const {
  if (i == j) return Eigen::VectorXd::Zero(dim_g_);
  if (i < j) return bracket_row(i, j);
  return -bracket_row(j, i);
}

Eigen::VectorXd Model::bracket_vec(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  Eigen::VectorXd xx = x, yy = y;
  if (xx.size() < dim_g_) {
    xx = Eigen::VectorXd::Zero(dim_g_);
    xx.head(x.size()) = x;
  }
  if (yy.size() < dim_g_) {
    yy = Eigen::VectorXd::Zero(dim_g_);
    yy.head(y.size()) = y;
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_g_);
  for (int i = 0; i < dim_g_; ++i)
    for (int j = i + 1; j < dim_g_; ++j) {
      const double w = xx[i] * yy[j] - xx[j] * yy[i];
      if (w != 0.0) out += w * bracket_row(i, j);
    }
  return out;
}

Eigen::MatrixXd Model::ad_on_m(const Eigen::VectorXd& h) const {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim_m_, dim_m_);
  Eigen::VectorXd hh = Eigen::VectorXd::Zero(dim_g_);
  hh.head(h.size()) = h;
  for (int j = 0; j < dim_m_; ++j) {
    Eigen::VectorXd ej = Eigen::VectorXd::Zero(dim_g_);
    ej[j] = 1.0;
    A.col(j) = bracket_vec(hh, ej).head(dim_m_);
  }
  return A;
}

void Model::write_structure_csv(std::ostream& os) const {
  os << "i,j,k,value\n";
  char buf[64];
  for (int i = 0; i < dim_g_; ++i)
    for (int j = i + 1; j < dim_g_; ++j) {
      const Eigen::VectorXd& row = bracket_row(i, j);
      for (int k = 0; k < dim_g_; ++k) {
        if (std::abs(row[k]) < 1e-12) continue;
        std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.17g\n", i, j, k, row[k]);
        os << buf;
      }
    }
}

}  // namespace wallach
