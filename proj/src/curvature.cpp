#include "wallach/curvature.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace wallach {

MetricParams::MetricParams(double a, double b, double c) : s1(a), s2(b), s3(c) {
  if (!(s1 > 0.0) || !(s2 > 0.0) || !(s3 > 0.0))
    throw std::invalid_argument("metric parameters must be positive");
  const double mx = std::max({s1, s2, s3});
  if (std::min({s1, s2, s3}) < 1e-6 * mx)
    throw std::invalid_argument("metric parameters are degenerate");
}

MVector p_apply(const MetricParams& s, const MVector& v) {
  MVector r = v;
  for (int slot = 0; slot < 3; ++slot) r.x[static_cast<std::size_t>(slot)] = s.at(slot) * r.x[static_cast<std::size_t>(slot)];
  return r;
}

MVector p_inverse(const MetricParams& s, const MVector& v) {
  MVector r = v;
  for (int slot = 0; slot < 3; ++slot) r.x[static_cast<std::size_t>(slot)] = (1.0 / s.at(slot)) * r.x[static_cast<std::size_t>(slot)];
  return r;
}

GVector b_plus(const MetricParams& s, const MVector& X, const MVector& Y) {
  const GVector a = bracket(embed_m(X), embed_m(p_apply(s, Y)));
  const GVector b = bracket(embed_m(p_apply(s, X)), embed_m(Y));
  GVector r(X.model);
  r.mat = 0.5 * (a.mat - b.mat);
  r.der = 0.5 * (a.der - b.der);
  return r;
}

GVector b_minus(const MetricParams& s, const MVector& X, const MVector& Y) {
  const GVector a = bracket(embed_m(X), embed_m(p_apply(s, Y)));
  const GVector b = bracket(embed_m(p_apply(s, X)), embed_m(Y));
  GVector r(X.model);
  r.mat = 0.5 * (a.mat + b.mat);
  r.der = 0.5 * (a.der + b.der);
  return r;
}

namespace {

// Entry <R(ê_a ^ ê_b), ê_c ^ ê_d> of the curvature operator in the
// g-orthonormal wedge frame.  All five terms of the algebraic formula reduce
// to weighted dots of precomputed structure-constant rows.
struct Assembler {
  const Model& mdl;
  MetricParams s;
  Eigen::VectorXd pi;      // metric eigenvalue per m index
  Eigen::VectorXd pi_inv;  // inverse per m index

  Assembler(ModelName model, const MetricParams& sp) : mdl(Model::get(model)), s(sp) {
    pi.resize(mdl.dim_m());
    pi_inv.resize(mdl.dim_m());
    for (int a = 0; a < mdl.dim_m(); ++a) {
      pi[a] = s.at(mdl.slot_of(a));
      pi_inv[a] = 1.0 / pi[a];
    }
  }

  // signed structure rows: [e_i, e_j] with arbitrary order
  double row_dot(int i, int j, int k, int l) const {
    double sgn = 1.0;
    if (i > j) {
      std::swap(i, j);
      sgn = -sgn;
    }
    if (k > l) {
      std::swap(k, l);
      sgn = -sgn;
    }
    if (i == j || k == l) return 0.0;
    return sgn * mdl.bracket_row(i, j).dot(mdl.bracket_row(k, l));
  }

  // weighted m-part dot: sum_t w_t [e_i,e_j]^t [e_k,e_l]^t over t in m
  double row_dot_m(int i, int j, int k, int l, const Eigen::VectorXd& w) const {
    double sgn = 1.0;
    if (i > j) {
      std::swap(i, j);
      sgn = -sgn;
    }
    if (k > l) {
      std::swap(k, l);
      sgn = -sgn;
    }
    if (i == j || k == l) return 0.0;
    const Eigen::VectorXd& u = mdl.bracket_row(i, j);
    const Eigen::VectorXd& v = mdl.bracket_row(k, l);
    double acc = 0.0;
    for (int t = 0; t < mdl.dim_m(); ++t) acc += w[t] * u[t] * v[t];
    return sgn * acc;
  }

  double entry(int a, int b, int c, int d) const {
    const double pa = pi[a], pb = pi[b], pc = pi[c], pd = pi[d];
    double v = 0.25 * (pa + pb + pc + pd) * row_dot(a, b, c, d);
    v += 0.25 * (pd - pa) * (pc - pb) * row_dot_m(a, d, b, c, pi_inv);
    v -= 0.25 * (pc - pa) * (pd - pb) * row_dot_m(a, c, b, d, pi_inv);
    v -= 0.75 * row_dot_m(a, b, c, d, pi);
    v += 0.25 * (row_dot_m(a, b, c, d, pi) + row_dot_m(b, c, a, d, pi) -
                 row_dot_m(a, c, b, d, pi));
    return v / std::sqrt(pa * pb * pc * pd);
  }
};

SymOp assemble(ModelName model, const MetricParams& s, bool parallel) {
  const Assembler az(model, s);
  const WedgeSpace& ws = WedgeSpace::get(az.mdl.dim_m());
  const int n2 = ws.dim2();
  SymOp R(n2, n2);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (int p = 0; p < n2; ++p) {
    const auto& [a, b] = ws.pair(p);
    for (int q = p; q < n2; ++q) {
      const auto& [c, d] = ws.pair(q);
      const double v = az.entry(a, b, c, d);
      R(p, q) = v;
      R(q, p) = v;
    }
  }
  return R;
}

}  // namespace

SymOp assemble_curvature_serial(ModelName model, const MetricParams& s) {
  return assemble(model, s, false);
}

SymOp assemble_curvature_parallel(ModelName model, const MetricParams& s) {
  return assemble(model, s, true);
}

CurvatureOperator curvature_operator(ModelName model, const MetricParams& s) {
  return CurvatureOperator{model, s, assemble_curvature_parallel(model, s)};
}

SymOp beta_op(ModelName model, const MetricParams& s) {
  const Assembler az(model, s);
  const WedgeSpace& ws = WedgeSpace::get(az.mdl.dim_m());
  const int n2 = ws.dim2();
  SymOp B(n2, n2);
  for (int p = 0; p < n2; ++p) {
    const auto& [a, b] = ws.pair(p);
    for (int q = p; q < n2; ++q) {
      const auto& [c, d] = ws.pair(q);
      const double v = 0.25 * az.row_dot_m(a, b, c, d, az.pi) /
                       std::sqrt(az.pi[a] * az.pi[b] * az.pi[c] * az.pi[d]);
      B(p, q) = v;
      B(q, p) = v;
    }
  }
  return B;
}

SymOp form_operator_in_frame(const FourForm& omega_q, ModelName model, const MetricParams& s) {
  const Model& mdl = Model::get(model);
  if (omega_q.n != mdl.dim_m()) throw std::invalid_argument("form dimension mismatch");
  const WedgeSpace& ws = WedgeSpace::get(omega_q.n);
  FourForm scaled(omega_q.n);
  for (int q = 0; q < ws.dim4(); ++q) {
    const double v = omega_q.coeffs[q];
    if (v == 0.0) continue;
    const auto& [a, b, c, d] = ws.quad(q);
    const double w = std::sqrt(s.at(mdl.slot_of(a)) * s.at(mdl.slot_of(b)) *
                               s.at(mdl.slot_of(c)) * s.at(mdl.slot_of(d)));
    scaled.coeffs[q] = v / w;
  }
  return form_as_operator(scaled);
}

SymOp modified_operator(const CurvatureOperator& R, const FourForm& omega_q) {
  return R.matrix + form_operator_in_frame(omega_q, R.model, R.s);
}

Bivector plane_in_frame(ModelName model, const MetricParams& s, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y) {
  const Model& mdl = Model::get(model);
  Eigen::VectorXd xh = x, yh = y;
  for (int a = 0; a < mdl.dim_m(); ++a) {
    const double w = std::sqrt(s.at(mdl.slot_of(a)));
    xh[a] *= w;
    yh[a] *= w;
  }
  return wedge2(xh, yh);
}

double sectional_curvature(const CurvatureOperator& R, const MVector& X, const MVector& Y) {
  if (X.model != R.model || Y.model != R.model)
    throw std::invalid_argument("sectional_curvature: model mismatch");
  const Bivector b = plane_in_frame(R.model, R.s, m_coords(X), m_coords(Y));
  const double nrm2 = b.coeffs.squaredNorm();
  if (nrm2 < 1e-14) throw std::invalid_argument("degenerate plane");
  return b.coeffs.dot(R.matrix * b.coeffs) / nrm2;
}

void write_operator_csv(const SymOp& op, std::ostream& os) {
  os << "row,col,value\n";
  char buf[64];
  for (int r = 0; r < op.rows(); ++r)
    for (int c = 0; c < op.cols(); ++c) {
      if (op(r, c) == 0.0) continue;
      std::snprintf(buf, sizeof(buf), "%d,%d,%.17g\n", r, c, op(r, c));
      os << buf;
    }
}

}  // namespace wallach
