#include "wallach/forms.hpp"

#include <cmath>
#include <stdexcept>

namespace wallach {

// Transcription tables.  Units are indexed 1,i,j,k,l,m,n,o = 0..7; each line
// reads sign*[(p1) + inner1*(q1)] ^ [(p2) + inner2*(q2)], first factor in
// slot r+1, second in slot r+2.  Entered as data so that a single flipped
// sign is localized by the invariance checks.
const std::array<FormLine, 28>& zeta_lines() {
  static const std::array<FormLine, 28> lines = {{
      {+1, {0, 1}, -1, {2, 3}, {0, 1}, +1, {2, 3}},
      {+1, {0, 2}, +1, {1, 3}, {0, 2}, -1, {1, 3}},
      {+1, {0, 3}, -1, {1, 2}, {0, 3}, +1, {1, 2}},
      {+1, {0, 4}, +1, {1, 5}, {0, 4}, -1, {1, 5}},
      {+1, {0, 5}, -1, {1, 4}, {0, 5}, +1, {1, 4}},
      {+1, {0, 6}, -1, {1, 7}, {0, 6}, +1, {1, 7}},
      {+1, {0, 7}, +1, {1, 6}, {0, 7}, -1, {1, 6}},
      {+1, {0, 1}, +1, {2, 3}, {4, 5}, -1, {6, 7}},
      {+1, {0, 2}, -1, {1, 3}, {4, 6}, +1, {5, 7}},
      {+1, {0, 3}, +1, {1, 2}, {4, 7}, -1, {5, 6}},
      {-1, {0, 4}, -1, {1, 5}, {2, 6}, +1, {3, 7}},
      {-1, {0, 5}, +1, {1, 4}, {2, 7}, -1, {3, 6}},
      {+1, {0, 6}, +1, {1, 7}, {2, 4}, -1, {3, 5}},
      {+1, {0, 7}, -1, {1, 6}, {2, 5}, +1, {3, 4}},
      {-1, {2, 4}, -1, {3, 5}, {0, 6}, -1, {1, 7}},
      {-1, {2, 5}, +1, {3, 4}, {0, 7}, +1, {1, 6}},
      {+1, {2, 6}, +1, {3, 7}, {0, 4}, +1, {1, 5}},
      {+1, {2, 7}, -1, {3, 6}, {0, 5}, -1, {1, 4}},
      {-1, {4, 5}, -1, {6, 7}, {0, 1}, -1, {2, 3}},
      {-1, {4, 6}, +1, {5, 7}, {0, 2}, +1, {1, 3}},
      {-1, {4, 7}, -1, {5, 6}, {0, 3}, -1, {1, 2}},
      {-1, {2, 4}, +1, {3, 5}, {2, 4}, +1, {3, 5}},
      {-1, {2, 5}, -1, {3, 4}, {2, 5}, -1, {3, 4}},
      {-1, {2, 6}, -1, {3, 7}, {2, 6}, -1, {3, 7}},
      {-1, {2, 7}, +1, {3, 6}, {2, 7}, +1, {3, 6}},
      {-1, {4, 5}, +1, {6, 7}, {4, 5}, +1, {6, 7}},
      {-1, {4, 6}, -1, {5, 7}, {4, 6}, -1, {5, 7}},
      {-1, {4, 7}, +1, {5, 6}, {4, 7}, +1, {5, 6}},
  }};
  return lines;
}

const std::array<FormLine, 3>& phi_lines() {
  static const std::array<FormLine, 3> lines = {{
      {+1, {0, 1}, -1, {2, 3}, {0, 1}, +1, {2, 3}},
      {+1, {0, 2}, +1, {1, 3}, {0, 2}, -1, {1, 3}},
      {+1, {0, 3}, -1, {1, 2}, {0, 3}, +1, {1, 2}},
  }};
  return lines;
}

std::uint64_t zeta_checksum() {
  // FNV-1a over the table fields, frozen in the test suite
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::uint64_t>(v + 16);
    h *= 1099511628211ull;
  };
  for (const FormLine& ln : zeta_lines()) {
    mix(ln.sign);
    mix(ln.p1[0]);
    mix(ln.p1[1]);
    mix(ln.inner1);
    mix(ln.q1[0]);
    mix(ln.q1[1]);
    mix(ln.p2[0]);
    mix(ln.p2[1]);
    mix(ln.inner2);
    mix(ln.q2[0]);
    mix(ln.q2[1]);
  }
  return h;
}

namespace {

void add_quad(FourForm& w, const Model& mdl, int slotA, int uA, int uB, int slotB, int uC, int uD,
              double coeff) {
  std::array<int, 4> q = {mdl.m_index(slotA, uA), mdl.m_index(slotA, uB), mdl.m_index(slotB, uC),
                          mdl.m_index(slotB, uD)};
  const int sgn = WedgeSpace::sort_signed(q);
  if (sgn == 0) return;
  const WedgeSpace& ws = WedgeSpace::get(mdl.dim_m());
  w.coeffs[ws.quad_index(q[0], q[1], q[2], q[3])] += sgn * coeff;
}

}  // namespace

FourForm form_from_lines(ModelName model, std::span<const FormLine> lines, int r) {
  const Model& mdl = Model::get(model);
  FourForm w(mdl.dim_m());
  const int rA = (r + 1) % 3, rB = (r + 2) % 3;
  for (const FormLine& ln : lines) {
    const double e = ln.sign;
    add_quad(w, mdl, rA, ln.p1[0], ln.p1[1], rB, ln.p2[0], ln.p2[1], e);
    add_quad(w, mdl, rA, ln.p1[0], ln.p1[1], rB, ln.q2[0], ln.q2[1], e * ln.inner2);
    add_quad(w, mdl, rA, ln.q1[0], ln.q1[1], rB, ln.p2[0], ln.p2[1], e * ln.inner1);
    add_quad(w, mdl, rA, ln.q1[0], ln.q1[1], rB, ln.q2[0], ln.q2[1], e * ln.inner1 * ln.inner2);
  }
  return w;
}

FourForm xi_form(int r) {
  const Model& mdl = Model::get(ModelName::W6);
  FourForm w(mdl.dim_m());
  add_quad(w, mdl, (r + 1) % 3, 0, 1, (r + 2) % 3, 0, 1, 1.0);
  return w;
}

FourForm phi_form(int r) {
  return form_from_lines(ModelName::W12, phi_lines(), r);
}

FourForm psi_form(int r) {
  const Model& mdl = Model::get(ModelName::W12);
  const WedgeSpace& ws = WedgeSpace::get(mdl.dim_m());
  FourForm w(mdl.dim_m());
  const int base = mdl.m_index(r, 0);
  w.coeffs[ws.quad_index(base, base + 1, base + 2, base + 3)] = 1.0;
  return w;
}

FourForm zeta_form(int r) {
  return form_from_lines(ModelName::W24, zeta_lines(), r);
}

FourForm invariant_form(ModelName model, const InvariantCoeffs& c) {
  const Model& mdl = Model::get(model);
  FourForm w(mdl.dim_m());
  switch (model) {
    case ModelName::W3:
      break;  // no 4-forms on a 3-dimensional space
    case ModelName::W6:
      for (int r = 0; r < 3; ++r)
        if (c.a[r] != 0.0) w.coeffs += c.a[r] * xi_form(r).coeffs;
      break;
    case ModelName::W12:
      for (int r = 0; r < 3; ++r) {
        if (c.a[r] != 0.0) w.coeffs += c.a[r] * phi_form(r).coeffs;
        if (c.b[r] != 0.0) w.coeffs += c.b[r] * psi_form(r).coeffs;
      }
      break;
    case ModelName::W24:
      for (int r = 0; r < 3; ++r)
        if (c.a[r] != 0.0) w.coeffs += c.a[r] * zeta_form(r).coeffs;
      break;
  }
  return w;
}

FourForm project_form(const FourForm& w, ModelName from, ModelName to) {
  const Model& big = Model::get(from);
  const Model& small = Model::get(to);
  if (small.algebra().dim() >= big.algebra().dim())
    throw std::invalid_argument("project_form: models are not nested");
  if (w.n != big.dim_m()) throw std::invalid_argument("project_form: wrong source dimension");
  const WedgeSpace& wb = WedgeSpace::get(big.dim_m());
  const WedgeSpace& wsm = WedgeSpace::get(small.dim_m());
  const int d = small.algebra().dim();
  FourForm out(small.dim_m());
  for (int q = 0; q < wb.dim4(); ++q) {
    const double v = w.coeffs[q];
    if (v == 0.0) continue;
    const auto& quad = wb.quad(q);
    bool keep = true;
    std::array<int, 4> t{};
    for (int i = 0; i < 4; ++i) {
      if (big.unit_of(quad[static_cast<std::size_t>(i)]) >= d) {
        keep = false;
        break;
      }
      t[static_cast<std::size_t>(i)] = small.m_index(big.slot_of(quad[static_cast<std::size_t>(i)]),
                                                     big.unit_of(quad[static_cast<std::size_t>(i)]));
    }
    if (!keep) continue;
    // slot-major order is preserved, so the indices stay ascending
    out.coeffs[wsm.quad_index(t[0], t[1], t[2], t[3])] += v;
  }
  return out;
}

namespace {

Bivector rep_bivector(const Model& mdl,
                      std::initializer_list<std::tuple<int, int, int, int, double>> terms) {
  const WedgeSpace& ws = WedgeSpace::get(mdl.dim_m());
  Bivector b(mdl.dim_m());
  for (const auto& [slotA, uA, slotB, uB, coeff] : terms) {
    std::array<int, 2> p = {mdl.m_index(slotA, uA), mdl.m_index(slotB, uB)};
    const int sgn = WedgeSpace::sort_signed(p);
    b.coeffs[ws.pair_index(p[0], p[1])] += sgn * coeff;
  }
  return b;
}

}  // namespace

RepresentativeSet representatives(ModelName model) {
  const Model& mdl = Model::get(model);
  RepresentativeSet set;
  set.model = model;
  const double is2 = 1.0 / std::sqrt(2.0);
  switch (model) {
    case ModelName::W3:
      throw std::invalid_argument("representatives: not defined for W3");
    case ModelName::W6: {
      for (int r = 0; r < 3; ++r)
        set.reps.push_back({rep_bivector(mdl, {{r, 0, r, 1, 1.0}}), 0, 1});
      for (int r = 0; r < 3; ++r) {
        const int rA = (r + 1) % 3, rB = (r + 2) % 3;
        set.reps.push_back(
            {rep_bivector(mdl, {{rA, 0, rB, 0, -is2}, {rA, 1, rB, 1, is2}}), 1 + r, 2});
      }
      for (int r = 0; r < 3; ++r) {
        const int rA = (r + 1) % 3, rB = (r + 2) % 3;
        set.reps.push_back(
            {rep_bivector(mdl, {{rA, 0, rB, 0, is2}, {rA, 1, rB, 1, is2}}), 4 + r, 2});
      }
      break;
    }
    case ModelName::W12: {
      for (int r = 0; r < 3; ++r) {
        const int rA = (r + 1) % 3, rB = (r + 2) % 3;
        set.reps.push_back(
            {rep_bivector(mdl, {{rA, 0, rA, 1, is2}, {rA, 2, rA, 3, -is2}}), r, 3});
        set.reps.push_back(
            {rep_bivector(mdl, {{rB, 0, rB, 1, is2}, {rB, 2, rB, 3, is2}}), r, 3});
      }
      for (int r = 0; r < 3; ++r) {
        const int rA = (r + 1) % 3, rB = (r + 2) % 3;
        set.reps.push_back({rep_bivector(mdl, {{rA, 0, rB, 0, 0.5},
                                               {rA, 1, rB, 1, -0.5},
                                               {rA, 2, rB, 2, -0.5},
                                               {rA, 3, rB, 3, -0.5}}),
                            3 + r, 4});
      }
      for (int r = 0; r < 3; ++r) {
        const int rA = (r + 1) % 3, rB = (r + 2) % 3;
        set.reps.push_back(
            {rep_bivector(mdl, {{rA, 0, rB, 0, is2}, {rA, 3, rB, 3, is2}}), 6 + r, 12});
      }
      break;
    }
    case ModelName::W24: {
      for (int r = 0; r < 3; ++r)
        set.reps.push_back({rep_bivector(mdl, {{r, 2, r, 4, is2}, {r, 3, r, 5, is2}}), 0, 28});
      const double c = 0.5 * is2;
      for (int r = 0; r < 3; ++r) {
        const int rA = (r + 1) % 3, rB = (r + 2) % 3;
        Bivector b(mdl.dim_m());
        b = rep_bivector(mdl, {{rA, 0, rB, 0, c}});
        for (int u = 1; u < 8; ++u) {
          b.coeffs += rep_bivector(mdl, {{rA, u, rB, u, -c}}).coeffs;
        }
        set.reps.push_back({b, 1 + r, 8});
      }
      for (int r = 0; r < 3; ++r) {
        const int rA = (r + 1) % 3, rB = (r + 2) % 3;
        set.reps.push_back(
            {rep_bivector(mdl, {{rA, 0, rB, 0, is2}, {rA, 7, rB, 7, is2}}), 4 + r, 56});
      }
      break;
    }
  }
  return set;
}

Eigen::MatrixXd restrict_full(const SymOp& S, ModelName model, const MetricParams& s,
                              bool unit_frame) {
  const Model& mdl = Model::get(model);
  const WedgeSpace& ws = WedgeSpace::get(mdl.dim_m());
  const RepresentativeSet set = representatives(model);
  const int n = static_cast<int>(set.reps.size());
  Eigen::MatrixXd U(ws.dim2(), n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd u = set.reps[static_cast<std::size_t>(i)].v.coeffs;
    for (int p = 0; p < ws.dim2(); ++p) {
      if (u[p] == 0.0) continue;
      const auto& [a, b] = ws.pair(p);
      u[p] *= std::sqrt(s.at(mdl.slot_of(a)) * s.at(mdl.slot_of(b)));
    }
    if (unit_frame) u /= u.norm();
    U.col(i) = u;
  }
  return U.transpose() * S * U;
}

BlockMatrices restrict_blocks(const SymOp& S, ModelName model, const MetricParams& s, double tol,
                              bool unit_frame) {
  const RepresentativeSet set = representatives(model);
  const Eigen::MatrixXd G = restrict_full(S, model, s, unit_frame);
  const int n = static_cast<int>(set.reps.size());
  const double scale = 1.0 + G.cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (set.reps[static_cast<std::size_t>(i)].block == set.reps[static_cast<std::size_t>(j)].block) continue;
      if (std::abs(G(i, j)) > tol * scale)
        throw std::runtime_error("restriction is not block diagonal across isotypic components");
    }
  BlockMatrices B;
  B.model = model;
  if (model == ModelName::W12) {
    B.R1 = G.topLeftCorner(6, 6);
    for (int r = 0; r < 3; ++r) {
      B.R2[r] = G(6 + r, 6 + r);
      B.R3[r] = G(9 + r, 9 + r);
    }
  } else {
    B.R1 = G.topLeftCorner(3, 3);
    for (int r = 0; r < 3; ++r) {
      B.R2[r] = G(3 + r, 3 + r);
      B.R3[r] = G(6 + r, 6 + r);
    }
  }
  return B;
}

double s_scalar_of(const MetricParams& s) {
  return 2.0 * (s.s1 * s.s2 + s.s1 * s.s3 + s.s2 * s.s3) -
         (s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3);
}

BlockMatrices closed_form_blocks(ModelName model, const MetricParams& s, const InvariantCoeffs& c) {
  BlockMatrices B;
  B.model = model;
  const double sc = s_scalar_of(s);
  auto third = [](int i, int j) { return 3 - i - j; };
  switch (model) {
    case ModelName::W3:
      throw std::invalid_argument("closed_form_blocks: not defined for W3");
    case ModelName::W6: {
      B.R1 = Eigen::MatrixXd::Zero(3, 3);
      for (int r = 0; r < 3; ++r) B.R1(r, r) = 4.0 * s.at(r);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const int k = third(i, j);
          B.R1(i, j) = B.R1(j, i) = -sc / (2.0 * s.at(k)) + c.a[k];
        }
      break;
    }
    case ModelName::W12: {
      B.R1 = Eigen::MatrixXd::Zero(6, 6);
      for (int r = 0; r < 3; ++r) {
        const int rA = (r + 1) % 3, rB = (r + 2) % 3;
        B.R1(2 * r, 2 * r) = 4.0 * s.at(rA) - c.b[rA];
        B.R1(2 * r + 1, 2 * r + 1) = 4.0 * s.at(rB) + c.b[rB];
        B.R1(2 * r, 2 * r + 1) = B.R1(2 * r + 1, 2 * r) = -sc / s.at(r) + 2.0 * c.a[r];
      }
      break;
    }
    case ModelName::W24: {
      B.R1 = Eigen::MatrixXd::Zero(3, 3);
      for (int r = 0; r < 3; ++r) B.R1(r, r) = 4.0 * s.at(r);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const int k = third(i, j);
          B.R1(i, j) = B.R1(j, i) = sc / s.at(k) - 2.0 * c.a[k];
        }
      break;
    }
  }
  for (int r = 0; r < 3; ++r) {
    const int rA = (r + 1) % 3, rB = (r + 2) % 3;
    const double base = s.at(rA) + s.at(rB) - s.at(r);
    switch (model) {
      case ModelName::W6: B.R2[r] = base + c.a[r]; break;
      case ModelName::W12: B.R2[r] = base + sc / (2.0 * s.at(r)) + 3.0 * c.a[r]; break;
      case ModelName::W24: B.R2[r] = base + 3.0 * sc / (2.0 * s.at(r)) + 7.0 * c.a[r]; break;
      default: break;
    }
    const double d = s.at(rA) - s.at(rB);
    B.R3[r] = (d * d - s.at(r) * s.at(r)) / (2.0 * s.at(r)) - c.a[r];
  }
  return B;
}

double block_deviation(const BlockMatrices& x, const BlockMatrices& y) {
  double dev = (x.R1 - y.R1).cwiseAbs().maxCoeff();
  dev = std::max(dev, (x.R2 - y.R2).cwiseAbs().maxCoeff());
  dev = std::max(dev, (x.R3 - y.R3).cwiseAbs().maxCoeff());
  return dev;
}

InvariantCoeffs omega0(ModelName model, const MetricParams& s) {
  (void)model;
  InvariantCoeffs c;
  for (int r = 0; r < 3; ++r) {
    const double d = s.at((r + 1) % 3) - s.at((r + 2) % 3);
    c.a[r] = (d * d - s.at(r) * s.at(r)) / (2.0 * s.at(r));
  }
  return c;
}

std::array<Interval, 3> admissible_intervals(ModelName model, const MetricParams& s) {
  const InvariantCoeffs c0 = omega0(model, s);
  const double sc = s_scalar_of(s);
  std::array<Interval, 3> out;
  for (int r = 0; r < 3; ++r) {
    const int rA = (r + 1) % 3, rB = (r + 2) % 3;
    const double base = s.at(rA) + s.at(rB) - s.at(r);
    double lo = 0.0;
    switch (model) {
      case ModelName::W6: lo = -base; break;
      case ModelName::W12: lo = -(base + sc / (2.0 * s.at(r))) / 3.0; break;
      case ModelName::W24: lo = -(base + 3.0 * sc / (2.0 * s.at(r))) / 7.0; break;
      default: throw std::invalid_argument("admissible_intervals: not defined for W3");
    }
    out[static_cast<std::size_t>(r)] = Interval{lo, c0.a[r]};
  }
  return out;
}

std::array<int, 3> block_multiplicities(ModelName model) {
  switch (model) {
    case ModelName::W6: return {1, 2, 2};
    case ModelName::W12: return {3, 4, 12};
    case ModelName::W24: return {28, 8, 56};
    default: throw std::invalid_argument("block_multiplicities: not defined for W3");
  }
}

std::vector<double> block_spectrum(const BlockMatrices& B) {
  const auto mult = block_multiplicities(B.model);
  std::vector<double> ev;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B.R1);
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    for (int m = 0; m < mult[0]; ++m) ev.push_back(es.eigenvalues()[i]);
  for (int r = 0; r < 3; ++r) {
    for (int m = 0; m < mult[1]; ++m) ev.push_back(B.R2[r]);
    for (int m = 0; m < mult[2]; ++m) ev.push_back(B.R3[r]);
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

FourForm lie_derivative(const Eigen::MatrixXd& A, const FourForm& w) {
  const WedgeSpace& ws = WedgeSpace::get(w.n);
  FourForm out(w.n);
  for (int q = 0; q < ws.dim4(); ++q) {
    const double v = w.coeffs[q];
    if (v == 0.0) continue;
    const auto& quad = ws.quad(q);
    for (int pos = 0; pos < 4; ++pos) {
      const int src = quad[static_cast<std::size_t>(pos)];
      for (int t = 0; t < w.n; ++t) {
        const double a = A(src, t);
        if (a == 0.0) continue;
        std::array<int, 4> tq = quad;
        tq[static_cast<std::size_t>(pos)] = t;
        const int sgn = WedgeSpace::sort_signed(tq);
        if (sgn == 0) continue;
        out.coeffs[ws.quad_index(tq[0], tq[1], tq[2], tq[3])] += sgn * a * v;
      }
    }
  }
  return out;
}

double invariance_residual(ModelName model, const FourForm& w) {
  const Model& mdl = Model::get(model);
  double worst = 0.0;
  for (int hi = mdl.dim_m(); hi < mdl.dim_g(); ++hi) {
    Eigen::VectorXd h = Eigen::VectorXd::Zero(mdl.dim_g());
    h[hi] = 1.0;
    const FourForm lw = lie_derivative(mdl.ad_on_m(h), w);
    worst = std::max(worst, lw.coeffs.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace wallach
