#include "wallach/classify.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wallach {

Eigen::Vector3d p_polys(const MetricParams& s) {
  Eigen::Vector3d p;
  for (int r = 0; r < 3; ++r) {
    const double sr = s.at(r), sa = s.at((r + 1) % 3), sb = s.at((r + 2) % 3);
    p[r] = (sa - sb) * (sa - sb) + 2.0 * sr * (sa + sb) - 3.0 * sr * sr;
  }
  return p;
}

double s_scalar(const MetricParams& s) {
  return 2.0 * (s.s1 * s.s2 + s.s1 * s.s3 + s.s2 * s.s3) -
         (s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3);
}

const char* reason_label(Reason r) {
  switch (r) {
    case Reason::Generic: return "generic";
    case Reason::AllEqualNormal: return "all_equal_normal";
    case Reason::SubmergesCaP2: return "submerges_CaP2";
    case Reason::PNegative: return "p_negative";
  }
  return "?";
}

Classification classify(ModelName model, const MetricParams& s, double tol) {
  Classification c;
  c.model = model;
  c.s = s;
  c.p_values = p_polys(s);
  c.s_value = s_scalar(s);

  // scale-normalize before tolerance comparisons
  const double scale = 3.0 / (s.s1 + s.s2 + s.s3);
  const MetricParams sn(s.s1 * scale, s.s2 * scale, s.s3 * scale);
  const Eigen::Vector3d p = p_polys(sn);
  const double mx = std::max({sn.s1, sn.s2, sn.s3});
  c.equality_gaps = Eigen::Vector3d(std::abs(sn.s2 - sn.s3), std::abs(sn.s3 - sn.s1),
                                    std::abs(sn.s1 - sn.s2)) /
                    mx;
  const bool eq12 = c.equality_gaps[2] <= tol;
  const bool eq23 = c.equality_gaps[0] <= tol;
  const bool eq31 = c.equality_gaps[1] <= tol;
  const bool all_equal = eq12 && eq23 && eq31;
  const bool some_equal = eq12 || eq23 || eq31;

  const bool p_nonneg = p.minCoeff() >= -tol;
  const bool p_pos = p.minCoeff() > tol;

  c.sec_nonneg = p_nonneg;
  c.strongly_nonneg = p_nonneg;
  if (model == ModelName::W3) {
    // locally SU(2): sec > 0 iff all p_r > 0, the normal metric is round
    c.sec_pos = p_pos;
    c.strongly_pos = p_pos;  // dim 3: every bivector is decomposable
  } else {
    c.sec_pos = p_pos && !all_equal;
    c.strongly_pos = model == ModelName::W24 ? (p_pos && !some_equal) : c.sec_pos;
  }

  if (!p_nonneg)
    c.reason = Reason::PNegative;
  else if (all_equal && model != ModelName::W3)
    c.reason = Reason::AllEqualNormal;
  else if (model == ModelName::W24 && some_equal)
    c.reason = Reason::SubmergesCaP2;
  else
    c.reason = Reason::Generic;
  return c;
}

namespace {

struct FullCheck {
  double min_eig;
  Eigen::Vector3d block_minima;
};

// minimum eigenvalue of the full modified operator plus per-family block minima
FullCheck full_check(ModelName model, const MetricParams& s, const InvariantCoeffs& coeffs) {
  const CurvatureOperator R = curvature_operator(model, s);
  FullCheck out;
  if (model == ModelName::W3) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(R.matrix);
    out.min_eig = es.eigenvalues().minCoeff();
    out.block_minima.setConstant(out.min_eig);
    return out;
  }
  const SymOp M = modified_operator(R, invariant_form(model, coeffs));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  out.min_eig = es.eigenvalues().minCoeff();
  const BlockMatrices B = restrict_blocks(M, model, s, 1e-8, /*unit_frame=*/true);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e1(B.R1);
  out.block_minima[0] = e1.eigenvalues().minCoeff();
  out.block_minima[1] = B.R2.minCoeff();
  out.block_minima[2] = B.R3.minCoeff();
  return out;
}

Eigen::Vector3d kernel_vector(const MetricParams& s) {
  return {(s.s2 - s.s3) / s.s1, (s.s3 - s.s1) / s.s2, (s.s1 - s.s2) / s.s3};
}

}  // namespace

Certificate certify_strongly_nonneg(ModelName model, const MetricParams& s, double tol) {
  const Eigen::Vector3d p = p_polys(s);
  for (int r = 0; r < 3; ++r)
    if (p[r] < -tol * s.vec().squaredNorm()) {
      std::ostringstream os;
      os << "not sec>=0: p_" << (r + 1) << "(s) = " << p[r] << " < 0";
      throw std::domain_error(os.str());
    }
  Certificate cert;
  cert.model = model;
  cert.s = s;
  cert.positive = false;
  cert.epsilon = 0.0;
  if (model != ModelName::W3) cert.coeffs = omega0(model, s);
  const FullCheck fc = full_check(model, s, cert.coeffs);
  cert.min_eigenvalue = fc.min_eig;
  cert.block_minima = fc.block_minima;
  if (model == ModelName::W24) {
    const Eigen::Vector3d v = kernel_vector(s);
    if (v.norm() > tol) cert.kernel_witness = v;
  }
  if (cert.min_eigenvalue < -1e-8 * (1.0 + s.vec().squaredNorm()))
    throw std::runtime_error("omega0 certificate failed the positive-semidefinite check");
  return cert;
}

Certificate certify_strongly_pos(ModelName model, const MetricParams& s, double tol) {
  const Classification cls = classify(model, s, tol);
  if (!cls.strongly_pos) {
    std::ostringstream os;
    os << model_label(model) << " with s = (" << s.s1 << "," << s.s2 << "," << s.s3
       << ") is not strongly positive (" << reason_label(cls.reason) << ")";
    throw std::domain_error(os.str());
  }

  Certificate cert;
  cert.model = model;
  cert.s = s;
  cert.positive = true;

  if (model == ModelName::W3) {
    const FullCheck fc = full_check(model, s, cert.coeffs);
    cert.min_eigenvalue = fc.min_eig;
    cert.block_minima = fc.block_minima;
    if (cert.min_eigenvalue <= 0.0)
      throw std::runtime_error("curvature operator of W3 is unexpectedly not definite");
    return cert;
  }

  // perturbation direction from the first-order argument
  const InvariantCoeffs c0 = omega0(model, s);
  InvariantCoeffs dir;
  dir.a = Eigen::Vector3d(-1.0, -1.0, -1.0);
  if (model == ModelName::W24) {
    Eigen::Vector3d gamma;
    for (int r = 0; r < 3; ++r)
      gamma[r] = s.at(r) * (s.at(r) - s.at((r + 1) % 3)) * (s.at(r) - s.at((r + 2) % 3));
    int rstar = 0;
    for (int r = 1; r < 3; ++r)
      if (gamma[r] < gamma[rstar]) rstar = r;
    const double delta =
        std::abs(gamma[rstar]) / (2.0 * (1.0 + std::abs(gamma[(rstar + 1) % 3]) +
                                         std::abs(gamma[(rstar + 2) % 3])));
    dir.a = Eigen::Vector3d(-delta, -delta, -delta);
    dir.a[rstar] = -1.0;
  } else if (model == ModelName::W12) {
    const auto sub = detect_submersion(s, tol);
    if (!sub.empty()) {
      // s_r != s_{r+1} = s_{r+2}: kernel (1,1) in the r-th 2x2 block needs
      // b'_{r+2} > -4 a'_r on top of a'_r < 0
      const int r = sub.front() - 1;
      dir.b[(r + 2) % 3] = 8.0;
    }
  }

  double eps = 1.0;
  bool ok = false;
  for (int step = 0; step < 60; ++step) {
    InvariantCoeffs trial;
    trial.a = c0.a + eps * dir.a;
    trial.b = c0.b + eps * dir.b;
    const BlockMatrices B = closed_form_blocks(model, s, trial);
    const std::vector<double> spec = block_spectrum(B);
    if (spec.front() > tol * (1.0 + s.vec().squaredNorm())) {
      cert.coeffs = trial;
      cert.epsilon = eps;
      ok = true;
      break;
    }
    eps *= 0.5;
  }
  if (!ok)
    throw std::runtime_error(
        "bisection exhausted while constructing the strong-positivity certificate; "
        "this indicates a classification bug");

  const FullCheck fc = full_check(model, s, cert.coeffs);
  cert.min_eigenvalue = fc.min_eig;
  cert.block_minima = fc.block_minima;
  if (cert.min_eigenvalue <= 0.0)
    throw std::runtime_error("certificate failed full-operator re-verification");
  return cert;
}

double validate_certificate(const Certificate& cert) {
  const FullCheck fc = full_check(cert.model, cert.s, cert.coeffs);
  return fc.min_eig;
}

std::string certificate_json(const Certificate& cert) {
  nlohmann::json j;
  j["model"] = model_label(cert.model);
  j["s"] = {cert.s.s1, cert.s.s2, cert.s.s3};
  j["coeffs"]["a"] = {cert.coeffs.a[0], cert.coeffs.a[1], cert.coeffs.a[2]};
  j["coeffs"]["b"] = {cert.coeffs.b[0], cert.coeffs.b[1], cert.coeffs.b[2]};
  j["epsilon"] = cert.epsilon;
  j["min_eigenvalue"] = cert.min_eigenvalue;
  j["block_minima"] = {cert.block_minima[0], cert.block_minima[1], cert.block_minima[2]};
  if (cert.kernel_witness)
    j["kernel_witness"] = {(*cert.kernel_witness)[0], (*cert.kernel_witness)[1],
                           (*cert.kernel_witness)[2]};
  else
    j["kernel_witness"] = nullptr;
  j["claim"] = cert.positive ? "strongly_positive" : "strongly_nonnegative";
  return j.dump(2);
}

namespace {

double min_eig_r1(ModelName model, const MetricParams& s, const InvariantCoeffs& c) {
  const BlockMatrices B = closed_form_blocks(model, s, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B.R1);
  return es.eigenvalues().minCoeff();
}

}  // namespace

Refutation refute_strongly_pos(ModelName model, const MetricParams& s) {
  if (model == ModelName::W3) throw std::invalid_argument("refutation box is not defined for W3");
  const auto iv = admissible_intervals(model, s);
  const bool with_b = model == ModelName::W12;
  const int dim = with_b ? 6 : 3;

  std::vector<double> lo(static_cast<std::size_t>(dim)), hi(static_cast<std::size_t>(dim));
  for (int r = 0; r < 3; ++r) {
    lo[static_cast<std::size_t>(r)] = iv[static_cast<std::size_t>(r)].lo;
    hi[static_cast<std::size_t>(r)] = iv[static_cast<std::size_t>(r)].hi;
    if (with_b) {
      lo[static_cast<std::size_t>(3 + r)] = -4.0 * s.at(r);
      hi[static_cast<std::size_t>(3 + r)] = 4.0 * s.at(r);
    }
  }

  Refutation out;
  out.model = model;
  out.s = s;
  long evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    InvariantCoeffs c;
    for (int r = 0; r < 3; ++r) {
      c.a[r] = x[static_cast<std::size_t>(r)];
      if (with_b) c.b[r] = x[static_cast<std::size_t>(3 + r)];
    }
    ++evals;
    return min_eig_r1(model, s, c);
  };

  // coarse grid: the objective is concave, the grid only seeds the ascent
  const int g = with_b ? 5 : 13;
  std::vector<double> best(static_cast<std::size_t>(dim));
  double fbest = -std::numeric_limits<double>::infinity();
  std::vector<int> ix(static_cast<std::size_t>(dim), 0);
  for (;;) {
    std::vector<double> x(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d)
      x[static_cast<std::size_t>(d)] =
          lo[static_cast<std::size_t>(d)] +
          (hi[static_cast<std::size_t>(d)] - lo[static_cast<std::size_t>(d)]) * ix[static_cast<std::size_t>(d)] / (g - 1);
    const double f = eval(x);
    if (f > fbest) {
      fbest = f;
      best = x;
    }
    int d = 0;
    while (d < dim && ++ix[static_cast<std::size_t>(d)] == g) ix[static_cast<std::size_t>(d++)] = 0;
    if (d == dim) break;
  }

  // cyclic golden-section ascent; each 1-D slice of a concave function is
  // unimodal, so this converges to the box maximum
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int pass = 0; pass < 120; ++pass) {
    double moved = 0.0;
    for (int d = 0; d < dim; ++d) {
      double a = lo[static_cast<std::size_t>(d)], b = hi[static_cast<std::size_t>(d)];
      std::vector<double> x = best;
      double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
      x[static_cast<std::size_t>(d)] = c1;
      double f1 = eval(x);
      x[static_cast<std::size_t>(d)] = c2;
      double f2 = eval(x);
      while (b - a > 1e-13 * (1.0 + std::abs(a) + std::abs(b))) {
        if (f1 < f2) {
          a = c1;
          c1 = c2;
          f1 = f2;
          c2 = a + gr * (b - a);
          x[static_cast<std::size_t>(d)] = c2;
          f2 = eval(x);
        } else {
          b = c2;
          c2 = c1;
          f2 = f1;
          c1 = b - gr * (b - a);
          x[static_cast<std::size_t>(d)] = c1;
          f1 = eval(x);
        }
      }
      const double xc = 0.5 * (a + b);
      x[static_cast<std::size_t>(d)] = xc;
      const double fc = eval(x);
      if (fc > fbest) {
        moved += std::abs(xc - best[static_cast<std::size_t>(d)]);
        fbest = fc;
        best = x;
      }
    }
    if (moved < 1e-12) break;
  }

  out.supremum = fbest;
  for (int r = 0; r < 3; ++r) {
    out.argmax.a[r] = best[static_cast<std::size_t>(r)];
    if (with_b) out.argmax.b[r] = best[static_cast<std::size_t>(3 + r)];
  }
  out.evaluations = evals;
  return out;
}

std::vector<int> detect_submersion(const MetricParams& s, double tol) {
  std::vector<int> out;
  const double mx = std::max({s.s1, s.s2, s.s3});
  for (int r = 0; r < 3; ++r)
    if (std::abs(s.at((r + 1) % 3) - s.at((r + 2) % 3)) <= tol * mx) out.push_back(r + 1);
  return out;
}

}  // namespace wallach
