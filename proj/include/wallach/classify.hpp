#pragma once

#include "wallach/forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wallach {

/// p_r(s) = (s_{r+1}-s_{r+2})^2 + 2 s_r (s_{r+1}+s_{r+2}) - 3 s_r^2.
Eigen::Vector3d p_polys(const MetricParams& s);

/// s = 2(s1 s2 + s1 s3 + s2 s3) - (s1^2 + s2^2 + s3^2) = p1 + p2 + p3.
double s_scalar(const MetricParams& s);

enum class Reason { Generic, AllEqualNormal, SubmergesCaP2, PNegative };
const char* reason_label(Reason r);

struct Classification {
  ModelName model = ModelName::W6;
  MetricParams s;
  bool sec_nonneg = false;
  bool sec_pos = false;
  bool strongly_nonneg = false;
  bool strongly_pos = false;
  Reason reason = Reason::Generic;
  Eigen::Vector3d p_values = Eigen::Vector3d::Zero();
  double s_value = 0.0;
  // relative gaps |s_i - s_j| / max(s), reported because the classification
  // is discontinuous across the equality loci
  Eigen::Vector3d equality_gaps = Eigen::Vector3d::Zero();
};

/// Membership in the moduli spaces.  Decisions are made on the
/// scale-normalized parameters; the reported p-values refer to the input.
Classification classify(ModelName model, const MetricParams& s, double tol = 1e-9);

struct Certificate {
  ModelName model = ModelName::W6;
  MetricParams s;
  InvariantCoeffs coeffs;
  double epsilon = 0.0;        // perturbation size (0 for semidefinite certificates)
  double min_eigenvalue = 0.0; // of the full modified operator
  Eigen::Vector3d block_minima = Eigen::Vector3d::Zero();  // per block family
  std::optional<Eigen::Vector3d> kernel_witness;
  bool positive = false;  // definite vs semidefinite claim
};

/// omega0 certificate: R + omega0 is positive-semidefinite iff sec >= 0.
/// Throws when some p_r < 0, citing the violating index.
Certificate certify_strongly_nonneg(ModelName model, const MetricParams& s, double tol = 1e-9);

/// Constructive strong-positivity certificate omega0 + eps * omega', with the
/// perturbation built exactly as in the first-order argument and eps bisected
/// until all blocks are positive-definite; re-verified on the full operator.
Certificate certify_strongly_pos(ModelName model, const MetricParams& s, double tol = 1e-9);

/// Independent re-verification: reassembles the modified operator from the
/// certificate data and returns the minimum eigenvalue of a fresh eigensolve.
double validate_certificate(const Certificate& cert);

std::string certificate_json(const Certificate& cert);

struct Refutation {
  ModelName model = ModelName::W6;
  MetricParams s;
  double supremum = 0.0;  // max over the admissible box of min-eig of R1
  InvariantCoeffs argmax;
  long evaluations = 0;
};

/// Maximize the minimum eigenvalue of the first block over the coefficient
/// box allowed by the admissible intervals (plus the psi box for W12); the
/// objective is concave, so grid search plus coordinate refinement reaches
/// the global maximum.  A supremum <= 0 refutes strong positivity.
Refutation refute_strongly_pos(ModelName model, const MetricParams& s);

/// 1-based indices r with s_{r+1} = s_{r+2} within relative tolerance.
std::vector<int> detect_submersion(const MetricParams& s, double tol = 1e-9);

}  // namespace wallach
