#pragma once

#include "wallach/curvature.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace wallach {

/// Coefficients of a general invariant 4-form: a over the xi/phi/zeta family,
/// b over the psi family (W12 only).
struct InvariantCoeffs {
  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
};

/// One transcription line sign*[(A^B) + inner1*(C^D)] ^ [(E^F) + inner2*(G^H)]
/// with the first factor in slot r+1 and the second in slot r+2.  Units are
/// indices into 1,i,j,k,l,m,n,o.
struct FormLine {
  int sign;
  std::array<int, 2> p1;
  int inner1;
  std::array<int, 2> q1;
  std::array<int, 2> p2;
  int inner2;
  std::array<int, 2> q2;
};

const std::array<FormLine, 28>& zeta_lines();
const std::array<FormLine, 3>& phi_lines();
std::uint64_t zeta_checksum();

/// Expand transcription lines into a 4-form over the Q-orthonormal wedge basis.
FourForm form_from_lines(ModelName model, std::span<const FormLine> lines, int r);

FourForm xi_form(int r);    // W6:  1_{r+1}^i_{r+1}^1_{r+2}^i_{r+2}
FourForm phi_form(int r);   // W12
FourForm psi_form(int r);   // W12: 1_r^i_r^j_r^k_r
FourForm zeta_form(int r);  // W24

/// a1 w1 + a2 w2 + a3 w3 (+ b.psi for W12), over the Q-orthonormal wedge basis.
FourForm invariant_form(ModelName model, const InvariantCoeffs& c);

/// Restriction of invariant forms along the totally geodesic chain: keep the
/// coefficients supported on the smaller model's units.  Exact.
FourForm project_form(const FourForm& w, ModelName from, ModelName to);

struct Representative {
  Bivector v;  // over the Q-orthonormal wedge basis
  int block;
  int irrep_dim;
};

struct RepresentativeSet {
  ModelName model = ModelName::W6;
  std::vector<Representative> reps;
};

/// The ordered representative lists, Q-unit-normalized.
RepresentativeSet representatives(ModelName model);

/// Blocks of the restricted operator: R1 is 3x3 for W6/W24 and 6x6 (three
/// 2x2 blocks) for W12; R2 and R3 are diagonal.
struct BlockMatrices {
  ModelName model = ModelName::W6;
  Eigen::MatrixXd R1;
  Eigen::Vector3d R2 = Eigen::Vector3d::Zero();
  Eigen::Vector3d R3 = Eigen::Vector3d::Zero();
};

/// Full Gram restriction <S u_i, u_j> over the representatives (operator in
/// the g-orthonormal frame).  With unit_frame = false the representatives
/// enter in Q units, which is the scaling of the closed-form blocks; with
/// unit_frame = true they are normalized in the metric frame, so the block
/// eigenvalues coincide with eigenvalues of the operator.
Eigen::MatrixXd restrict_full(const SymOp& S, ModelName model, const MetricParams& s,
                              bool unit_frame = false);

/// Restriction arranged into the block layout; throws if entries between
/// distinct isotypic blocks exceed tol.
BlockMatrices restrict_blocks(const SymOp& S, ModelName model, const MetricParams& s,
                              double tol = 1e-8, bool unit_frame = false);

/// Direct evaluation of the closed-form blocks.
BlockMatrices closed_form_blocks(ModelName model, const MetricParams& s, const InvariantCoeffs& c);

/// Entrywise deviation between two block sets.
double block_deviation(const BlockMatrices& x, const BlockMatrices& y);

/// The distinguished coefficients a_r = ((s_{r+1}-s_{r+2})^2 - s_r^2)/(2 s_r)
/// annihilating the third block.
InvariantCoeffs omega0(ModelName model, const MetricParams& s);

struct Interval {
  double lo = 0.0, hi = 0.0;
  bool empty() const { return hi < lo; }
  double width() const { return hi - lo; }
};

/// Per r, the set of a_r keeping the second and third blocks simultaneously
/// positive-semidefinite; the right endpoint is omega0's a_r and the interval
/// is nonempty exactly when p_r(s) >= 0.
std::array<Interval, 3> admissible_intervals(ModelName model, const MetricParams& s);

/// Irreducible-representation dimensions of the three block families.
std::array<int, 3> block_multiplicities(ModelName model);

/// Eigenvalues of the blocks repeated with their isotypic multiplicities;
/// sorted ascending.  Matches the spectrum of the full operator.
std::vector<double> block_spectrum(const BlockMatrices& B);

/// Infinitesimal action of A (a matrix on m) on a 4-form.
FourForm lie_derivative(const Eigen::MatrixXd& A, const FourForm& w);

/// Max-norm of the h_basis action on w; invariant forms give ~0.
double invariance_residual(ModelName model, const FourForm& w);

}  // namespace wallach
