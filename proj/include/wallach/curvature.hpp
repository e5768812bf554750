#pragma once

#include "wallach/exterior.hpp"
#include "wallach/lie.hpp"

#include <iosfwd>

namespace wallach {

/// Metric parameters of g_s.  s_r is the eigenvalue of the metric
/// automorphism P on V_r, i.e. g_s = s_r Q on V_r; the block formulas, the
/// polynomials p_r and the scalar s are all expressed in these parameters.
struct MetricParams {
  double s1 = 1.0, s2 = 1.0, s3 = 1.0;

  MetricParams() = default;
  MetricParams(double a, double b, double c);

  double at(int slot) const { return slot == 0 ? s1 : slot == 1 ? s2 : s3; }
  Eigen::Vector3d vec() const { return {s1, s2, s3}; }
};

/// P scales the V_r component by s_r; p_inverse by 1/s_r.
MVector p_apply(const MetricParams& s, const MVector& v);
MVector p_inverse(const MetricParams& s, const MVector& v);

/// B+-(X,Y) = (1/2)([X,PY] -+ [PX,Y]); B+ is symmetric, B- antisymmetric.
GVector b_plus(const MetricParams& s, const MVector& X, const MVector& Y);
GVector b_minus(const MetricParams& s, const MVector& X, const MVector& Y);

/// <beta(X^Y),Z^W> = (1/4) <[X,Y]_m, [Z,W]_m>_g, in the g-orthonormal wedge
/// frame; positive-semidefinite.
SymOp beta_op(ModelName model, const MetricParams& s);

struct CurvatureOperator {
  ModelName model = ModelName::W3;
  MetricParams s;
  SymOp matrix;  // in the g-orthonormal wedge frame
};

/// Curvature operator of (W, g_s), assembled from the algebraic formula.
/// The parallel path splits wedge-basis rows across threads; both paths
/// compute identical entries.
CurvatureOperator curvature_operator(ModelName model, const MetricParams& s);
SymOp assemble_curvature_serial(ModelName model, const MetricParams& s);
SymOp assemble_curvature_parallel(ModelName model, const MetricParams& s);

/// 4-form given over the Q-orthonormal wedge basis, rescaled into the
/// g-orthonormal frame of the operator matrices.
SymOp form_operator_in_frame(const FourForm& omega_q, ModelName model, const MetricParams& s);

/// R + omega (omega over the Q-orthonormal wedge basis).
SymOp modified_operator(const CurvatureOperator& R, const FourForm& omega_q);

/// Quadratic form of R on the g_s-normalized plane spanned by X and Y.
double sectional_curvature(const CurvatureOperator& R, const MVector& X, const MVector& Y);

/// Bivector coordinates in the g-orthonormal frame of an m-coordinate pair.
Bivector plane_in_frame(ModelName model, const MetricParams& s, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y);

void write_operator_csv(const SymOp& op, std::ostream& os);

}  // namespace wallach
