#pragma once

#include "wallach/lie.hpp"

#include <Eigen/Dense>

namespace wallach::detail {

/// Realization of f4 as the derivation algebra of the exceptional Jordan
/// algebra h3(Ca), in an orthonormal coordinate system on the 27-dimensional
/// algebra (3 diagonal units, 24 rescaled off-diagonal units).  Provides the
/// component maps for the splitting f4 = sa3(Ca) + g2: labels are converted
/// to 27x27 derivation matrices and back.
class F4Context {
 public:
  static const F4Context& get();

  /// Derivation image of an f4 element given by components (sa3 matrix, g2).
  Eigen::MatrixXd to_derivation(const Mat3& sa3_part, const DerMat& g2_part) const;

  /// Inverse of to_derivation on der(J); throws when the residual exceeds tol.
  void decompose(const Eigen::MatrixXd& C, Mat3* sa3_part, DerMat* g2_part) const;

  /// Dimension diagnostics recorded during construction.
  int dim_der_j() const { return static_cast<int>(der_onb_.rows()); }
  int dim_isotropy() const { return dim_h_; }
  double kernel_gap() const { return kernel_gap_; }

 private:
  F4Context();

  // sa3 generator coordinates: 24 off-diagonal (slot-major, unit within slot)
  // followed by 14 diagonal ones matching h_basis(W24) order.
  Mat3 generator(int k) const;

  Eigen::MatrixXd der_onb_;  // 52 x 729, orthonormal rows spanning vec(der(J))
  Eigen::MatrixXd phi_;      // 729 x 38, columns with squared Frobenius norm 24
  Eigen::MatrixXd g2hat_;    // 14 x 729, rows vec(hat(g2Q_k)) / sqrt(24)
  std::vector<DerMat> g2q_;  // Q-orthonormal g2 basis (shared with g2_basis())
  int dim_h_ = 0;
  double kernel_gap_ = 0.0;

  friend struct F4Builder;
};

}  // namespace wallach::detail
