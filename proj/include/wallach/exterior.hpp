#pragma once

#include <Eigen/Dense>

#include <array>
#include <utility>
#include <vector>

namespace wallach {

/// Symmetric operator on Lambda^2, stored over an orthonormal wedge basis.
using SymOp = Eigen::MatrixXd;

/// Index bookkeeping for the wedge bases e_a^e_b (a<b) of Lambda^2 R^n and
/// e_a^e_b^e_c^e_d (a<b<c<d) of Lambda^4 R^n.
class WedgeSpace {
 public:
  explicit WedgeSpace(int n);

  int n() const { return n_; }
  int dim2() const { return static_cast<int>(pairs_.size()); }
  int dim4() const { return static_cast<int>(quads_.size()); }

  int pair_index(int a, int b) const { return pair_index_[a][b]; }
  const std::array<int, 2>& pair(int idx) const { return pairs_[static_cast<std::size_t>(idx)]; }

  int quad_index(int a, int b, int c, int d) const;  // strictly ascending input
  const std::array<int, 4>& quad(int idx) const { return quads_[static_cast<std::size_t>(idx)]; }

  /// Sorts arbitrary distinct indices; returns the permutation sign,
  /// or 0 when an index repeats.
  static int sort_signed(std::array<int, 4>& q);
  static int sort_signed(std::array<int, 2>& q);

  /// Shared instance per dimension.
  static const WedgeSpace& get(int n);

 private:
  int n_;
  std::vector<std::array<int, 2>> pairs_;
  std::vector<std::array<int, 4>> quads_;
  std::vector<std::vector<int>> pair_index_;
  std::vector<long long> binom_;  // binom_[t*5+k] = C(t,k), t <= n
  long long binom(int t, int k) const;
};

struct Bivector {
  int n = 0;
  Eigen::VectorXd coeffs;  // over the pair basis

  Bivector() = default;
  explicit Bivector(int dim) : n(dim), coeffs(Eigen::VectorXd::Zero(WedgeSpace::get(dim).dim2())) {}
};

struct FourForm {
  int n = 0;
  Eigen::VectorXd coeffs;  // over the quad basis

  FourForm() = default;
  explicit FourForm(int dim) : n(dim), coeffs(Eigen::VectorXd::Zero(WedgeSpace::get(dim).dim4())) {}
};

/// x ^ y for coordinate vectors of length n.
Bivector wedge2(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// beta1 ^ beta2 in Lambda^4.
FourForm wedge22(const Bivector& b1, const Bivector& b2);

/// The symmetric operator <w(X^Y),Z^W> := w(X,Y,Z,W), in the frame of w.
SymOp form_as_operator(const FourForm& w);

/// Cyclic average b(S)(X,Y,Z,W) = (1/3)(<S(X^Y),Z^W> + <S(Y^Z),X^W> + <S(Z^X),Y^W>)
/// as a 4-form over the frame of S.
FourForm bianchi(const SymOp& S, int n);

}  // namespace wallach
