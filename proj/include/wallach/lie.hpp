#pragma once

#include "wallach/algebra.hpp"

#include <Eigen/Dense>

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace wallach {

enum class ModelName { W3, W6, W12, W24 };

AlgebraTag model_algebra(ModelName m);
const char* model_label(ModelName m);
ModelName parse_model(const std::string& name);

/// 3x3 matrix over one of the division algebras.  Products are computed
/// entrywise with the algebra multiplication; no triple products are formed,
/// so nonassociativity of the octonions never enters silently.
struct Mat3 {
  AlgebraTag tag{};
  std::array<AlgElem, 9> e{};

  Mat3() = default;
  explicit Mat3(AlgebraTag t) : tag(t) {
    for (auto& x : e) x = AlgElem(t);
  }

  AlgElem& at(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }
  const AlgElem& at(int r, int c) const { return e[static_cast<std::size_t>(3 * r + c)]; }
};

Mat3 operator+(const Mat3& x, const Mat3& y);
Mat3 operator-(const Mat3& x, const Mat3& y);
Mat3 operator*(double a, const Mat3& x);
Mat3 mat_mul(const Mat3& x, const Mat3& y);
Mat3 conj_transpose(const Mat3& x);
Mat3 commutator(const Mat3& x, const Mat3& y);
double mat_dot(const Mat3& x, const Mat3& y);  // sum of entrywise coefficient dots
double mat_norm(const Mat3& x);

using DerMat = Eigen::Matrix<double, 7, 7>;

/// Element of the ambient Lie algebra g.  For the classical models `mat` is a
/// matrix of so(3)/su(3)/sp(3); for W24 it is the sa3(Ca) component and `der`
/// the g2 component of f4 = sa3(Ca) + g2.
struct GVector {
  ModelName model = ModelName::W3;
  Mat3 mat;
  DerMat der = DerMat::Zero();

  GVector() = default;
  explicit GVector(ModelName m) : model(m), mat(model_algebra(m)) {}
};

/// Element of m = V1 + V2 + V3 as a triple over the algebra.
struct MVector {
  ModelName model = ModelName::W3;
  std::array<AlgElem, 3> x;

  MVector() = default;
  explicit MVector(ModelName m) : model(m) {
    for (auto& v : x) v = AlgElem(model_algebra(m));
  }
  static MVector unit(ModelName m, int slot, int u) {
    MVector v(m);
    v.x[static_cast<std::size_t>(slot)] = AlgElem::unit(model_algebra(m), u);
    return v;
  }
};

/// (x1,x2,x3) as the skew-Hermitian matrix with zero diagonal.
GVector embed_m(const MVector& v);

/// The fixed bi-invariant inner product Q.
double q_inner(const GVector& X, const GVector& Y);

/// Lie bracket: matrix commutator for the classical models; the f4 bracket,
/// realized through derivations of the exceptional Jordan algebra, for W24.
GVector bracket(const GVector& X, const GVector& Y);

/// Q-orthogonal projections onto m and h.
MVector project_m(const GVector& X);
GVector project_h(const GVector& X);

/// Q-orthonormal basis of h (empty for W3).
std::vector<GVector> h_basis(ModelName m);

/// Basis of the derivation algebra of the octonions, as skew 7x7 matrices on
/// Im(Ca), orthonormal under (1/8) tr(D E^t).  Solved from the derivation
/// identity; dimension 14.
const std::vector<DerMat>& g2_basis();

/// Cached coordinate-level model: a Q-orthonormal basis of g with the m part
/// first (slot-major, unit within slot), and dense structure-constant rows.
/// Construction happens once; all queries afterwards are read-only.
class Model {
 public:
  static const Model& get(ModelName name);

  ModelName name() const { return name_; }
  AlgebraTag algebra() const { return algebra_; }
  int dim_m() const { return dim_m_; }
  int dim_h() const { return dim_h_; }
  int dim_g() const { return dim_g_; }

  int m_index(int slot, int unit) const { return slot * algebra_.dim() + unit; }
  int slot_of(int idx) const { return idx / algebra_.dim(); }
  int unit_of(int idx) const { return idx % algebra_.dim(); }

  const GVector& basis(int k) const { return basis_[static_cast<std::size_t>(k)]; }

  /// Coordinates of [e_i, e_j] over the full g basis; requires i < j.
  const Eigen::VectorXd& bracket_row(int i, int j) const;

  /// Coordinates of [e_i, e_j] for any i, j.
  Eigen::VectorXd bracket_coords(int i, int j) const;

  /// [x, y] for coordinate vectors of length dim_g (or dim_m, zero-extended).
  Eigen::VectorXd bracket_vec(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// ad_h on m as a dim_m x dim_m matrix, for h a g-coordinate vector.
  Eigen::MatrixXd ad_on_m(const Eigen::VectorXd& h) const;

  /// Structure constants as CSV rows "i,j,k,value" for nonzero Q([e_i,e_j],e_k).
  void write_structure_csv(std::ostream& os) const;

 private:
  explicit Model(ModelName name);

  ModelName name_;
  AlgebraTag algebra_;
  int dim_m_ = 0, dim_h_ = 0, dim_g_ = 0;
  std::vector<GVector> basis_;
  std::vector<Eigen::VectorXd> rows_;  // indexed by pair rank of (i<j) over g
  int pair_rank(int i, int j) const { return i * dim_g_ - i * (i + 1) / 2 + (j - i - 1); }
};

/// Coordinates of an MVector over the labeled m basis.
Eigen::VectorXd m_coords(const MVector& v);
MVector m_from_coords(ModelName m, const Eigen::VectorXd& c);

/// Coordinates of a GVector over the full model basis.
Eigen::VectorXd g_coords(const GVector& X);

}  // namespace wallach
