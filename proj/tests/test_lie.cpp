#include "wallach/lie.hpp"

#include <doctest.h>

#include <random>

using namespace wallach;

namespace {

Eigen::VectorXd random_coords(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

const ModelName kModels[] = {ModelName::W3, ModelName::W6, ModelName::W12, ModelName::W24};

}  // namespace

TEST_CASE("embed_m reproduces the displayed matrices") {
  // (1,0,0) -> entries (2,3) = 1, (3,2) = -1   [1-based]
  const GVector one1 = embed_m(MVector::unit(ModelName::W6, 0, 0));
  CHECK(one1.mat.at(1, 2)[0] == 1.0);
  CHECK(one1.mat.at(2, 1)[0] == -1.0);
  CHECK(mat_norm(one1.mat) == doctest::Approx(std::sqrt(2.0)));

  // (0,i,0) -> entries (1,3) = (3,1) = i
  const GVector i2 = embed_m(MVector::unit(ModelName::W6, 1, 1));
  CHECK(i2.mat.at(0, 2)[1] == 1.0);
  CHECK(i2.mat.at(2, 0)[1] == 1.0);
  CHECK(i2.mat.at(0, 2)[0] == 0.0);

  const GVector zero = embed_m(MVector(ModelName::W6));
  CHECK(mat_norm(zero.mat) == 0.0);
}

TEST_CASE("q_inner on the labeled basis") {
  const GVector one1 = embed_m(MVector::unit(ModelName::W6, 0, 0));
  const GVector i1 = embed_m(MVector::unit(ModelName::W6, 0, 1));
  CHECK(q_inner(one1, one1) == doctest::Approx(1.0));
  CHECK(q_inner(one1, i1) == doctest::Approx(0.0));

  for (ModelName m : kModels) {
    const Model& mdl = Model::get(m);
    for (int a = 0; a < mdl.dim_g(); ++a)
      for (int b = a; b < mdl.dim_g(); ++b)
        CHECK(q_inner(mdl.basis(a), mdl.basis(b)) == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-10));
  }
}

TEST_CASE("hand-computed brackets on W6") {
  const GVector one1 = embed_m(MVector::unit(ModelName::W6, 0, 0));
  const GVector one2 = embed_m(MVector::unit(ModelName::W6, 1, 0));
  const GVector one3 = embed_m(MVector::unit(ModelName::W6, 2, 0));
  const GVector i1 = embed_m(MVector::unit(ModelName::W6, 0, 1));

  // [1_2, 1_3] = -1_1
  const GVector b23 = bracket(one2, one3);
  CHECK(mat_norm(b23.mat - (-1.0 * one1.mat)) == doctest::Approx(0.0));

  // [1_1, i_1] = diag(0, 2i, -2i), an element of the torus algebra
  const GVector b1i = bracket(one1, i1);
  CHECK(b1i.mat.at(0, 0)[1] == doctest::Approx(0.0));
  CHECK(b1i.mat.at(1, 1)[1] == doctest::Approx(2.0));
  CHECK(b1i.mat.at(2, 2)[1] == doctest::Approx(-2.0));
  for (int r = 0; r < 3; ++r) CHECK(norm2(project_m(b1i).x[static_cast<std::size_t>(r)]) == doctest::Approx(0.0));

  // [X, X] = 0
  CHECK(mat_norm(bracket(i1, i1).mat) == doctest::Approx(0.0));
}

TEST_CASE("projections reconstruct and annihilate as expected") {
  const MVector v = MVector::unit(ModelName::W12, 1, 2);
  const GVector g = embed_m(v);
  CHECK(m_coords(project_m(g)) == m_coords(v));

  // diagonal su(3) element projects to zero in m
  GVector d(ModelName::W6);
  d.mat.at(0, 0)[1] = 1.0;
  d.mat.at(1, 1)[1] = -1.0;
  const MVector dm = project_m(d);
  for (int r = 0; r < 3; ++r) CHECK(norm2(dm.x[static_cast<std::size_t>(r)]) == 0.0);

  // project_m + project_h reconstructs
  const GVector one1 = embed_m(MVector::unit(ModelName::W6, 0, 0));
  const GVector i1 = embed_m(MVector::unit(ModelName::W6, 0, 1));
  const GVector mix = bracket(one1, i1);
  const GVector back = embed_m(project_m(mix));
  const GVector h = project_h(mix);
  CHECK(mat_norm((back.mat + h.mat) - mix.mat) == doctest::Approx(0.0));
}

TEST_CASE("h_basis dimensions and orthonormality") {
  CHECK(h_basis(ModelName::W3).size() == 0);
  CHECK(h_basis(ModelName::W6).size() == 2);
  CHECK(h_basis(ModelName::W12).size() == 9);
  CHECK(h_basis(ModelName::W24).size() == 28);

  const auto hb = h_basis(ModelName::W12);
  for (std::size_t a = 0; a < hb.size(); ++a)
    for (std::size_t b = a; b < hb.size(); ++b)
      CHECK(q_inner(hb[a], hb[b]) == doctest::Approx(a == b ? 1.0 : 0.0));
}

TEST_CASE("g2 as the derivation algebra of the octonions") {
  const auto& g2 = g2_basis();
  CHECK(g2.size() == 14);
  for (const DerMat& d : g2) {
    CHECK((d + d.transpose()).cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-10));
  }
  // closure under the matrix commutator: [D1,D2] stays in the span
  Eigen::MatrixXd span(14, 49);
  for (int k = 0; k < 14; ++k)
    for (int p = 0; p < 7; ++p)
      for (int q = 0; q < 7; ++q) span(k, 7 * p + q) = g2[static_cast<std::size_t>(k)](p, q);
  const Eigen::MatrixXd P = span.transpose() * (span * span.transpose()).inverse() * span;
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, 13);
  for (int trial = 0; trial < 30; ++trial) {
    const DerMat c = g2[static_cast<std::size_t>(pick(rng))] * g2[static_cast<std::size_t>(pick(rng))] -
                     g2[static_cast<std::size_t>(pick(rng))] * g2[static_cast<std::size_t>(pick(rng))];
    // commutator of two derivations is a derivation: check for a matched pair
    const DerMat a = g2[0] * g2[1] - g2[1] * g2[0];
    Eigen::VectorXd v(49);
    for (int p = 0; p < 7; ++p)
      for (int q = 0; q < 7; ++q) v[7 * p + q] = a(p, q);
    CHECK((P * v - v).norm() == doctest::Approx(0.0).epsilon(1e-9));
    (void)c;
  }
}

TEST_CASE("Jacobi identity on all models") {
  std::mt19937 rng(101);
  for (ModelName m : kModels) {
    const Model& mdl = Model::get(m);
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::VectorXd x = random_coords(mdl.dim_g(), rng);
      const Eigen::VectorXd y = random_coords(mdl.dim_g(), rng);
      const Eigen::VectorXd z = random_coords(mdl.dim_g(), rng);
      const Eigen::VectorXd jac = mdl.bracket_vec(mdl.bracket_vec(x, y), z) +
                                  mdl.bracket_vec(mdl.bracket_vec(y, z), x) +
                                  mdl.bracket_vec(mdl.bracket_vec(z, x), y);
      CHECK(jac.norm() <= 1e-10 * (1.0 + x.norm() * y.norm() * z.norm()));
    }
  }
}

TEST_CASE("Q is ad-invariant") {
  std::mt19937 rng(102);
  for (ModelName m : kModels) {
    const Model& mdl = Model::get(m);
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::VectorXd x = random_coords(mdl.dim_g(), rng);
      const Eigen::VectorXd y = random_coords(mdl.dim_g(), rng);
      const Eigen::VectorXd z = random_coords(mdl.dim_g(), rng);
      const double v = mdl.bracket_vec(z, x).dot(y) + x.dot(mdl.bracket_vec(z, y));
      CHECK(std::abs(v) <= 1e-10 * (1.0 + x.norm() * y.norm() * z.norm()));
    }
  }
}

TEST_CASE("bracket grading over the slots") {
  for (ModelName m : kModels) {
    const Model& mdl = Model::get(m);
    const int d = mdl.algebra().dim();
    for (int i = 0; i < mdl.dim_m(); ++i)
      for (int j = i + 1; j < mdl.dim_m(); ++j) {
        const Eigen::VectorXd& row = mdl.bracket_row(i, j);
        const int ri = mdl.slot_of(i), rj = mdl.slot_of(j);
        if (ri == rj) {
          // [V_r, V_r] lies in h
          CHECK(row.head(mdl.dim_m()).norm() == doctest::Approx(0.0).epsilon(1e-10));
        } else {
          // [V_{r+1}, V_{r+2}] lies in V_r
          const int rk = 3 - ri - rj;
          for (int k = 0; k < mdl.dim_g(); ++k) {
            const bool allowed = k < mdl.dim_m() && mdl.slot_of(k) == rk;
            if (!allowed) CHECK(std::abs(row[k]) <= 1e-10);
          }
          (void)d;
        }
      }
  }
}

TEST_CASE("h acts on m") {
  for (ModelName m : kModels) {
    const Model& mdl = Model::get(m);
    for (int hi = mdl.dim_m(); hi < mdl.dim_g(); ++hi)
      for (int j = 0; j < mdl.dim_m(); ++j) {
        const Eigen::VectorXd r = mdl.bracket_coords(hi, j);
        CHECK(r.tail(mdl.dim_h()).norm() <= 1e-12 * (1.0 + r.norm()));
      }
  }
}

TEST_CASE("f4 closes on 52 dimensions") {
  const Model& mdl = Model::get(ModelName::W24);
  CHECK(mdl.dim_g() == 52);
  CHECK(mdl.dim_h() == 28);
  CHECK(mdl.dim_m() == 24);
}

TEST_CASE("totally geodesic chain: bracket pairings agree across models") {
  // For basis labels that live in a smaller algebra, <[e_i,e_j],[e_k,e_l]>_Q
  // must agree with the value computed in the smaller model.
  struct Pair {
    ModelName small, big;
  };
  const Pair chain[] = {{ModelName::W3, ModelName::W6},
                        {ModelName::W6, ModelName::W12},
                        {ModelName::W12, ModelName::W24}};
  for (const auto& [small, big] : chain) {
    const Model& ms = Model::get(small);
    const Model& mb = Model::get(big);
    const int ds = ms.algebra().dim();
    auto lift = [&](int idx) { return mb.m_index(ms.slot_of(idx), ms.unit_of(idx)); };
    for (int i = 0; i < ms.dim_m(); ++i)
      for (int j = i + 1; j < ms.dim_m(); ++j)
        for (int k = 0; k < ms.dim_m(); ++k)
          for (int l = k + 1; l < ms.dim_m(); ++l) {
            const double vs = ms.bracket_row(i, j).dot(ms.bracket_row(k, l));
            const double vb = mb.bracket_row(lift(i), lift(j)).dot(mb.bracket_row(lift(k), lift(l)));
            CHECK(vs == doctest::Approx(vb).epsilon(1e-9));
          }
    (void)ds;
  }
}
