#include "wallach/forms.hpp"

#include "wallach/classify.hpp"

#include <doctest.h>

#include <random>

using namespace wallach;

namespace {

MetricParams random_params(std::mt19937& rng, double lo = 0.5, double hi = 2.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return MetricParams(d(rng), d(rng), d(rng));
}

InvariantCoeffs random_coeffs(ModelName model, std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  InvariantCoeffs c;
  for (int r = 0; r < 3; ++r) {
    c.a[r] = d(rng);
    if (model == ModelName::W12) c.b[r] = d(rng);
  }
  return c;
}

const ModelName kBlockModels[] = {ModelName::W6, ModelName::W12, ModelName::W24};

}  // namespace

TEST_CASE("basis 4-forms match their defining quadruples") {
  // xi_1 = 1_2 ^ i_2 ^ 1_3 ^ i_3
  const Model& m6 = Model::get(ModelName::W6);
  const WedgeSpace& ws6 = WedgeSpace::get(m6.dim_m());
  const FourForm xi1 = xi_form(0);
  CHECK(xi1.coeffs[ws6.quad_index(m6.m_index(1, 0), m6.m_index(1, 1), m6.m_index(2, 0),
                                  m6.m_index(2, 1))] == 1.0);
  CHECK(xi1.coeffs.cwiseAbs().sum() == 1.0);

  // psi_1 = 1_1 ^ i_1 ^ j_1 ^ k_1
  const Model& m12 = Model::get(ModelName::W12);
  const WedgeSpace& ws12 = WedgeSpace::get(m12.dim_m());
  const FourForm psi1 = psi_form(0);
  CHECK(psi1.coeffs[ws12.quad_index(0, 1, 2, 3)] == 1.0);
  CHECK(psi1.coeffs.cwiseAbs().sum() == 1.0);

  // zero coefficients give the zero form
  const FourForm z = invariant_form(ModelName::W24, InvariantCoeffs{});
  CHECK(z.coeffs.norm() == 0.0);
}

TEST_CASE("all invariant basis forms pass the infinitesimal invariance test") {
  for (int r = 0; r < 3; ++r) {
    CHECK(invariance_residual(ModelName::W6, xi_form(r)) <= 1e-10);
    CHECK(invariance_residual(ModelName::W12, phi_form(r)) <= 1e-10);
    CHECK(invariance_residual(ModelName::W12, psi_form(r)) <= 1e-10);
    CHECK(invariance_residual(ModelName::W24, zeta_form(r)) <= 1e-10);
  }
}

TEST_CASE("a single flipped sign in the zeta table breaks invariance") {
  auto lines = zeta_lines();
  lines[10].inner2 = -lines[10].inner2;
  const FourForm bad = form_from_lines(ModelName::W24, std::span<const FormLine>(lines), 0);
  CHECK(invariance_residual(ModelName::W24, bad) > 1e-3);
}

TEST_CASE("zeta table checksum is frozen") {
  CHECK(zeta_checksum() == 10101391987330622575ull);
}

TEST_CASE("projection chain: zeta -> phi -> xi, exactly") {
  for (int r = 0; r < 3; ++r) {
    const FourForm phi = project_form(zeta_form(r), ModelName::W24, ModelName::W12);
    CHECK((phi.coeffs - phi_form(r).coeffs).cwiseAbs().maxCoeff() == 0.0);
    const FourForm xi = project_form(phi_form(r), ModelName::W12, ModelName::W6);
    CHECK((xi.coeffs - xi_form(r).coeffs).cwiseAbs().maxCoeff() == 0.0);
  }
  // zero projects to zero
  const FourForm z = project_form(FourForm(24), ModelName::W24, ModelName::W6);
  CHECK(z.coeffs.norm() == 0.0);
}

TEST_CASE("representative lists: counts, unit norms, orthogonality") {
  for (ModelName model : kBlockModels) {
    const RepresentativeSet set = representatives(model);
    const std::size_t expected = model == ModelName::W12 ? 12 : 9;
    CHECK(set.reps.size() == expected);
    for (std::size_t i = 0; i < set.reps.size(); ++i) {
      CHECK(set.reps[i].v.coeffs.norm() == doctest::Approx(1.0).epsilon(1e-12));
      for (std::size_t j = i + 1; j < set.reps.size(); ++j)
        CHECK(set.reps[i].v.coeffs.dot(set.reps[j].v.coeffs) ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
  }
  // block dimension audit: sum of irrep dims over all copies equals dim Lambda^2
  for (ModelName model : kBlockModels) {
    const RepresentativeSet set = representatives(model);
    int total = 0;
    for (const auto& rep : set.reps) total += rep.irrep_dim;
    CHECK(total == WedgeSpace::get(Model::get(model).dim_m()).dim2());
  }
}

TEST_CASE("central oracle: restriction equals the closed-form blocks") {
  std::mt19937 rng(20260810);
  for (ModelName model : kBlockModels) {
    for (int trial = 0; trial < 20; ++trial) {
      const MetricParams s = random_params(rng);
      const InvariantCoeffs c = random_coeffs(model, rng);
      const CurvatureOperator R = curvature_operator(model, s);
      const SymOp M = modified_operator(R, invariant_form(model, c));
      const BlockMatrices computed = restrict_blocks(M, model, s);
      const BlockMatrices closed = closed_form_blocks(model, s, c);
      CHECK(block_deviation(computed, closed) <= 1e-9);
    }
  }
}

TEST_CASE("restriction of the zero operator is zero") {
  const Model& mdl = Model::get(ModelName::W6);
  const SymOp Z = SymOp::Zero(WedgeSpace::get(mdl.dim_m()).dim2(),
                              WedgeSpace::get(mdl.dim_m()).dim2());
  const BlockMatrices B = restrict_blocks(Z, ModelName::W6, MetricParams(1, 2, 3));
  CHECK(B.R1.cwiseAbs().maxCoeff() == 0.0);
  CHECK(B.R2.cwiseAbs().maxCoeff() == 0.0);
  CHECK(B.R3.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spectrum factorization: block spectra with multiplicities") {
  std::mt19937 rng(7);
  for (ModelName model : kBlockModels) {
    const MetricParams s = random_params(rng);
    const InvariantCoeffs c = random_coeffs(model, rng);
    const CurvatureOperator R = curvature_operator(model, s);
    const SymOp M = modified_operator(R, invariant_form(model, c));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    const std::vector<double> blocks =
        block_spectrum(restrict_blocks(M, model, s, 1e-8, /*unit_frame=*/true));
    REQUIRE(static_cast<int>(blocks.size()) == es.eigenvalues().size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
      CHECK(es.eigenvalues()[static_cast<int>(i)] ==
            doctest::Approx(blocks[i]).epsilon(1e-7).scale(1.0));
  }
}

TEST_CASE("omega0 coefficients and identities") {
  CHECK(omega0(ModelName::W24, MetricParams(1, 1, 1)).a ==
        Eigen::Vector3d(-0.5, -0.5, -0.5));
  const InvariantCoeffs c123 = omega0(ModelName::W6, MetricParams(1, 2, 3));
  CHECK(c123.a[0] == doctest::Approx(0.0));
  CHECK(c123.a[1] == doctest::Approx(0.0));
  CHECK(c123.a[2] == doctest::Approx(-4.0 / 3.0));

  std::mt19937 rng(99);
  for (ModelName model : kBlockModels) {
    for (int trial = 0; trial < 20; ++trial) {
      const MetricParams s = random_params(rng);
      const BlockMatrices B = closed_form_blocks(model, s, omega0(model, s));
      CHECK(B.R3.cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("W24 identities at omega0") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const MetricParams s = random_params(rng);
    const InvariantCoeffs c0 = omega0(ModelName::W24, s);
    const BlockMatrices B = closed_form_blocks(ModelName::W24, s, c0);
    const Eigen::Vector3d p = p_polys(s);
    for (int r = 0; r < 3; ++r)
      CHECK(B.R2[r] == doctest::Approx(2.0 * p[r] / s.at(r)).epsilon(1e-10));
    // kernel vector of the first block
    const Eigen::Vector3d v((s.s2 - s.s3) / s.s1, (s.s3 - s.s1) / s.s2, (s.s1 - s.s2) / s.s3);
    CHECK((B.R1 * v).cwiseAbs().maxCoeff() <= 1e-10 * (1.0 + B.R1.cwiseAbs().maxCoeff()));
  }
  // frozen example: s=(1,1,1) gives the all-4 matrix with eigenvalues 12,0,0
  const BlockMatrices B = closed_form_blocks(ModelName::W24, MetricParams(1, 1, 1),
                                             omega0(ModelName::W24, MetricParams(1, 1, 1)));
  CHECK((B.R1 - Eigen::MatrixXd::Constant(3, 3, 4.0)).cwiseAbs().maxCoeff() <= 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B.R1);
  CHECK(es.eigenvalues()[0] == doctest::Approx(0.0).scale(1.0));
  CHECK(es.eigenvalues()[1] == doctest::Approx(0.0).scale(1.0));
  CHECK(es.eigenvalues()[2] == doctest::Approx(12.0));
  CHECK(B.R2 == Eigen::Vector3d(2, 2, 2));
}

TEST_CASE("W12 determinant identity at omega0") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const MetricParams s = random_params(rng);
    const BlockMatrices B = closed_form_blocks(ModelName::W12, s, omega0(ModelName::W12, s));
    const double sc = s_scalar(s);
    for (int r = 0; r < 3; ++r) {
      const double det = B.R1.block(2 * r, 2 * r, 2, 2).determinant();
      const double d = s.at((r + 1) % 3) - s.at((r + 2) % 3);
      CHECK(det == doctest::Approx(4.0 * sc * d * d / (s.at(r) * s.at(r))).epsilon(1e-9).scale(1.0));
    }
  }
  // spelled-out case s = (1,2,3): the r=1 block has determinant 32
  const BlockMatrices B = closed_form_blocks(ModelName::W12, MetricParams(1, 2, 3),
                                             InvariantCoeffs{});
  CHECK(B.R1.block(0, 0, 2, 2).determinant() == doctest::Approx(32.0));
}

TEST_CASE("admissible intervals") {
  // W24 at (1,1,1): right endpoint -1/2 (omega0), width 2 p_r / (7 s_r) = 2/7
  const auto iv = admissible_intervals(ModelName::W24, MetricParams(1, 1, 1));
  for (int r = 0; r < 3; ++r) {
    CHECK(iv[static_cast<std::size_t>(r)].hi == doctest::Approx(-0.5));
    CHECK(iv[static_cast<std::size_t>(r)].width() == doctest::Approx(2.0 / 7.0));
  }
  // (1,1,2): p_3 < 0, interval empty exactly for r=3
  const auto iv2 = admissible_intervals(ModelName::W24, MetricParams(1, 1, 2));
  CHECK(!iv2[0].empty());
  CHECK(!iv2[1].empty());
  CHECK(iv2[2].empty());
  // width vanishes exactly on p_r = 0 for every model
  std::mt19937 rng(31);
  for (ModelName model : kBlockModels) {
    for (int trial = 0; trial < 20; ++trial) {
      const MetricParams s = random_params(rng);
      const auto ivs = admissible_intervals(model, s);
      const Eigen::Vector3d p = p_polys(s);
      const double factor = model == ModelName::W6 ? 2.0 : 3.0;
      for (int r = 0; r < 3; ++r) {
        const double expect = model == ModelName::W24 ? 2.0 * p[r] / (7.0 * s.at(r))
                                                      : p[r] / (factor * s.at(r));
        CHECK(ivs[static_cast<std::size_t>(r)].width() ==
              doctest::Approx(expect).epsilon(1e-9).scale(1.0));
      }
    }
  }
}

TEST_CASE("equivariance: the operator commutes with the isotropy action") {
  std::mt19937 rng(41);
  for (ModelName model : kBlockModels) {
    const Model& mdl = Model::get(model);
    const MetricParams s = random_params(rng);
    const CurvatureOperator R = curvature_operator(model, s);
    const WedgeSpace& ws = WedgeSpace::get(mdl.dim_m());
    for (int hi = mdl.dim_m(); hi < mdl.dim_g(); hi += 5) {
      Eigen::VectorXd h = Eigen::VectorXd::Zero(mdl.dim_g());
      h[hi] = 1.0;
      const Eigen::MatrixXd A = mdl.ad_on_m(h);
      Eigen::MatrixXd A2 = Eigen::MatrixXd::Zero(ws.dim2(), ws.dim2());
      for (int q = 0; q < ws.dim2(); ++q) {
        const auto& [c, d] = ws.pair(q);
        for (int t = 0; t < mdl.dim_m(); ++t) {
          if (A(t, c) != 0.0 && t != d) {
            std::array<int, 2> pr = {t, d};
            const int sg = WedgeSpace::sort_signed(pr);
            A2(ws.pair_index(pr[0], pr[1]), q) += sg * A(t, c);
          }
          if (A(t, d) != 0.0 && c != t) {
            std::array<int, 2> pr = {c, t};
            const int sg = WedgeSpace::sort_signed(pr);
            A2(ws.pair_index(pr[0], pr[1]), q) += sg * A(t, d);
          }
        }
      }
      CHECK((A2 * R.matrix - R.matrix * A2).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}
