#include <random>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qrf/errors.hpp"
#include "qrf/imperfect.hpp"

using namespace qrf;
using namespace qrf::testing;

namespace {

const double kS2 = 1.0 / std::sqrt(2.0);
const double kS3 = 1.0 / std::sqrt(3.0);

Vec3 valid_seed() { return {kS2, kI * kS2, 0.0}; }

// |alpha + beta + gamma| = 1 together with unit norm is the vanishing cross term.
Vec3 random_valid_seed(Rng& rng) {
  std::normal_distribution<double> n;
  const double theta = std::uniform_real_distribution<double>(0.0, 2.0 * std::acos(-1.0))(rng);
  const Complex along = std::polar(kS3, theta);
  Vec3 w{Complex{n(rng), n(rng)}, Complex{n(rng), n(rng)}, Complex{n(rng), n(rng)}};
  const Complex mean = (w[0] + w[1] + w[2]) / 3.0;
  double nw = 0.0;
  for (auto& z : w) {
    z -= mean;
    nw += std::norm(z);
  }
  const double scale = std::sqrt(2.0 / 3.0 / nw);
  Vec3 s;
  for (int i = 0; i < 3; ++i) s[i] = along * kS3 + w[i] * scale;
  return s;
}

// Kinematical product state averaged over S3; C, A, B in tensor order.
PhysicalState paper_physical() {
  const std::vector<Complex> c = {1.0, 0.0, 0.0};
  const std::vector<Complex> a = {kI * kS3, kS3, -kS3};
  const std::vector<Complex> b = {0.0, 0.0, 1.0};
  return group_average(TripartiteVector::product(c, a, b)).physical;
}

double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

double collision(const std::vector<double>& p) {
  double q = 1.0;
  for (double x : p) q -= x * x;
  return q;
}

ComplexMatrix perm_rep(Element g) {
  const auto& p = s3_permutation(g);
  ComplexMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) m(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(i)) = 1.0;
  return m;
}

}  // namespace

TEST(imperfect, slot_names) {
  EXPECT_EQ(slot_name(1), "C");
  EXPECT_EQ(slot_name(2), "A");
  EXPECT_EQ(slot_name(3), "B");
  EXPECT_THROW(slot_name(4), std::out_of_range);
}

TEST(imperfect, seed_validation) {
  const auto ok = validate_seed(kS2, kI * kS2, 0.0);
  EXPECT_TRUE(ok.valid());
  EXPECT_NEAR(ok.cross_term, 0.0, 1e-15);
  EXPECT_NEAR(ok.norm, 1.0, 1e-15);

  const auto bad = validate_seed(kI * kS3, kS3, -kS3);
  EXPECT_FALSE(bad.valid());
  EXPECT_NEAR(bad.cross_term, -2.0 / 3.0, 1e-15);

  EXPECT_FALSE(validate_seed(1.0, 0.0, 0.0).valid());
  EXPECT_FALSE(validate_seed(0.6, 0.6, 0.0).valid());
  EXPECT_THROW(CoherentStateSystem::make({kI * kS3, kS3, -kS3}), DomainError);
  EXPECT_NO_THROW(CoherentStateSystem::unvalidated({kI * kS3, kS3, -kS3}));
}

TEST(imperfect, representation_is_homomorphism) {
  const auto g = s3();
  for (Element a = 0; a < 6; ++a) {
    EXPECT_LT(max_abs_diff(s3_representation(a), perm_rep(a)), 1e-15);
    for (Element b = 0; b < 6; ++b) {
      EXPECT_LT(max_abs_diff(s3_representation(a) * s3_representation(b), s3_representation(g->compose(a, b))),
                1e-15);
    }
  }
}

TEST(imperfect, orientation_states_are_covariant) {
  const auto seed = valid_seed();
  const auto css = CoherentStateSystem::make(seed);
  for (Element g = 0; g < 6; ++g) {
    const auto v = perm_rep(g).apply(std::vector<Complex>(seed.begin(), seed.end()));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LT(std::abs(css.orientation_state(g)[i] - v[i]), 1e-15);
  }
}

TEST(imperfect, resolution_of_identity_for_valid_seeds) {
  auto rng = make_rng(61);
  for (int i = 0; i < 100; ++i) {
    const auto seed = random_valid_seed(rng);
    ASSERT_TRUE(validate_seed(seed[0], seed[1], seed[2]).valid());
    const auto css = CoherentStateSystem::make(seed);
    ComplexMatrix f(3, 3);
    for (Element g = 0; g < 6; ++g) {
      const auto v = perm_rep(g).apply(std::vector<Complex>(seed.begin(), seed.end()));
      f += ComplexMatrix::outer(v);
    }
    EXPECT_LT(max_abs_diff(f, ComplexMatrix::identity(3) * Complex{2.0}), 1e-12);
    EXPECT_LT(max_abs_diff(css.frame_operator(), f), 1e-12);
    ASSERT_TRUE(css.resolution_constant().has_value());
    EXPECT_NEAR(*css.resolution_constant(), 2.0, 1e-12);
  }
  EXPECT_FALSE(CoherentStateSystem::unvalidated({kI * kS3, kS3, -kS3}).resolution_constant().has_value());
}

TEST(imperfect, averaging_projector_properties) {
  const auto& p = averaging_projector();
  ASSERT_EQ(p.rows(), 27u);
  EXPECT_LT(max_abs_diff(p * p, p), 1e-12);
  EXPECT_LT(max_abs_diff(p.adjoint(), p), 1e-12);
  EXPECT_NEAR(p.trace().real(), 5.0, 1e-12);
  std::size_t rank = 0;
  for (double s : singular_values(p)) rank += s > 1e-10 ? 1 : 0;
  EXPECT_EQ(rank, kPhysicalDimension);

  const auto& b = physical_basis();
  ASSERT_EQ(b.cols(), kPhysicalDimension);
  EXPECT_LT(max_abs_diff(b.adjoint() * b, ComplexMatrix::identity(5)), 1e-12);
  EXPECT_LT(max_abs_diff(b * b.adjoint(), p), 1e-12);
}

TEST(imperfect, physical_state_invariance) {
  const auto phys = paper_physical();
  EXPECT_TRUE(is_group_invariant(phys.vector()));
  EXPECT_NEAR(phys.norm(), 1.0, 1e-12);
  const std::vector<Complex> e0 = {1.0, 0.0, 0.0};
  const auto prod = TripartiteVector::product(e0, e0, std::vector<Complex>{0.0, 1.0, 0.0});
  EXPECT_FALSE(is_group_invariant(prod));
  EXPECT_THROW(PhysicalState{prod}, ContractError);
}

TEST(imperfect, group_average_errors) {
  const std::vector<Complex> e0 = {1.0, 0.0, 0.0};
  EXPECT_THROW(group_average(TripartiteVector::product(e0, e0, std::vector<Complex>{2.0, 0.0, 0.0})),
               NormalizationError);
  std::vector<Complex> v(27);
  v[(0 * 3 + 0) * 3 + 1] = kS2;
  v[(0 * 3 + 0) * 3 + 2] = -kS2;
  EXPECT_THROW(group_average(TripartiteVector({3, 3, 3}, v)), DegenerateError);
}

TEST(imperfect, paper_relative_states) {
  const auto css = CoherentStateSystem::make(valid_seed());
  const auto phys = paper_physical();
  const auto rel_c = reduce(phys, css, 1, 0);
  const auto rel_a = reduce(phys, css, 2, 0);
  const double k = std::sqrt(3.0) / 6.0;
  const ComplexMatrix want_c = ComplexMatrix{{kI, kI, 0.0}, {1.0, -1.0, 2.0}, {-kI, 1.0, Complex{-1.0, 1.0}}} * k;
  const ComplexMatrix want_a =
      ComplexMatrix{{0.0, 2.0 * kI, 0.0}, {0.0, 0.0, 2.0}, {Complex{-1.0, -1.0}, Complex{1.0, 1.0}, 0.0}} * k;
  EXPECT_LT(max_abs_diff(canonical_phase(rel_c.coeffs), canonical_phase(want_c)), 1e-10);
  EXPECT_LT(max_abs_diff(canonical_phase(rel_a.coeffs), canonical_phase(want_a)), 1e-10);
  EXPECT_NEAR(rel_c.norm(), 1.0, 1e-12);
  EXPECT_EQ(rel_c.systems()[0], "A");
  EXPECT_EQ(rel_c.systems()[1], "B");
  EXPECT_EQ(rel_a.systems()[0], "C");
  EXPECT_EQ(rel_a.state().frame(), "A");
}

TEST(imperfect, relative_states_transform_covariantly) {
  const auto css = CoherentStateSystem::make(valid_seed());
  const auto phys = paper_physical();
  const auto e = reduce(phys, css, 1, 0);
  for (Element g = 0; g < 6; ++g) {
    const auto u = perm_rep(g);
    const auto rg = reduce(phys, css, 1, g);
    EXPECT_LT(max_abs_diff(rg.coeffs, u * e.coeffs * u.transpose()), 1e-12);
  }
}

TEST(imperfect, frame_change_matches_direct_reduction) {
  const auto css = CoherentStateSystem::make(valid_seed());
  const auto phys = paper_physical();
  const auto rel_c = reduce(phys, css, 1, 0);
  const auto rel_a = reduce(phys, css, 2, 0);
  EXPECT_LT(max_abs_diff(imperfect_frame_change(rel_a, css, 1, 0).coeffs, rel_c.coeffs), 1e-10);
  EXPECT_LT(max_abs_diff(imperfect_frame_change(rel_c, css, 2, 0).coeffs, rel_a.coeffs), 1e-10);
  EXPECT_LT(max_abs_diff(imperfect_frame_change(rel_a, css, 2, 0).coeffs, rel_a.coeffs), 1e-10);
  const auto inv = inverse_reduce(rel_a, css);
  EXPECT_LT(inv.residual, 1e-10);
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < 27; ++i) overlap += std::conj(inv.physical.vector().amplitudes()[i]) * phys.vector().amplitudes()[i];
  EXPECT_NEAR(std::abs(overlap), inv.physical.norm() * phys.norm(), 1e-10);
}

TEST(imperfect, paper_report_matches_marginal_oracle) {
  const auto css = CoherentStateSystem::make(valid_seed());
  const auto phys = paper_physical();
  const auto rep = theorem_failure_report(reduce(phys, css, 2, 0), reduce(phys, css, 1, 0));
  const std::vector<double> before = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  const std::vector<double> after = {2.0 / 12.0, 6.0 / 12.0, 4.0 / 12.0};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(rep.diagonal_before[i], before[i], 1e-10);
    EXPECT_NEAR(rep.diagonal_after[i], after[i], 1e-10);
  }
  EXPECT_FALSE(rep.diagonals_permutation_equal);
  // For a pure state C_e + E_e is the Shannon entropy of the first-slot marginal.
  EXPECT_NEAR(rep.entropy.delta_sum, shannon(after) - shannon(before), 1e-10);
  EXPECT_NEAR(rep.entropy.delta_sum, -0.087208023960758, 1e-12);
  EXPECT_NEAR(rep.entropy.delta_sum, -0.0872, 5e-4);
  EXPECT_NEAR(rep.l2.delta_sum, collision(after) - collision(before), 1e-12);
  EXPECT_NEAR(rep.l2.delta_sum, -1.0 / 18.0, 1e-12);
  EXPECT_FALSE(rep.entropy.conserved);
}

TEST(imperfect, inverse_reduction_rejects_states_outside_image) {
  const auto css = CoherentStateSystem::make(valid_seed());
  auto rng = make_rng(62);
  RelativeState rel{gaussian_matrix(3, 3, rng), 1, 0};
  EXPECT_THROW(inverse_reduce(rel, css), NotInImageError);
  RelativeState wrong{ComplexMatrix(2, 2), 1, 0};
  EXPECT_THROW(inverse_reduce(wrong, css), ShapeError);
}

TEST(imperfect, parameterized_state_all_equal_orbit) {
  const auto seed = valid_seed();
  const auto rel = build_parameterized_relative_state({1.0, 0.0, 0.0, 0.0, 0.0}, seed);
  EXPECT_EQ(rel.frame_slot, 2);
  EXPECT_EQ(rel.orientation, 0);
  ComplexMatrix want(3, 3);
  for (std::size_t i = 0; i < 3; ++i) want(i, i) = std::conj(seed[i]);
  EXPECT_LT(max_abs_diff(rel.coeffs, want), 1e-15);
  const auto css = CoherentStateSystem::make(seed);
  EXPECT_LT(inverse_reduce(rel, css).residual, 1e-10);
  EXPECT_THROW(build_parameterized_relative_state({0.0, 0.0, 0.0, 0.0, 0.0}, seed), DegenerateError);
}

TEST(imperfect, parameterized_states_lie_in_image) {
  const auto seed = valid_seed();
  const auto css = CoherentStateSystem::make(seed);
  auto rng = make_rng(63);
  for (int i = 0; i < 20; ++i) {
    const auto p = gaussian_vector(5, rng);
    const auto rel = build_parameterized_relative_state({p[0], p[1], p[2], p[3], p[4]}, seed);
    EXPECT_NEAR(rel.norm(), 1.0, 1e-12);
    EXPECT_LT(inverse_reduce(rel, css).residual, 1e-8);
  }
}

TEST(imperfect, canonical_phase_removes_global_phase) {
  auto rng = make_rng(64);
  const auto m = gaussian_matrix(3, 3, rng);
  const auto a = canonical_phase(m);
  const auto b = canonical_phase(m * std::polar(1.0, 1.234));
  EXPECT_LT(max_abs_diff(a, b), 1e-14);
  double mag = 0.0;
  Complex top = 0.0;
  for (auto z : a.entries()) {
    if (std::abs(z) > mag) {
      mag = std::abs(z);
      top = z;
    }
  }
  EXPECT_NEAR(top.imag(), 0.0, 1e-14);
  EXPECT_GT(top.real(), 0.0);
  EXPECT_EQ(max_abs_diff(canonical_phase(ComplexMatrix(2, 2)), ComplexMatrix(2, 2)), 0.0);
}
