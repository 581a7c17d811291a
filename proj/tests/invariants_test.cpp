#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qrf/errors.hpp"
#include "qrf/invariants.hpp"
#include "qrf/transform.hpp"

using namespace qrf;
using namespace qrf::testing;

namespace {

const QuantifierPair kEntropyPair{Quantifier::kRelativeEntropyCoherence, Quantifier::kEntanglementEntropy};
const QuantifierPair kL2Pair{Quantifier::kL2Coherence, Quantifier::kLinearEntropy};

// Shannon entropy and 1 - sum p^2 of the first-slot marginal.
std::pair<double, double> marginal_invariants(const BipartiteState& psi) {
  double h = 0.0;
  double q = 1.0;
  for (std::size_t r = 0; r < psi.dim_first(); ++r) {
    double p = 0.0;
    for (std::size_t c = 0; c < psi.dim_second(); ++c) p += std::norm(psi.coeffs()(r, c));
    if (p > 0.0) h -= p * std::log(p);
    q -= p * p;
  }
  return {h, q};
}

}  // namespace

TEST(invariants, parse_pair) {
  EXPECT_EQ(parse_pair("C_e,E_e"), kEntropyPair);
  EXPECT_EQ(parse_pair("E_l,C_l2"), kL2Pair);
  EXPECT_THROW(parse_pair("C_e"), std::invalid_argument);
  EXPECT_THROW(parse_pair("C_e,C_l2"), std::invalid_argument);
  EXPECT_THROW(parse_pair("C_e,E_x"), std::invalid_argument);
  EXPECT_EQ(pair_name(kEntropyPair), "C_e,E_e");
  EXPECT_TRUE(is_conserved_pair(kEntropyPair));
  EXPECT_TRUE(is_conserved_pair(kL2Pair));
  EXPECT_FALSE(is_conserved_pair({Quantifier::kL2Coherence, Quantifier::kEntanglementEntropy}));
  EXPECT_EQ(all_pairs(false).size(), 4u);
  EXPECT_EQ(all_pairs(true).size(), 9u);
}

TEST(invariants, z2_example_trades_coherence_for_entanglement) {
  const auto r = conservation_check(plus_zero_state(), kEntropyPair);
  EXPECT_NEAR(r.before.coherence, std::log(2.0), 1e-12);
  EXPECT_NEAR(r.before.entanglement, 0.0, 1e-12);
  EXPECT_NEAR(r.after.coherence, 0.0, 1e-12);
  EXPECT_NEAR(r.after.entanglement, std::log(2.0), 1e-12);
  EXPECT_NEAR(r.delta_sum, 0.0, 1e-12);
  EXPECT_NEAR(r.product(), -std::log(2.0) * std::log(2.0), 1e-12);
  EXPECT_TRUE(r.conserved);
}

TEST(invariants, sums_equal_marginal_invariants) {
  auto rng = make_rng(41);
  for (const auto& g : builtin_groups()) {
    for (int i = 0; i < 100; ++i) {
      const auto psi = random_pure_state(g, rng);
      const auto [h, q] = marginal_invariants(psi);
      const auto e = conservation_check(psi, kEntropyPair);
      EXPECT_NEAR(e.sum_before, h, 1e-10);
      EXPECT_NEAR(e.sum_after, h, 1e-10);
      EXPECT_TRUE(e.conserved);
      const auto l = conservation_check(psi, kL2Pair);
      EXPECT_NEAR(l.sum_before, q, 1e-12);
      EXPECT_NEAR(l.sum_after, q, 1e-12);
      EXPECT_TRUE(l.conserved);
    }
  }
}

TEST(invariants, compare_frames_with_custom_tolerance) {
  const auto a = plus_zero_state();
  const auto r = compare_frames(a, bell_state(), kEntropyPair, 1e-3);
  EXPECT_DOUBLE_EQ(r.tol, 1e-3);
  EXPECT_TRUE(r.conserved);
  const auto mixed = compare_frames(a, a, {Quantifier::kL2Coherence, Quantifier::kEntanglementEntropy});
  EXPECT_DOUBLE_EQ(mixed.delta_sum, 0.0);
}

TEST(invariants, diagonal_multiset_is_inverted) {
  auto rng = make_rng(42);
  for (const auto& g : builtin_groups()) {
    const auto psi = random_pure_state(g, rng);
    const auto d = diagonal_multiset_check(psi);
    EXPECT_TRUE(d.equal) << g->name();
    EXPECT_TRUE(d.inverse_permutation);
    EXPECT_LT(d.max_diff, 1e-12);
    EXPECT_EQ(d.sorted_before.size(), g->order());
  }
}

TEST(invariants, majorization_cases) {
  auto m = majorization_check({1.0, 0.0}, {0.5, 0.5});
  EXPECT_TRUE(m.before_majorizes_after);
  EXPECT_FALSE(m.after_majorizes_before);
  EXPECT_EQ(m.relation(), Majorization::kMajorizes);

  m = majorization_check({0.5, 0.5}, {1.0});
  EXPECT_EQ(m.relation(), Majorization::kMajorized);

  m = majorization_check({0.6, 0.2, 0.2}, {0.5, 0.45, 0.05});
  EXPECT_EQ(m.relation(), Majorization::kIncomparable);

  m = majorization_check({0.2, 0.3, 0.5}, {0.5, 0.2, 0.3});
  EXPECT_TRUE(m.before_majorizes_after);
  EXPECT_TRUE(m.after_majorizes_before);

  EXPECT_THROW(majorization_check({1.1, -0.1}, {0.5, 0.5}), DomainError);
  EXPECT_THROW(majorization_check({0.7, 0.7}, {0.5, 0.5}), DomainError);
}

TEST(invariants, schmidt_spectrum_majorization_for_product_inputs) {
  auto rng = make_rng(43);
  for (const auto& g : builtin_groups()) {
    const auto psi = random_product_state(g, rng);
    const auto m = majorization_check(schmidt_coefficients(psi), schmidt_coefficients(transform_state(psi)));
    EXPECT_TRUE(m.before_majorizes_after);
  }
}

TEST(invariants, tradeoff_sign) {
  auto rng = make_rng(44);
  for (const auto& g : builtin_groups()) {
    for (int i = 0; i < 20; ++i) {
      const auto psi = random_product_state(g, rng);
      const auto t = tradeoff_sign_check(psi, kEntropyPair);
      EXPECT_TRUE(t.hypothesis_met);
      EXPECT_LE(t.product, 1e-9);
    }
  }
}

TEST(invariants, search_is_deterministic_across_jobs) {
  SearchOptions opt;
  opt.samples = 200;
  opt.seed = 5;
  opt.climb_steps = 20;
  opt.jobs = 1;
  const auto a = counterexample_search(z3(), kEntropyPair, opt);
  opt.jobs = 4;
  const auto b = counterexample_search(z3(), kEntropyPair, opt);
  ASSERT_TRUE(a.best.has_value());
  ASSERT_TRUE(b.best.has_value());
  EXPECT_EQ(a.best_product, b.best_product);
  EXPECT_EQ(a.best_sample, b.best_sample);
  EXPECT_EQ(max_abs_diff(a.best->coeffs(), b.best->coeffs()), 0.0);
  EXPECT_LE(a.best_product, 1e-9);
  EXPECT_GE(a.evaluations, opt.samples);
}

TEST(invariants, search_finds_violation_for_mixed_pair) {
  SearchOptions opt;
  opt.samples = 2000;
  opt.seed = 1;
  const auto r = counterexample_search(z3(), {Quantifier::kL2Coherence, Quantifier::kEntanglementEntropy}, opt);
  EXPECT_GT(r.best_product, 1e-6);
}

TEST(invariants, sweep_summary) {
  SweepOptions opt;
  opt.samples = 300;
  opt.seed = 9;
  opt.jobs = 3;
  const auto r = conservation_sweep(s3(), kEntropyPair, opt);
  ASSERT_EQ(r.rows.size(), 300u);
  EXPECT_EQ(r.summary.states, 300u);
  EXPECT_TRUE(r.summary.all_conserved);
  EXPECT_TRUE(r.summary.all_diagonals_match);
  EXPECT_LT(r.summary.max_abs_delta_sum, 1e-9);
  for (std::size_t i = 0; i < r.rows.size(); ++i) EXPECT_EQ(r.rows[i].state_id, i);

  opt.jobs = 1;
  const auto s = conservation_sweep(s3(), kEntropyPair, opt);
  EXPECT_EQ(s.summary.max_abs_delta_sum, r.summary.max_abs_delta_sum);
  EXPECT_EQ(s.rows[17].report.delta_c, r.rows[17].report.delta_c);
}
