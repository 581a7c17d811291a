#include <filesystem>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qrf/errors.hpp"
#include "qrf/io.hpp"
#include "qrf/transform.hpp"

using namespace qrf;
using namespace qrf::testing;

namespace {

const std::filesystem::path kFixtures{QRF_FIXTURE_DIR};

}  // namespace

TEST(io, real_expressions) {
  EXPECT_DOUBLE_EQ(parse_real_expression("39/86"), 39.0 / 86.0);
  EXPECT_DOUBLE_EQ(parse_real_expression("-1/sqrt(3)"), -1.0 / std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(parse_real_expression("sqrt(3)/6"), std::sqrt(3.0) / 6.0);
  EXPECT_DOUBLE_EQ(parse_real_expression("2*sqrt(2)"), 2.0 * std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(parse_real_expression("-0.25"), -0.25);
  EXPECT_DOUBLE_EQ(parse_real(Json(1.5)), 1.5);
  EXPECT_DOUBLE_EQ(parse_real(Json("1/4")), 0.25);
  EXPECT_THROW(parse_real_expression("2 + 1"), FormatError);
  EXPECT_THROW(parse_real_expression("sqrt(3"), FormatError);
  EXPECT_THROW(parse_real_expression(""), FormatError);
  EXPECT_THROW(parse_real(Json::array()), FormatError);
}

TEST(io, complex_values) {
  EXPECT_EQ(parse_complex(Json(2)), Complex(2.0));
  EXPECT_EQ(parse_complex(Json::parse(R"({"im": 1})")), kI);
  EXPECT_EQ(parse_complex(Json::parse(R"({"re": "1/2", "im": -1})")), Complex(0.5, -1.0));
  const Complex z{0.25, -3.0};
  EXPECT_EQ(parse_complex(complex_to_json(z)), z);
}

TEST(io, vectors_and_matrices) {
  const auto v = vector_from_json(Json::parse(R"j({"scale": "1/sqrt(2)", "values": [1, {"im": 1}]})j"));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_DOUBLE_EQ(v[1].imag(), kInvSqrt2);

  const auto m = matrix_from_json(Json::parse(R"([[1, 2], [3, {"im": 4}]])"));
  EXPECT_EQ(m(1, 1), Complex(0.0, 4.0));
  const auto flat = matrix_from_json(Json::parse(R"({"rows": 2, "cols": 2, "entries": [1, 2, 3, 4]})"));
  EXPECT_EQ(flat(1, 0), Complex(3.0));
  const auto scaled = matrix_from_json(Json::parse(R"({"scale": 2, "values": [[1, 0], [0, 1]]})"));
  EXPECT_EQ(scaled(1, 1), Complex(2.0));
  EXPECT_THROW(matrix_from_json(Json::parse(R"([[1, 2], [3]])")), FormatError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows": 2, "cols": 2, "entries": [1]})")), FormatError);

  auto rng = make_rng(71);
  const auto g = gaussian_matrix(3, 2, rng);
  EXPECT_EQ(max_abs_diff(matrix_from_json(matrix_to_json(g)), g), 0.0);
}

TEST(io, group_specs) {
  EXPECT_EQ(parse_group_spec("S3")->order(), 6u);
  EXPECT_EQ(parse_group_spec("cyclic:4")->order(), 4u);
  EXPECT_EQ(parse_group_spec("Z7")->order(), 7u);
  EXPECT_THROW(parse_group_spec("cyclic:"), FormatError);
  EXPECT_THROW(parse_group_spec("Z0"), FormatError);
  EXPECT_THROW(parse_group_spec("D4"), FormatError);
  EXPECT_EQ(group_from_json(Json::parse(R"({"cyclic": 3})"))->name(), "Z3");
  EXPECT_EQ(group_from_json(Json::parse(R"({"builtin": "S3"})"))->name(), "S3");

  const auto s3g = s3();
  const auto round = group_from_json(group_to_json(*s3g));
  EXPECT_EQ(round->order(), 6u);
  EXPECT_EQ(round->label(4), "(012)");
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) EXPECT_EQ(round->compose(a, b), s3g->compose(a, b));
  }
  EXPECT_THROW(group_from_json(Json::parse(R"({"compose": [[0, 1], [1, 1]]})")), GroupError);
  EXPECT_THROW(cayley_from_json(Json::parse(R"({"order": 3, "compose": [[0, 1], [1, 0]]})")), FormatError);
}

TEST(io, state_row_elements) {
  const auto j = Json::parse(R"({
    "group": "Z3", "frame": "C",
    "coeffs": [[1, 0, 0], [0, 2, 0], [0, 0, 3]],
    "row_elements": [0, 2, 1], "normalize": true})");
  const auto s = state_from_json(j);
  const double n = std::sqrt(14.0);
  EXPECT_NEAR(s.coeffs()(2, 1).real(), 2.0 / n, 1e-15);
  EXPECT_NEAR(s.coeffs()(1, 2).real(), 3.0 / n, 1e-15);
  EXPECT_EQ(s.frame(), "C");
  auto bad = j;
  bad["row_elements"] = {0, 0, 1};
  EXPECT_THROW(state_from_json(bad), FormatError);
  bad = j;
  bad.erase("normalize");
  EXPECT_THROW(state_from_json(bad), NormalizationError);
}

TEST(io, settings) {
  const auto s = settings_from_json(Json::parse(
      R"j({"alice": [[0, 0, 1], [1, 0, 0]], "bob": [["1/sqrt(2)", 0, "1/sqrt(2)"], ["-1/sqrt(2)", 0, "1/sqrt(2)"]]})j"));
  const auto ref = ChshSettings::standard();
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(s.alice[k][i], ref.alice[k][i], 1e-15);
      EXPECT_NEAR(s.bob[k][i], ref.bob[k][i], 1e-15);
    }
  }
}

TEST(io, missing_file) { EXPECT_THROW(load_json_file(kFixtures / "nope.json"), FormatError); }

TEST(io, z2_fixture_round_trip) {
  const auto fx = load_json_file(kFixtures / "z2_example.json");
  const auto psi = state_from_json(fx.at("state"));
  const auto want = state_from_json(fx.at("expected_transformed"));
  EXPECT_NEAR(fidelity(transform_state(psi), want), 1.0, 1e-12);
}

TEST(io, all_fixtures_parse) {
  for (const auto* name :
       {"z2_example.json", "z3_counterexample.json", "bell.json", "s3_imperfect.json", "s3_imperfect_params.json"}) {
    EXPECT_NO_THROW(load_json_file(kFixtures / name)) << name;
  }
}
