#include "reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "qrf/bell.hpp"
#include "qrf/errors.hpp"
#include "qrf/imperfect.hpp"
#include "qrf/invariants.hpp"
#include "qrf/quantifiers.hpp"
#include "qrf/transform.hpp"

#ifndef QRF_FIXTURE_DIR
#define QRF_FIXTURE_DIR "fixtures"
#endif

namespace qrf::cli {
namespace {

const QuantifierPair kEntropyPair{Quantifier::kRelativeEntropyCoherence, Quantifier::kEntanglementEntropy};

double tol_of(const Json& fixture, const char* key) { return parse_real(fixture.at("tolerance").at(key)); }
double expected_of(const Json& fixture, const char* key) { return parse_real(fixture.at("expected").at(key)); }

Json report_json(const ConservationReport& r) {
  return Json{{"pair", pair_name(r.pair)},
              {"C_before", r.before.coherence},
              {"E_before", r.before.entanglement},
              {"C_after", r.after.coherence},
              {"E_after", r.after.entanglement},
              {"delta_c", r.delta_c},
              {"delta_e", r.delta_e},
              {"delta_sum", r.delta_sum},
              {"product", r.product()}};
}

double table_diff(const ProbabilityTable& a, const ProbabilityTable& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

Json table_json(const ProbabilityTable& t) {
  Json rows = Json::array();
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          rows.push_back(Json{{"x", x}, {"y", y}, {"a", a}, {"b", b}, {"p", t[table_index(x, y, a, b)]}});
        }
      }
    }
  }
  return rows;
}

Report reproduce_z2(const Json& fx) {
  Report r{"z2-example"};
  const auto psi = state_from_json(fx.at("state"));
  const auto out = transform_state(psi);
  const auto expected = state_from_json(fx.at("expected_transformed"));
  const double tv = tol_of(fx, "values");
  r.add("fidelity", 1.0, fidelity(out, expected), tol_of(fx, "fidelity"));
  const auto rep = conservation_check(psi, kEntropyPair, tv);
  r.add("C_e_before", expected_of(fx, "C_e_before"), rep.before.coherence, tv);
  r.add("E_e_before", expected_of(fx, "E_e_before"), rep.before.entanglement, tv);
  r.add("C_e_after", expected_of(fx, "C_e_after"), rep.after.coherence, tv);
  r.add("E_e_after", expected_of(fx, "E_e_after"), rep.after.entanglement, tv);
  r.add("delta_sum", 0.0, rep.delta_sum, tv);
  r.details["C_e,E_e"] = report_json(rep);
  r.details["transformed"] = matrix_to_json(out.coeffs());
  return r;
}

Report reproduce_z3(const Json& fx) {
  Report r{"z3-counterexample"};
  const auto psi = state_from_json(fx.at("state"));
  const auto out = transform_state(psi);
  const auto printed = state_from_json(fx.at("expected_transformed"));
  r.add("transformed_max_diff", 0.0, max_abs_diff(out.coeffs(), printed.coeffs()), tol_of(fx, "transformed"));
  const QuantifierPair pair{Quantifier::kL2Coherence, Quantifier::kEntanglementEntropy};
  const auto rep = conservation_check(psi, pair);
  const double tv = tol_of(fx, "values");
  r.add("E_e_before", expected_of(fx, "E_e_before"), rep.before.entanglement, tv);
  r.add("C_l2_before", expected_of(fx, "C_l2_before"), rep.before.coherence, tv);
  r.add("E_e_after", expected_of(fx, "E_e_after"), rep.after.entanglement, tv);
  r.add("C_l2_after", expected_of(fx, "C_l2_after"), rep.after.coherence, tv);
  r.add("product", expected_of(fx, "product"), rep.product(), tv);
  r.add_bound("product_positive", rep.product(), rep.product() > 0.0);
  r.details["C_l2,E_e"] = report_json(rep);
  return r;
}

ChshScenario scenario_from(const Json& j) {
  const Json& state = j.contains("state") ? j.at("state") : j;
  ChshScenario sc{state_from_json(state)};
  if (j.contains("settings")) sc.settings = settings_from_json(j.at("settings"));
  return sc;
}

Report reproduce_chsh(const Json& fx) {
  const double tol = tol_of(fx, "tables");
  const auto sc = scenario_from(fx);
  const QrfUnitary s(sc.state.group());
  const auto before = outcome_probabilities(sc);
  const auto t = transform_scenario(sc, s);
  Report rep{"chsh"};
  const double target = expected_of(fx, "chsh");
  rep.add("chsh_frame_C", target, chsh_value(before).value, tol_of(fx, "chsh"));
  rep.add("chsh_frame_A", target, chsh_value(t.probabilities).value, tol_of(fx, "chsh"));
  rep.add("table_max_diff", 0.0, table_diff(before, t.probabilities), tol);
  rep.add("transformed_state_fidelity", 1.0, fidelity(t.state, state_from_json(fx.at("expected_transformed"))),
          tol);

  const auto& eo = fx.at("expected_observable");
  const auto setting = eo.at("setting").get<std::array<int, 2>>();
  const auto& obs = t.observables[static_cast<std::size_t>(setting[0] * 2 + setting[1])];
  rep.add("observable_max_diff", 0.0, max_abs_diff(obs.matrix(), matrix_from_json(eo.at("matrix"))),
          tol_of(fx, "observable"));
  rep.add("observable_schmidt_rank", 2.0, static_cast<double>(operator_schmidt_rank(obs).rank), 0.0);
  std::size_t max_rank = 0;
  for (const auto& p : t.projectors) max_rank = std::max(max_rank, operator_schmidt_rank(p, 2, 2).rank);
  rep.add_bound("max_projector_schmidt_rank", static_cast<double>(max_rank), max_rank >= 2);
  rep.details["table_frame_C"] = table_json(before);
  rep.details["table_frame_A"] = table_json(t.probabilities);
  return rep;
}

struct S3Paper {
  CoherentStateSystem css;
  PhysicalState physical;
  RelativeState rel_c;
  RelativeState rel_a;
};

S3Paper build_s3_paper(const Json& fx) {
  const auto& kin = fx.at("kinematical");
  const auto c = vector_from_json(kin.at("C"));
  const auto a = vector_from_json(kin.at("A"));
  const auto b = vector_from_json(kin.at("B"));
  const auto seed = vector_from_json(fx.at("seed"));
  if (seed.size() != 3) throw FormatError("seed must have three components");
  auto css = CoherentStateSystem::make({seed[0], seed[1], seed[2]});
  auto avg = group_average(TripartiteVector::product(c, a, b));
  auto rel_c = reduce(avg.physical, css, 1, 0);
  auto rel_a = reduce(avg.physical, css, 2, 0);
  return {std::move(css), std::move(avg.physical), std::move(rel_c), std::move(rel_a)};
}

std::size_t projector_rank() {
  std::size_t rank = 0;
  for (double s : singular_values(averaging_projector())) {
    if (s > 1e-10) ++rank;
  }
  return rank;
}

Report reproduce_s3(const Json& fx) {
  Report r{"s3-imperfect"};
  const auto p = build_s3_paper(fx);
  const double ts = tol_of(fx, "states");
  const auto n = p.css.resolution_constant(tol_of(fx, "resolution"));
  r.add("resolution_constant", expected_of(fx, "resolution_constant"), n.value_or(NAN), tol_of(fx, "resolution"));
  r.add("projector_rank", expected_of(fx, "projector_rank"), static_cast<double>(projector_rank()), 0.0);
  r.add("relative_C_max_diff", 0.0,
        max_abs_diff(canonical_phase(p.rel_c.coeffs), canonical_phase(matrix_from_json(fx.at("expected_relative_C")))),
        ts);
  r.add("relative_A_max_diff", 0.0,
        max_abs_diff(canonical_phase(p.rel_a.coeffs), canonical_phase(matrix_from_json(fx.at("expected_relative_A")))),
        ts);
  const auto changed = imperfect_frame_change(p.rel_a, p.css, 1, 0);
  r.add("frame_change_vs_direct", 0.0, max_abs_diff(changed.coeffs, p.rel_c.coeffs), 1e-9);

  // Change A -> C: before is the A-relative state, after the C-relative one.
  const auto rep = theorem_failure_report(p.rel_a, p.rel_c);
  const double td = tol_of(fx, "diagonals");
  const auto& ed_a = fx.at("expected").at("diagonal_A_relative");
  const auto& ed_c = fx.at("expected").at("diagonal_C_relative");
  for (std::size_t i = 0; i < 3; ++i) {
    r.add("diag_A_relative_" + std::to_string(i), parse_real(ed_a.at(i)), rep.diagonal_before[i], td);
    r.add("diag_C_relative_" + std::to_string(i), parse_real(ed_c.at(i)), rep.diagonal_after[i], td);
  }
  r.add_bound("diagonals_not_permutation", 0.0, !rep.diagonals_permutation_equal);
  r.add("delta_sum_e", expected_of(fx, "delta_sum_e"), rep.entropy.delta_sum, tol_of(fx, "delta_sum_e"));
  r.add("delta_sum_l2", expected_of(fx, "delta_sum_l2"), rep.l2.delta_sum, tol_of(fx, "delta_sum_l2"));
  r.add_info("product_e", rep.entropy.product());
  r.add_info("product_l2", rep.l2.product());
  r.details["relative_C"] = matrix_to_json(p.rel_c.coeffs);
  r.details["relative_A"] = matrix_to_json(p.rel_a.coeffs);
  r.details["C_e,E_e"] = report_json(rep.entropy);
  r.details["C_l2,E_l"] = report_json(rep.l2);
  return r;
}

Report reproduce_params(const Json& fx) {
  Report r{"s3-imperfect-params"};
  const auto seed = vector_from_json(fx.at("seed"));
  const auto pv = vector_from_json(fx.at("params"));
  if (seed.size() != 3 || pv.size() != 5) throw FormatError("need a 3-component seed and 5 parameters");
  const Vec3 s{seed[0], seed[1], seed[2]};
  const auto css = CoherentStateSystem::unvalidated(s);
  const auto rel_a = build_parameterized_relative_state({pv[0], pv[1], pv[2], pv[3], pv[4]}, s);
  const auto inv = inverse_reduce(rel_a, css);
  const auto rel_c = reduce(inv.physical, css, 1, 0);
  const auto rep = theorem_failure_report(rel_a, rel_c);
  const double tv = tol_of(fx, "values");
  r.add("delta_sum_e", expected_of(fx, "delta_sum_e"), rep.entropy.delta_sum, tv);
  r.add("product_e", expected_of(fx, "product_e"), rep.entropy.product(), tv);
  r.add("delta_sum_l2", expected_of(fx, "delta_sum_l2"), rep.l2.delta_sum, tv);
  r.add("product_l2", expected_of(fx, "product_l2"), rep.l2.product(), tv);
  r.add_info("inverse_reduction_residual", inv.residual);
  r.add_info("seed_cross_term", css.report().cross_term);
  Json violations = Json::array();
  for (const auto& v : css.report().violations) violations.push_back(v);
  r.details["seed_violations"] = violations;
  r.details["C_e,E_e"] = report_json(rep.entropy);
  r.details["C_l2,E_l"] = report_json(rep.l2);
  return r;
}

}  // namespace

bool Report::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& row) { return row.pass; });
}

void Report::add(std::string quantity, double expected, double computed, double tolerance) {
  const bool ok = std::isfinite(computed) && std::abs(computed - expected) <= tolerance;
  rows.push_back({std::move(quantity), expected, computed, tolerance, ok});
}

void Report::add_bound(std::string quantity, double computed, bool ok) {
  rows.push_back({std::move(quantity), std::nullopt, computed, std::nullopt, ok});
}

void Report::add_info(std::string quantity, double computed) {
  rows.push_back({std::move(quantity), std::nullopt, computed, std::nullopt, true});
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("QRF_FIXTURES"); env != nullptr && *env != '\0') return env;
  return QRF_FIXTURE_DIR;
}

const std::vector<std::string>& fixture_ids() {
  static const std::vector<std::string> ids = {"z2-example", "z3-counterexample", "chsh", "s3-imperfect",
                                               "s3-imperfect-params"};
  return ids;
}

Report reproduce(const std::string& id, const std::filesystem::path& dir) {
  if (id == "z2-example") return reproduce_z2(load_json_file(dir / "z2_example.json"));
  if (id == "z3-counterexample") return reproduce_z3(load_json_file(dir / "z3_counterexample.json"));
  if (id == "chsh") return reproduce_chsh(load_json_file(dir / "bell.json"));
  if (id == "s3-imperfect") return reproduce_s3(load_json_file(dir / "s3_imperfect.json"));
  if (id == "s3-imperfect-params") return reproduce_params(load_json_file(dir / "s3_imperfect_params.json"));
  throw std::invalid_argument("unknown fixture id '" + id + "'");
}

Report imperfect_paper_demo(const std::filesystem::path& dir) { return reproduce("s3-imperfect", dir); }

Report imperfect_params_demo(const std::filesystem::path& dir) { return reproduce("s3-imperfect-params", dir); }

Report bell_report(const std::filesystem::path& state_file, double tol) {
  const auto j = load_json_file(state_file);
  const auto sc = scenario_from(j);
  const auto& group = sc.state.group();
  if (!group || group->order() != 2) throw DomainError("bell needs a state over a two-element group");
  const QrfUnitary s(group);
  const auto before = outcome_probabilities(sc);
  const auto t = transform_scenario(sc, s);
  Report r{"bell"};
  r.add_info("chsh_frame_C", chsh_value(before).value);
  r.add_info("chsh_frame_A", chsh_value(t.probabilities).value);
  r.add("table_max_diff", 0.0, table_diff(before, t.probabilities), tol);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto rank = operator_schmidt_rank(t.observables[k]);
    r.add_info("observable_" + std::to_string(k / 2) + std::to_string(k % 2) + "_schmidt_rank",
               static_cast<double>(rank.rank));
  }
  r.details["table_frame_C"] = table_json(before);
  r.details["table_frame_A"] = table_json(t.probabilities);
  r.details["transformed_state"] = matrix_to_json(t.state.coeffs());
  return r;
}

}  // namespace qrf::cli
