#include "qrf/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qrf/errors.hpp"
#include "qrf/parallel.hpp"
#include "qrf/transform.hpp"

namespace qrf {
namespace {

constexpr double kHypothesisTol = 1e-9;
constexpr double kPartialSumTol = 1e-10;
constexpr double kProbabilitySumTol = 1e-9;

Quantifier require_quantifier(const std::string& name) {
  auto q = parse_quantifier(name);
  if (!q) throw std::invalid_argument("unknown quantifier '" + name + "'");
  return *q;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double product_for(const BipartiteState& psi, const QuantifierPair& pair) {
  const auto before = frame_values(psi, pair);
  const auto after = frame_values(transform_state(psi), pair);
  return (after.coherence - before.coherence) * (after.entanglement - before.entanglement);
}

ComplexMatrix perturb(const ComplexMatrix& c, double sigma, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, c.rows() * c.cols() - 1);
  std::normal_distribution<double> step(0.0, sigma);
  ComplexMatrix out = c;
  const std::size_t k = pick(rng);
  // Draw both parts before use so the stream layout is fixed.
  const double re = step(rng);
  const double im = step(rng);
  out.entries()[k] += Complex{re, im};
  return out;
}

}  // namespace

QuantifierPair parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("pair must look like C_e,E_e");
  const Quantifier first = require_quantifier(trim(text.substr(0, comma)));
  const Quantifier second = require_quantifier(trim(text.substr(comma + 1)));
  if (is_coherence(first) && is_entanglement(second)) return {first, second};
  if (is_entanglement(first) && is_coherence(second)) return {second, first};
  throw std::invalid_argument("pair '" + text + "' needs one coherence and one entanglement quantifier");
}

std::string pair_name(const QuantifierPair& pair) {
  return std::string(quantifier_name(pair.coherence)) + "," + std::string(quantifier_name(pair.entanglement));
}

bool is_conserved_pair(const QuantifierPair& pair) {
  return pair == QuantifierPair{Quantifier::kRelativeEntropyCoherence, Quantifier::kEntanglementEntropy} ||
         pair == QuantifierPair{Quantifier::kL2Coherence, Quantifier::kLinearEntropy};
}

std::vector<QuantifierPair> all_pairs(bool include_geometric) {
  std::vector<Quantifier> cs = {Quantifier::kRelativeEntropyCoherence, Quantifier::kL2Coherence};
  std::vector<Quantifier> es = {Quantifier::kEntanglementEntropy, Quantifier::kLinearEntropy};
  if (include_geometric) {
    cs.push_back(Quantifier::kGeometricCoherence);
    es.push_back(Quantifier::kGeometricEntanglement);
  }
  std::vector<QuantifierPair> out;
  for (auto c : cs) {
    for (auto e : es) out.push_back({c, e});
  }
  return out;
}

FrameValues frame_values(const BipartiteState& psi, const QuantifierPair& pair) {
  return {coherence(pair.coherence, reduced_density(psi, Keep::kFirst)), entanglement(pair.entanglement, psi)};
}

ConservationReport compare_frames(const BipartiteState& before, const BipartiteState& after,
                                  const QuantifierPair& pair, double tol) {
  ConservationReport r;
  r.pair = pair;
  r.before = frame_values(before, pair);
  r.after = frame_values(after, pair);
  r.sum_before = r.before.sum();
  r.sum_after = r.after.sum();
  r.delta_sum = r.sum_after - r.sum_before;
  r.delta_c = r.after.coherence - r.before.coherence;
  r.delta_e = r.after.entanglement - r.before.entanglement;
  r.tol = tol;
  r.conserved = std::abs(r.delta_sum) <= tol;
  return r;
}

ConservationReport conservation_check(const BipartiteState& psi, const QuantifierPair& pair, double tol) {
  return compare_frames(psi, transform_state(psi), pair, tol);
}

DiagonalCheck diagonal_multiset_check(const BipartiteState& psi, double tol) {
  const GroupTable& g = psi.require_group();
  const auto before = reduced_density(psi, Keep::kFirst);
  const auto after = reduced_density(transform_state(psi), Keep::kFirst);
  const std::size_t n = before.dim();

  DiagonalCheck out;
  out.inverse_permutation = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto inv = static_cast<std::size_t>(g.inverse(static_cast<Element>(i)));
    if (std::abs(after.diagonal(i) - before.diagonal(inv)) > tol) out.inverse_permutation = false;
    out.sorted_before.push_back(before.diagonal(i));
    out.sorted_after.push_back(after.diagonal(i));
  }
  std::sort(out.sorted_before.begin(), out.sorted_before.end());
  std::sort(out.sorted_after.begin(), out.sorted_after.end());
  for (std::size_t i = 0; i < n; ++i) {
    out.max_diff = std::max(out.max_diff, std::abs(out.sorted_before[i] - out.sorted_after[i]));
  }
  out.equal = out.max_diff <= tol;
  return out;
}

Majorization MajorizationResult::relation() const {
  if (before_majorizes_after) return Majorization::kMajorizes;
  if (after_majorizes_before) return Majorization::kMajorized;
  return Majorization::kIncomparable;
}

MajorizationResult majorization_check(std::vector<double> before, std::vector<double> after) {
  for (const auto* v : {&before, &after}) {
    for (double x : *v) {
      if (x < 0.0) throw DomainError("majorization: negative entry " + std::to_string(x));
    }
    const double s = std::accumulate(v->begin(), v->end(), 0.0);
    if (std::abs(s - 1.0) > kProbabilitySumTol) throw DomainError("majorization: entries sum to " + std::to_string(s));
  }
  const std::size_t n = std::max(before.size(), after.size());
  before.resize(n, 0.0);
  after.resize(n, 0.0);
  std::sort(before.begin(), before.end(), std::greater<>());
  std::sort(after.begin(), after.end(), std::greater<>());

  MajorizationResult r{true, true};
  double pb = 0.0;
  double pa = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    pb += before[k];
    pa += after[k];
    if (pb < pa - kPartialSumTol) r.before_majorizes_after = false;
    if (pa < pb - kPartialSumTol) r.after_majorizes_before = false;
  }
  return r;
}

TradeoffResult tradeoff_sign_check(const BipartiteState& psi, const QuantifierPair& pair) {
  TradeoffResult t;
  t.report = conservation_check(psi, pair);
  t.product = t.report.product();
  t.hypothesis_met = std::abs(t.report.before.coherence) <= kHypothesisTol ||
                     std::abs(t.report.before.entanglement) <= kHypothesisTol;
  return t;
}

SearchResult counterexample_search(const GroupPtr& group, const QuantifierPair& pair, const SearchOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("counterexample_search: samples must be >= 1");

  struct Sample {
    double product = 0.0;
    ComplexMatrix coeffs;
  };
  auto samples = parallel_map<Sample>(options.samples, options.jobs, [&](std::size_t i) {
    auto rng = make_rng(options.seed, i);
    auto psi = random_pure_state(group, rng);
    return Sample{product_for(psi, pair), psi.coeffs()};
  });

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return samples[a].product > samples[b].product; });
  const std::size_t restarts = std::min(options.restarts, order.size());

  auto climbs = parallel_map<Sample>(restarts, options.jobs, [&](std::size_t r) {
    auto rng = make_rng(options.seed, options.samples + r);
    Sample cur = samples[order[r]];
    for (std::size_t step = 0; step < options.climb_steps; ++step) {
      auto cand = BipartiteState::normalized(perturb(cur.coeffs, options.sigma, rng), "C", group);
      const double p = product_for(cand, pair);
      if (p > cur.product) cur = Sample{p, cand.coeffs()};
    }
    return cur;
  });

  SearchResult out;
  out.evaluations = options.samples + restarts * options.climb_steps;
  out.best_sample = order.front();
  out.best_product = samples[order.front()].product;
  const ComplexMatrix* best = &samples[order.front()].coeffs;
  for (std::size_t r = 0; r < restarts; ++r) {
    if (climbs[r].product > out.best_product) {
      out.best_product = climbs[r].product;
      out.best_sample = order[r];
      best = &climbs[r].coeffs;
    }
  }
  out.best.emplace(*best, "C", group);
  return out;
}

SweepResult conservation_sweep(const GroupPtr& group, const QuantifierPair& pair, const SweepOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("conservation_sweep: samples must be >= 1");
  SweepResult out;
  out.rows = parallel_map<SweepRow>(options.samples, options.jobs, [&](std::size_t i) {
    auto rng = make_rng(options.seed, i);
    const auto psi = random_pure_state(group, rng);
    return SweepRow{i, conservation_check(psi, pair, options.tol), diagonal_multiset_check(psi, options.diagonal_tol)};
  });
  auto& s = out.summary;
  s.states = out.rows.size();
  s.max_product = -std::numeric_limits<double>::infinity();
  for (const auto& row : out.rows) {
    s.max_abs_delta_sum = std::max(s.max_abs_delta_sum, std::abs(row.report.delta_sum));
    s.max_product = std::max(s.max_product, row.report.product());
    s.all_conserved = s.all_conserved && row.report.conserved;
    s.all_diagonals_match = s.all_diagonals_match && row.diagonals.equal && row.diagonals.inverse_permutation;
  }
  return out;
}

}  // namespace qrf
