#pragma once

// Conservation laws, the diagonal-multiset lemma, majorization and trade-off
// sign checks, and randomized counterexample search.
//
// Subsystem coherence is always the coherence of the first tensor slot of
// the state as stored (rho_A in frame C, rho_C in frame A). Deltas are
// after - before.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrf/quantifiers.hpp"
#include "qrf/states.hpp"

namespace qrf {

inline constexpr double kConservationTol = 1e-9;

struct QuantifierPair {
  Quantifier coherence;
  Quantifier entanglement;

  friend bool operator==(const QuantifierPair&, const QuantifierPair&) = default;
};

// "C_e,E_e" style. Throws std::invalid_argument on unknown names or when the
// two entries are not one coherence and one entanglement quantifier.
QuantifierPair parse_pair(const std::string& text);
std::string pair_name(const QuantifierPair& pair);
// (C_e, E_e) and (C_l2, E_l).
bool is_conserved_pair(const QuantifierPair& pair);
std::vector<QuantifierPair> all_pairs(bool include_geometric);

struct FrameValues {
  double coherence = 0.0;
  double entanglement = 0.0;
  double sum() const { return coherence + entanglement; }
};

struct ConservationReport {
  QuantifierPair pair{};
  FrameValues before;
  FrameValues after;
  double sum_before = 0.0;
  double sum_after = 0.0;
  double delta_sum = 0.0;
  double delta_c = 0.0;
  double delta_e = 0.0;
  double tol = kConservationTol;
  bool conserved = false;

  double product() const { return delta_c * delta_e; }
};

FrameValues frame_values(const BipartiteState& psi, const QuantifierPair& pair);
ConservationReport compare_frames(const BipartiteState& before, const BipartiteState& after,
                                  const QuantifierPair& pair, double tol = kConservationTol);
// Compares psi with transform_state(psi).
ConservationReport conservation_check(const BipartiteState& psi, const QuantifierPair& pair,
                                      double tol = kConservationTol);

struct DiagonalCheck {
  bool equal = false;               // sorted diagonals agree within tol
  bool inverse_permutation = false; // rho'_{g,g} = rho_{g^-1,g^-1} within tol
  std::vector<double> sorted_before;
  std::vector<double> sorted_after;
  double max_diff = 0.0;
};

DiagonalCheck diagonal_multiset_check(const BipartiteState& psi, double tol = 1e-12);

enum class Majorization { kMajorizes, kMajorized, kIncomparable };

struct MajorizationResult {
  bool before_majorizes_after = false;
  bool after_majorizes_before = false;
  Majorization relation() const;
};

// Probability vectors (non-negative, sum 1 within 1e-9; negative entries are
// a DomainError). Shorter vectors are padded with zeros. Partial sums of the
// descending sorts are compared with tolerance 1e-10.
MajorizationResult majorization_check(std::vector<double> before, std::vector<double> after);

struct TradeoffResult {
  double product = 0.0;
  // Zero coherence of the first slot or zero entanglement, within 1e-9.
  bool hypothesis_met = false;
  ConservationReport report;
};

TradeoffResult tradeoff_sign_check(const BipartiteState& psi, const QuantifierPair& pair);

struct SearchOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::size_t restarts = 3;      // best samples used as hill-climb starts
  std::size_t climb_steps = 200;
  double sigma = 0.05;
  unsigned jobs = 1;
};

struct SearchResult {
  std::optional<BipartiteState> best;
  double best_product = 0.0;
  std::size_t best_sample = 0;   // index of the sample the best state descends from
  std::size_t evaluations = 0;
};

// Random sampling followed by coordinate-wise hill climbing on ΔC·ΔE. Each
// sample and each climb owns a generator derived from (seed, index), so the
// result does not depend on `jobs`.
SearchResult counterexample_search(const GroupPtr& group, const QuantifierPair& pair, const SearchOptions& options);

struct SweepOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double tol = kConservationTol;
  double diagonal_tol = 1e-12;
  unsigned jobs = 1;
};

struct SweepRow {
  std::size_t state_id = 0;
  ConservationReport report;
  DiagonalCheck diagonals;
};

struct SweepSummary {
  std::size_t states = 0;
  double max_abs_delta_sum = 0.0;
  double max_product = 0.0;
  bool all_conserved = true;
  bool all_diagonals_match = true;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

// Haar-random states, sample i drawn from make_rng(seed, i).
SweepResult conservation_sweep(const GroupPtr& group, const QuantifierPair& pair, const SweepOptions& options);

}  // namespace qrf
