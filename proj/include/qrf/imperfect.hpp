#pragma once

// Non-ideal S3 frames in the 3-dimensional permutation representation.
//
// Three systems in tensor order (C, A, B) = slots 1, 2, 3. Orientation
// states form the coherent state system |phi(g)> = U(g)|phi(e)>. Physical
// states are invariant under U(g)⊗U(g)⊗U(g); relative states come from the
// reduction sqrt(3) <phi(g)|_slot |psi_phys>.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qrf/group.hpp"
#include "qrf/invariants.hpp"
#include "qrf/linalg.hpp"
#include "qrf/states.hpp"

namespace qrf {

using Vec3 = std::array<Complex, 3>;

inline constexpr std::size_t kPhysicalDimension = 5;

// Slot names by 1-based index: 1 = "C", 2 = "A", 3 = "B".
const std::string& slot_name(int slot);

struct SeedReport {
  std::vector<std::string> violations;
  double norm = 0.0;
  // alpha beta* + alpha* beta + alpha gamma* + alpha* gamma + beta gamma* + beta* gamma
  double cross_term = 0.0;
  bool valid() const { return violations.empty(); }
};

// Pairwise distinct components, unit norm, and a vanishing symmetrized cross
// term, each within 1e-10. The last two together give sum_g |phi(g)><phi(g)| = 2 I.
SeedReport validate_seed(Complex alpha, Complex beta, Complex gamma);

class CoherentStateSystem {
 public:
  // Throws DomainError listing the violations of an invalid seed.
  static CoherentStateSystem make(const Vec3& seed);
  // Keeps the seed report instead of throwing; for demonstrating inputs that
  // fail the seed conditions.
  static CoherentStateSystem unvalidated(const Vec3& seed);

  const GroupPtr& group() const { return group_; }
  const Vec3& seed() const { return seed_; }
  const SeedReport& report() const { return report_; }
  const Vec3& orientation_state(Element g) const { return states_.at(static_cast<std::size_t>(g)); }
  const std::vector<Vec3>& orientation_states() const { return states_; }

  // sum_g |phi(g)><phi(g)|.
  ComplexMatrix frame_operator() const;
  // n when the frame operator equals n I within tol.
  std::optional<double> resolution_constant(double tol = 1e-10) const;

 private:
  explicit CoherentStateSystem(const Vec3& seed);

  GroupPtr group_;
  Vec3 seed_;
  SeedReport report_;
  std::vector<Vec3> states_;
};

// U(g) on C^3: |i> -> |pi_g(i)>.
ComplexMatrix s3_representation(Element g);

// (1/6) sum_g U(g)⊗U(g)⊗U(g) on (C^3)^{⊗3}.
const ComplexMatrix& averaging_projector();
// 27 x 5, orthonormal columns spanning the projector's image.
const ComplexMatrix& physical_basis();

class PhysicalState {
 public:
  // Throws ContractError unless ||U⊗U⊗U v - v|| <= 1e-10 ||v|| for all g.
  explicit PhysicalState(TripartiteVector vector);

  const TripartiteVector& vector() const { return vector_; }
  double norm() const { return vector_.norm(); }

 private:
  TripartiteVector vector_;
};

bool is_group_invariant(const TripartiteVector& v, double tol = 1e-10);

struct GroupAverage {
  TripartiteVector raw;    // projector image before normalization
  PhysicalState physical;  // normalized
};

// Unit-norm kinematical input (NormalizationError otherwise); DegenerateError
// when the projector annihilates it.
GroupAverage group_average(const TripartiteVector& kinematical);

struct RelativeState {
  ComplexMatrix coeffs;       // rows: first remaining slot, cols: second
  int frame_slot = 1;
  Element orientation = 0;

  double norm() const;
  // Normalized copy labelled with the frame name; no group basis.
  BipartiteState state() const;
  // Names of the remaining slots in storage order.
  std::array<std::string, 2> systems() const;
};

// sqrt(3) <phi(g)|_slot |psi>. DegenerateError when the contraction vanishes.
RelativeState reduce(const PhysicalState& phys, const CoherentStateSystem& css, int frame_slot, Element g);

struct InverseReduction {
  PhysicalState physical;
  double residual = 0.0;  // ||R x - psi|| / ||psi||
};

// Least squares over the physical subspace. NotInImageError when the relative
// residual exceeds 1e-8.
InverseReduction inverse_reduce(const RelativeState& rel, const CoherentStateSystem& css);

RelativeState imperfect_frame_change(const RelativeState& rel, const CoherentStateSystem& css, int to_slot,
                                     Element g);

struct ImperfectReport {
  ConservationReport entropy;  // (C_e, E_e)
  ConservationReport l2;       // (C_l2, E_l)
  std::vector<double> diagonal_before;
  std::vector<double> diagonal_after;
  bool diagonals_permutation_equal = false;  // sorted, within 1e-10
};

// Deltas are after - before, computed on the normalized relative states with
// coherence taken on the first stored slot.
ImperfectReport theorem_failure_report(const RelativeState& before, const RelativeState& after);

// The five-parameter A-relative state over |BC>, normalized and stored in
// (C, B) order (frame slot 2, orientation e). Basis orbits: all equal (a),
// A differs (b), B differs (c), C differs (d), all distinct (e).
RelativeState build_parameterized_relative_state(const std::array<Complex, 5>& params, const Vec3& seed);

// Multiplies by the phase that makes the largest-modulus entry real positive.
ComplexMatrix canonical_phase(const ComplexMatrix& m);

}  // namespace qrf
