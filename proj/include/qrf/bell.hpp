#pragma once

// CHSH scenario for two qubits seen from two frames, in the probability form
// sum_{x,y} p(a xor b = xy | x, y) <= 3 (quantum maximum 2 + sqrt 2).

#include <array>
#include <cstddef>
#include <vector>

#include "qrf/linalg.hpp"
#include "qrf/states.hpp"
#include "qrf/transform.hpp"

namespace qrf {

using Direction = std::array<double, 3>;

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
// sigma . m for a unit vector m.
ComplexMatrix spin_along(const Direction& m);
// Projector onto the eigenvalue (-1)^outcome of sigma . m.
ComplexMatrix spin_projector(const Direction& m, int outcome);

class Observable {
 public:
  // Throws ContractError unless Hermitian within 1e-12, ShapeError unless
  // the matrix is (dim_a * dim_b) square.
  Observable(ComplexMatrix matrix, std::size_t dim_a, std::size_t dim_b);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }
  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }

 private:
  ComplexMatrix matrix_;
  std::size_t dim_a_;
  std::size_t dim_b_;
};

struct ChshSettings {
  std::array<Direction, 2> alice;
  std::array<Direction, 2> bob;

  // alice: z, x; bob: (z + x)/sqrt2, (z - x)/sqrt2.
  static ChshSettings standard();
  // Throws DomainError unless every direction is unit norm within 1e-12.
  void validate() const;
};

struct ChshScenario {
  BipartiteState state;
  ChshSettings settings = ChshSettings::standard();
};

// p(a, b | x, y) at index ((x * 2 + y) * 2 + a) * 2 + b.
using ProbabilityTable = std::array<double, 16>;
constexpr std::size_t table_index(int x, int y, int a, int b) {
  return static_cast<std::size_t>(((x * 2 + y) * 2 + a) * 2 + b);
}

// Pi_a^{m_x} ⊗ Pi_b^{n_y}, in table order.
std::array<ComplexMatrix, 16> product_projectors(const ChshSettings& settings);
// sigma_{m_x} ⊗ sigma_{n_y} at index x * 2 + y.
std::array<Observable, 4> joint_observables(const ChshSettings& settings);

ProbabilityTable probabilities(const DensityMatrix& rho, const std::array<ComplexMatrix, 16>& projectors);
// Two-qubit scenarios only (DomainError otherwise).
ProbabilityTable outcome_probabilities(const ChshScenario& scenario);
ProbabilityTable outcome_probabilities(const DensityMatrix& rho, const ChshSettings& settings);

struct ChshValue {
  double value = 0.0;
  bool exceeds_local_bound = false;  // value > 3 + 1e-9
};

ChshValue chsh_value(const ProbabilityTable& table);

struct TransformedScenario {
  BipartiteState state;
  std::array<Observable, 4> observables;       // S (sigma ⊗ sigma) S^dagger
  std::array<ComplexMatrix, 16> projectors;    // S Pi S^dagger
  ProbabilityTable probabilities;
};

// Requires a two-element group on the state and the unitary.
TransformedScenario transform_scenario(const ChshScenario& scenario, const QrfUnitary& s);

struct SchmidtRank {
  std::size_t rank = 0;
  std::vector<double> singular_values;
};

// Reshuffles O[(i,i'),(j,j')] into R[(i,j),(i',j')] and counts singular
// values above 1e-10. Rank 1 iff O is a product operator.
SchmidtRank operator_schmidt_rank(const Observable& o);
SchmidtRank operator_schmidt_rank(const ComplexMatrix& o, std::size_t dim_a, std::size_t dim_b);

}  // namespace qrf
