#pragma once

// Coherence and entanglement quantifiers. Entropies use the natural log.
//
// Coherence quantifiers act on a density matrix in its stored basis (the
// group basis for ideal frames); entanglement quantifiers act on a pure
// bipartite state through its first-slot reduced state.

#include <optional>
#include <string_view>
#include <vector>

#include "qrf/linalg.hpp"
#include "qrf/states.hpp"

namespace qrf {

enum class Quantifier {
  kEntanglementEntropy,       // E_e
  kRelativeEntropyCoherence,  // C_e
  kL2Coherence,               // C_l2
  kLinearEntropy,             // E_l
  kGeometricEntanglement,     // E_g (qubits only)
  kGeometricCoherence,        // C_g (qubits only)
};

std::string_view quantifier_name(Quantifier q);
std::optional<Quantifier> parse_quantifier(std::string_view name);
bool is_coherence(Quantifier q);
bool is_entanglement(Quantifier q);
bool is_qubit_only(Quantifier q);

// S[rho_A], via the eigenvalues of the reduced density matrix.
double entanglement_entropy(const BipartiteState& psi);
// -sum s^2 ln s^2 over the singular values s of the coefficient matrix.
double entanglement_entropy_schmidt(const BipartiteState& psi);
// Squared singular values of the coefficient matrix, descending.
std::vector<double> schmidt_coefficients(const BipartiteState& psi);

// S[rho_d] - S[rho].
double relative_entropy_of_coherence(const DensityMatrix& rho);

// sum_{g != h} |rho_{g,h}|^2. A coherence quantifier, not a measure: it is
// known to violate monotonicity under incoherent operations.
double l2_coherence(const DensityMatrix& rho);

// 1 - Tr[rho_A^2].
double linear_entropy(const BipartiteState& psi);

// 1 - (1 + sqrt(1 - 4 det rho_A)) / 2. Two-qubit states only (DomainError).
double geometric_entanglement(const BipartiteState& psi);

// (1 - sqrt(1 - 4 |rho_01|^2)) / 2. Qubit states only (DomainError);
// |rho_01| > 1/2 is a PositivityError.
double geometric_coherence(const DensityMatrix& rho);

// Dispatch by id. Throws DomainError when the id is of the other kind.
double coherence(Quantifier q, const DensityMatrix& rho);
double entanglement(Quantifier q, const BipartiteState& psi);

}  // namespace qrf
