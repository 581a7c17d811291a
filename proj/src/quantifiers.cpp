#include "qrf/quantifiers.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qrf/errors.hpp"

namespace qrf {
namespace {

struct NamedQuantifier {
  Quantifier id;
  std::string_view name;
};

constexpr std::array<NamedQuantifier, 6> kNames = {{
    {Quantifier::kEntanglementEntropy, "E_e"},
    {Quantifier::kRelativeEntropyCoherence, "C_e"},
    {Quantifier::kL2Coherence, "C_l2"},
    {Quantifier::kLinearEntropy, "E_l"},
    {Quantifier::kGeometricEntanglement, "E_g"},
    {Quantifier::kGeometricCoherence, "C_g"},
}};

// Rounding can push 1 - 4x slightly below zero for pure or maximally
// coherent qubits.
double clamped_root(double x, const char* what) {
  if (x < -1e-12) throw PositivityError(std::string(what) + ": negative discriminant " + std::to_string(x));
  return std::sqrt(std::max(0.0, x));
}

}  // namespace

std::string_view quantifier_name(Quantifier q) {
  for (const auto& n : kNames) {
    if (n.id == q) return n.name;
  }
  return "?";
}

std::optional<Quantifier> parse_quantifier(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return n.id;
  }
  return std::nullopt;
}

bool is_coherence(Quantifier q) {
  return q == Quantifier::kRelativeEntropyCoherence || q == Quantifier::kL2Coherence ||
         q == Quantifier::kGeometricCoherence;
}

bool is_entanglement(Quantifier q) { return !is_coherence(q); }

bool is_qubit_only(Quantifier q) {
  return q == Quantifier::kGeometricEntanglement || q == Quantifier::kGeometricCoherence;
}

double entanglement_entropy(const BipartiteState& psi) {
  return von_neumann_entropy(reduced_density(psi, Keep::kFirst));
}

std::vector<double> schmidt_coefficients(const BipartiteState& psi) {
  auto s = singular_values(psi.coeffs());
  for (auto& x : s) x *= x;
  return s;
}

double entanglement_entropy_schmidt(const BipartiteState& psi) {
  const auto p = schmidt_coefficients(psi);
  return spectrum_entropy(p);
}

double relative_entropy_of_coherence(const DensityMatrix& rho) {
  return von_neumann_entropy(diagonal_part(rho)) - von_neumann_entropy(rho);
}

double l2_coherence(const DensityMatrix& rho) {
  const auto& m = rho.matrix();
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j) s += std::norm(m(i, j));
    }
  }
  return s;
}

double linear_entropy(const BipartiteState& psi) {
  const auto rho = reduced_density(psi, Keep::kFirst);
  // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
  double purity = 0.0;
  for (const auto& z : rho.matrix().entries()) purity += std::norm(z);
  return 1.0 - purity;
}

double geometric_entanglement(const BipartiteState& psi) {
  if (psi.dim_first() != 2 || psi.dim_second() != 2) {
    throw DomainError("geometric entanglement is defined for two qubits only");
  }
  const auto rho = reduced_density(psi, Keep::kFirst);
  const auto& r = rho.matrix();
  const double det = (r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0)).real();
  return 1.0 - 0.5 * (1.0 + clamped_root(1.0 - 4.0 * det, "geometric entanglement"));
}

double geometric_coherence(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DomainError("geometric coherence is defined for qubits only");
  const double off = std::abs(rho.matrix()(0, 1));
  if (off > 0.5 + 1e-12) throw PositivityError("|rho_01| > 1/2 is not a valid qubit state");
  return 0.5 * (1.0 - clamped_root(1.0 - 4.0 * off * off, "geometric coherence"));
}

double coherence(Quantifier q, const DensityMatrix& rho) {
  switch (q) {
    case Quantifier::kRelativeEntropyCoherence:
      return relative_entropy_of_coherence(rho);
    case Quantifier::kL2Coherence:
      return l2_coherence(rho);
    case Quantifier::kGeometricCoherence:
      return geometric_coherence(rho);
    default:
      throw DomainError(std::string(quantifier_name(q)) + " is not a coherence quantifier");
  }
}

double entanglement(Quantifier q, const BipartiteState& psi) {
  switch (q) {
    case Quantifier::kEntanglementEntropy:
      return entanglement_entropy(psi);
    case Quantifier::kLinearEntropy:
      return linear_entropy(psi);
    case Quantifier::kGeometricEntanglement:
      return geometric_entanglement(psi);
    default:
      throw DomainError(std::string(quantifier_name(q)) + " is not an entanglement quantifier");
  }
}

}  // namespace qrf
