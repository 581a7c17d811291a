#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qrf/group.hpp"
#include "qrf/linalg.hpp"
#include "qrf/random.hpp"

namespace qrf {

// Pure state sum_{g,g'} psi(g, g') |g>|g'> stored as its coefficient matrix
// (row = first tensor slot). The frame label names the reference frame the
// state is described relative to ("C", "A", ...).
//
// The group is absent for relative states of non-ideal frames, whose basis
// is not a group basis; group-dependent operations then throw DomainError.
class BipartiteState {
 public:
  static constexpr double kIngestTol = 1e-8;

  // Renormalizes when sum |psi|^2 is within kIngestTol of 1, otherwise throws
  // NormalizationError.
  BipartiteState(ComplexMatrix coeffs, std::string frame, GroupPtr group = nullptr);

  // Accepts any nonzero coefficient matrix and scales it to unit norm.
  static BipartiteState normalized(ComplexMatrix coeffs, std::string frame, GroupPtr group = nullptr);

  const ComplexMatrix& coeffs() const { return coeffs_; }
  const std::string& frame() const { return frame_; }
  const GroupPtr& group() const { return group_; }
  // Throws DomainError when the state has no group.
  const GroupTable& require_group() const;

  std::size_t dim_first() const { return coeffs_.rows(); }
  std::size_t dim_second() const { return coeffs_.cols(); }
  // Amplitudes in |first>|second> order (row-major flattening).
  std::vector<Complex> amplitudes() const;

 private:
  ComplexMatrix coeffs_;
  std::string frame_;
  GroupPtr group_;
};

// keep = kFirst: psi psi^dagger; keep = kSecond: psi^T psi^*.
DensityMatrix reduced_density(const BipartiteState& psi, Keep keep);

// Dephasing in the basis the matrix is written in.
DensityMatrix diagonal_part(const DensityMatrix& rho);

// Haar-random pure state: i.i.d. complex Gaussian coefficients, normalized.
BipartiteState random_pure_state(const GroupPtr& group, std::uint64_t seed, std::string frame = "C");
BipartiteState random_pure_state(const GroupPtr& group, Rng& rng, std::string frame = "C");

// Random product state a ⊗ b.
BipartiteState random_product_state(const GroupPtr& group, Rng& rng, std::string frame = "C");
// Random state whose first-slot reduced density matrix is diagonal
// (rows are orthogonal vectors scaled by sqrt(p_g)).
BipartiteState random_diagonal_subsystem_state(const GroupPtr& group, Rng& rng, std::string frame = "C");

// |<a|b>|^2 for normalized states of equal shape.
double fidelity(const BipartiteState& a, const BipartiteState& b);

// Three-party vector in d1 ⊗ d2 ⊗ d3, amplitude index (i1 * d2 + i2) * d3 + i3.
class TripartiteVector {
 public:
  TripartiteVector(std::array<std::size_t, 3> dims, std::vector<Complex> amplitudes);
  static TripartiteVector product(std::span<const Complex> first, std::span<const Complex> second,
                                  std::span<const Complex> third);

  const std::array<std::size_t, 3>& dims() const { return dims_; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  std::size_t size() const { return amplitudes_.size(); }
  double norm() const;
  Complex at(std::size_t i, std::size_t j, std::size_t k) const {
    return amplitudes_[(i * dims_[1] + j) * dims_[2] + k];
  }

 private:
  std::array<std::size_t, 3> dims_;
  std::vector<Complex> amplitudes_;
};

}  // namespace qrf
