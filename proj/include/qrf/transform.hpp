#pragma once

// The ideal frame change S = sum_g |g^-1><g| ⊗ U^dagger(g) on C[G] ⊗ C[G]:
//
//   S |g>|g'> = |g^-1>|g^-1 ∘ g'>,   psi'(g, g') = psi(g^-1, g^-1 ∘ g').
//
// S is a permutation of the |G|^2 product basis and squares to the identity
// for every group, so S^-1 = S^dagger = S.

#include <optional>
#include <utility>
#include <vector>

#include "qrf/group.hpp"
#include "qrf/linalg.hpp"
#include "qrf/states.hpp"

namespace qrf {

class QrfUnitary {
 public:
  explicit QrfUnitary(GroupPtr group);

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t dimension() const { return basis_map_.dimension(); }
  // Basis-index form: |k> -> |basis_map.image(k)>, k = g * |G| + g'.
  const PermutationMatrix& basis_map() const { return basis_map_; }
  ComplexMatrix dense() const { return basis_map_.dense(); }

 private:
  GroupPtr group_;
  PermutationMatrix basis_map_;
};

QrfUnitary build_qrf_unitary(GroupPtr group);

// Frame change of a state written in a group basis. The frame label swaps
// C <-> A; any other label is kept with a trailing apostrophe.
BipartiteState transform_state(const BipartiteState& psi);

// O' = S O S^dagger, so that Tr[rho' O'] = Tr[rho O] with rho' = S rho S^dagger.
ComplexMatrix transform_observable(const ComplexMatrix& observable, const QrfUnitary& s);

// E(g) = <g|_B S |phi>_B, i.e. E(g)|h> = phi(h∘g) |h^-1>. These are the Kraus
// operators of rho_A -> Tr_B[S (rho_A ⊗ |phi><phi|) S^dagger].
std::vector<ComplexMatrix> kraus_operators(const GroupTable& group, std::span<const Complex> phi_b);

// Applies sum_g E(g) rho E(g)^dagger.
ComplexMatrix apply_channel(std::span<const ComplexMatrix> kraus, const ComplexMatrix& rho);

struct IncoherenceResult {
  bool incoherent = true;
  // First basis product state |g><g| ⊗ |g'><g'| mapped off the diagonal.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Exhaustive check that U (|g><g| ⊗ |g'><g'|) U^dagger is diagonal for every
// product basis state of a dim_a * dim_b system.
IncoherenceResult is_incoherent_unitary(const ComplexMatrix& u, std::size_t dim_a, std::size_t dim_b);
IncoherenceResult is_incoherent_unitary(const QrfUnitary& s);

}  // namespace qrf
