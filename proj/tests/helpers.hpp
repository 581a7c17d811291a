#pragma once

#include <cmath>
#include <complex>

#include "qrf/group.hpp"
#include "qrf/linalg.hpp"
#include "qrf/random.hpp"
#include "qrf/states.hpp"

namespace qrf::testing {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
inline const Complex kI{0.0, 1.0};

inline GroupPtr z2() { return make_cyclic_group(2); }
inline GroupPtr z3() { return make_cyclic_group(3); }
inline GroupPtr s3() { return make_symmetric_group_3(); }

inline std::vector<GroupPtr> builtin_groups() {
  return {make_cyclic_group(2), make_cyclic_group(3), make_cyclic_group(4), make_cyclic_group(5),
          make_symmetric_group_3()};
}

// (|00> + |11>)/sqrt2 over Z2.
inline BipartiteState bell_state() {
  return BipartiteState(ComplexMatrix{{kInvSqrt2, 0.0}, {0.0, kInvSqrt2}}, "C", z2());
}

// (|0> + |1>)/sqrt2 ⊗ |0> over Z2.
inline BipartiteState plus_zero_state() {
  return BipartiteState(ComplexMatrix{{kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}}, "C", z2());
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const auto g = gaussian_matrix(n, n, rng);
  return (g + g.adjoint()) * Complex{0.5};
}

}  // namespace qrf::testing
