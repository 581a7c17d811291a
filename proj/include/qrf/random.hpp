#pragma once

// Seeded random sources. Nothing here touches a global generator: every
// caller passes its own engine, and sweeps derive one engine per sample from
// (seed, sample index) so results do not depend on scheduling.

#include <cstdint>
#include <random>
#include <vector>

#include "qrf/linalg.hpp"

namespace qrf {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

// I.i.d. standard complex Gaussian entries (real and imaginary parts N(0, 1/2)).
std::vector<Complex> gaussian_vector(std::size_t n, Rng& rng);
ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);

// Product of random complex Givens (Jacobi) rotations over every index pair,
// repeated for a few sweeps, followed by random diagonal phases.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

// Uniform point on the probability simplex.
std::vector<double> random_distribution(std::size_t n, Rng& rng);

}  // namespace qrf
