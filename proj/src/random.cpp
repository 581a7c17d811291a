#include "qrf/random.hpp"

#include <cmath>
#include <numbers>

namespace qrf {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

std::vector<Complex> gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<Complex> v(n);
  for (auto& z : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }
  return v;
}

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  return ComplexMatrix(rows, cols, gaussian_vector(rows * cols, rng));
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  constexpr int kSweeps = 3;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  ComplexMatrix u = ComplexMatrix::identity(n);
  for (int sweep = 0; sweep < kSweeps; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double theta = angle(rng);
        const Complex e1 = std::polar(1.0, angle(rng));
        const Complex e2 = std::polar(1.0, angle(rng));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // Left-multiply by [[c e1, s e2], [-s conj(e2), c conj(e1)]] on rows p, q.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex up = u(p, k);
          const Complex uq = u(q, k);
          u(p, k) = c * e1 * up + s * e2 * uq;
          u(q, k) = -s * std::conj(e2) * up + c * std::conj(e1) * uq;
        }
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    const Complex ph = std::polar(1.0, angle(rng));
    for (std::size_t k = 0; k < n; ++k) u(p, k) *= ph;
  }
  return u;
}

std::vector<double> random_distribution(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& x : p) total += (x = expo(rng));
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace qrf
