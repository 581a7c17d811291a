#include "qrf/states.hpp"

#include <cmath>
#include <string>

#include "qrf/errors.hpp"

namespace qrf {
namespace {

double squared_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return s;
}

void check_group_shape(const ComplexMatrix& coeffs, const GroupPtr& group) {
  if (group && (coeffs.rows() != group->order() || coeffs.cols() != group->order())) {
    throw ShapeError("state coefficients must be " + std::to_string(group->order()) + "x" +
                     std::to_string(group->order()) + " for group " + group->name());
  }
}

}  // namespace

BipartiteState::BipartiteState(ComplexMatrix coeffs, std::string frame, GroupPtr group)
    : coeffs_(std::move(coeffs)), frame_(std::move(frame)), group_(std::move(group)) {
  check_group_shape(coeffs_, group_);
  const double n2 = squared_norm(coeffs_);
  if (std::abs(n2 - 1.0) > kIngestTol) {
    throw NormalizationError("state norm^2 = " + std::to_string(n2) + " is not 1 within 1e-8");
  }
  coeffs_ *= Complex{1.0 / std::sqrt(n2)};
}

BipartiteState BipartiteState::normalized(ComplexMatrix coeffs, std::string frame, GroupPtr group) {
  const double n2 = squared_norm(coeffs);
  if (!(n2 > 1e-300)) throw NormalizationError("cannot normalize a zero state");
  coeffs *= Complex{1.0 / std::sqrt(n2)};
  return BipartiteState(std::move(coeffs), std::move(frame), std::move(group));
}

const GroupTable& BipartiteState::require_group() const {
  if (!group_) throw DomainError("state '" + frame_ + "' is not expressed in a group basis");
  return *group_;
}

std::vector<Complex> BipartiteState::amplitudes() const {
  auto e = coeffs_.entries();
  return {e.begin(), e.end()};
}

DensityMatrix reduced_density(const BipartiteState& psi, Keep keep) {
  const auto& c = psi.coeffs();
  if (keep == Keep::kFirst) return DensityMatrix::trusted(c * c.adjoint());
  return DensityMatrix::trusted(c.transpose() * c.conjugate());
}

DensityMatrix diagonal_part(const DensityMatrix& rho) {
  ComplexMatrix d(rho.dim(), rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) d(i, i) = rho.matrix()(i, i);
  return DensityMatrix::trusted(std::move(d));
}

BipartiteState random_pure_state(const GroupPtr& group, std::uint64_t seed, std::string frame) {
  auto rng = make_rng(seed);
  return random_pure_state(group, rng, std::move(frame));
}

BipartiteState random_pure_state(const GroupPtr& group, Rng& rng, std::string frame) {
  const std::size_t n = group->order();
  return BipartiteState::normalized(gaussian_matrix(n, n, rng), std::move(frame), group);
}

BipartiteState random_product_state(const GroupPtr& group, Rng& rng, std::string frame) {
  const std::size_t n = group->order();
  const auto a = gaussian_vector(n, rng);
  const auto b = gaussian_vector(n, rng);
  ComplexMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(i, j) = a[i] * b[j];
  }
  return BipartiteState::normalized(std::move(c), std::move(frame), group);
}

BipartiteState random_diagonal_subsystem_state(const GroupPtr& group, Rng& rng, std::string frame) {
  const std::size_t n = group->order();
  const auto p = random_distribution(n, rng);
  ComplexMatrix c = random_unitary(n, rng);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = std::sqrt(p[i]);
    for (std::size_t j = 0; j < n; ++j) c(i, j) *= w;
  }
  return BipartiteState::normalized(std::move(c), std::move(frame), group);
}

double fidelity(const BipartiteState& a, const BipartiteState& b) {
  if (a.dim_first() != b.dim_first() || a.dim_second() != b.dim_second()) {
    throw ShapeError("fidelity of states with different shapes");
  }
  Complex overlap = 0.0;
  auto ea = a.coeffs().entries();
  auto eb = b.coeffs().entries();
  for (std::size_t i = 0; i < ea.size(); ++i) overlap += std::conj(ea[i]) * eb[i];
  return std::norm(overlap);
}

TripartiteVector::TripartiteVector(std::array<std::size_t, 3> dims, std::vector<Complex> amplitudes)
    : dims_(dims), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != dims_[0] * dims_[1] * dims_[2]) throw ShapeError("tripartite amplitude count");
}

TripartiteVector TripartiteVector::product(std::span<const Complex> first, std::span<const Complex> second,
                                           std::span<const Complex> third) {
  std::vector<Complex> amps;
  amps.reserve(first.size() * second.size() * third.size());
  for (const auto& a : first) {
    for (const auto& b : second) {
      for (const auto& c : third) amps.push_back(a * b * c);
    }
  }
  return TripartiteVector({first.size(), second.size(), third.size()}, std::move(amps));
}

double TripartiteVector::norm() const {
  double s = 0.0;
  for (const auto& z : amplitudes_) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace qrf
