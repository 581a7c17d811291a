#include "qrf/imperfect.hpp"

#include <algorithm>
#include <cmath>

#include "qrf/errors.hpp"

namespace qrf {
namespace {

constexpr double kSeedTol = 1e-10;
constexpr double kInvarianceTol = 1e-10;
constexpr double kZeroNorm = 1e-12;
constexpr double kImageTol = 1e-8;
constexpr double kDiagonalTol = 1e-10;
const double kReductionFactor = std::sqrt(3.0);

std::size_t idx(std::size_t c, std::size_t a, std::size_t b) { return (c * 3 + a) * 3 + b; }

void check_slot(int slot) {
  if (slot < 1 || slot > 3) throw std::out_of_range("frame slot must be 1, 2 or 3");
}

std::array<int, 2> remaining_slots(int slot) {
  if (slot == 1) return {2, 3};
  if (slot == 2) return {1, 3};
  return {1, 2};
}

std::vector<Complex> apply_diagonal(Element g, std::span<const Complex> v) {
  const auto& p = s3_permutation(g);
  std::vector<Complex> out(27);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        out[idx(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(p[j]), static_cast<std::size_t>(p[k]))] =
            v[idx(i, j, k)];
      }
    }
  }
  return out;
}

double vector_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix contract(std::span<const Complex> v, const Vec3& phi, int slot) {
  ComplexMatrix out(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        const Complex amp = v[idx(i, j, k)];
        if (slot == 1) out(j, k) += std::conj(phi[i]) * amp;
        else if (slot == 2) out(i, k) += std::conj(phi[j]) * amp;
        else out(i, j) += std::conj(phi[k]) * amp;
      }
    }
  }
  return out;
}

ComplexMatrix build_projector() {
  ComplexMatrix p(27, 27);
  for (Element g = 0; g < 6; ++g) {
    const auto& perm = s3_permutation(g);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
          const auto to = idx(static_cast<std::size_t>(perm[i]), static_cast<std::size_t>(perm[j]),
                              static_cast<std::size_t>(perm[k]));
          p(to, idx(i, j, k)) += 1.0 / 6.0;
        }
      }
    }
  }
  return p;
}

ComplexMatrix build_physical_basis() {
  const auto eig = hermitian_eigen(averaging_projector());
  ComplexMatrix basis(27, kPhysicalDimension);
  for (std::size_t k = 0; k < kPhysicalDimension; ++k) {
    if (eig.values[k] < 0.5) throw ContractError("averaging projector has fewer than 5 unit eigenvalues");
    for (std::size_t r = 0; r < 27; ++r) basis(r, k) = eig.vectors(r, k);
  }
  return basis;
}

int orbit_of(std::size_t a, std::size_t b, std::size_t c) {
  if (a == b && b == c) return 0;
  if (b == c) return 1;  // A differs
  if (a == c) return 2;  // B differs
  if (a == b) return 3;  // C differs
  return 4;
}

}  // namespace

const std::string& slot_name(int slot) {
  static const std::array<std::string, 3> names = {"C", "A", "B"};
  check_slot(slot);
  return names[static_cast<std::size_t>(slot - 1)];
}

SeedReport validate_seed(Complex alpha, Complex beta, Complex gamma) {
  SeedReport r;
  const Vec3 v = {alpha, beta, gamma};
  static const char* names[] = {"alpha", "beta", "gamma"};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (std::abs(v[i] - v[j]) <= kSeedTol) {
        r.violations.push_back(std::string(names[i]) + " and " + names[j] + " are equal");
      }
    }
  }
  r.norm = std::sqrt(std::norm(alpha) + std::norm(beta) + std::norm(gamma));
  if (std::abs(r.norm - 1.0) > kSeedTol) r.violations.push_back("seed is not unit norm");
  r.cross_term = 2.0 * (alpha * std::conj(beta) + alpha * std::conj(gamma) + beta * std::conj(gamma)).real();
  if (std::abs(r.cross_term) > kSeedTol) {
    r.violations.push_back("symmetrized cross term is " + std::to_string(r.cross_term) + ", not 0");
  }
  return r;
}

CoherentStateSystem::CoherentStateSystem(const Vec3& seed)
    : group_(make_symmetric_group_3()), seed_(seed), report_(validate_seed(seed[0], seed[1], seed[2])) {
  for (Element g = 0; g < 6; ++g) {
    const auto& p = s3_permutation(g);
    Vec3 phi{};
    for (std::size_t i = 0; i < 3; ++i) phi[static_cast<std::size_t>(p[i])] = seed[i];
    states_.push_back(phi);
  }
}

CoherentStateSystem CoherentStateSystem::make(const Vec3& seed) {
  CoherentStateSystem css(seed);
  if (!css.report_.valid()) {
    std::string msg = "invalid coherent-state seed:";
    for (const auto& v : css.report_.violations) msg += " " + v + ";";
    throw DomainError(msg);
  }
  return css;
}

CoherentStateSystem CoherentStateSystem::unvalidated(const Vec3& seed) { return CoherentStateSystem(seed); }

ComplexMatrix CoherentStateSystem::frame_operator() const {
  ComplexMatrix f(3, 3);
  for (const auto& phi : states_) f += ComplexMatrix::outer(phi);
  return f;
}

std::optional<double> CoherentStateSystem::resolution_constant(double tol) const {
  const auto f = frame_operator();
  const double n = f.trace().real() / 3.0;
  if (max_abs_diff(f, ComplexMatrix::identity(3) * Complex{n}) > tol) return std::nullopt;
  return n;
}

ComplexMatrix s3_representation(Element g) {
  const auto& p = s3_permutation(g);
  return PermutationMatrix(std::vector<std::size_t>(p.begin(), p.end())).dense();
}

const ComplexMatrix& averaging_projector() {
  static const ComplexMatrix p = build_projector();
  return p;
}

const ComplexMatrix& physical_basis() {
  static const ComplexMatrix b = build_physical_basis();
  return b;
}

bool is_group_invariant(const TripartiteVector& v, double tol) {
  if (v.dims() != std::array<std::size_t, 3>{3, 3, 3}) throw ShapeError("expected a (C^3)^3 vector");
  const double scale = std::max(1.0, v.norm());
  for (Element g = 1; g < 6; ++g) {
    const auto moved = apply_diagonal(g, v.amplitudes());
    double d = 0.0;
    for (std::size_t i = 0; i < 27; ++i) d += std::norm(moved[i] - v.amplitudes()[i]);
    if (std::sqrt(d) > tol * scale) return false;
  }
  return true;
}

PhysicalState::PhysicalState(TripartiteVector vector) : vector_(std::move(vector)) {
  if (!is_group_invariant(vector_, kInvarianceTol)) throw ContractError("state is not invariant under S3");
}

GroupAverage group_average(const TripartiteVector& kinematical) {
  if (kinematical.dims() != std::array<std::size_t, 3>{3, 3, 3}) throw ShapeError("expected a (C^3)^3 vector");
  if (std::abs(kinematical.norm() - 1.0) > BipartiteState::kIngestTol) {
    throw NormalizationError("kinematical state is not normalized");
  }
  TripartiteVector raw({3, 3, 3}, averaging_projector().apply(kinematical.amplitudes()));
  const double n = raw.norm();
  if (n < kZeroNorm) throw DegenerateError("group averaging annihilates the kinematical state");
  std::vector<Complex> unit = raw.amplitudes();
  for (auto& z : unit) z /= n;
  return {std::move(raw), PhysicalState(TripartiteVector({3, 3, 3}, std::move(unit)))};
}

double RelativeState::norm() const { return coeffs.frobenius_norm(); }

BipartiteState RelativeState::state() const { return BipartiteState::normalized(coeffs, slot_name(frame_slot)); }

std::array<std::string, 2> RelativeState::systems() const {
  const auto r = remaining_slots(frame_slot);
  return {slot_name(r[0]), slot_name(r[1])};
}

RelativeState reduce(const PhysicalState& phys, const CoherentStateSystem& css, int frame_slot, Element g) {
  check_slot(frame_slot);
  RelativeState rel{contract(phys.vector().amplitudes(), css.orientation_state(g), frame_slot), frame_slot, g};
  rel.coeffs *= Complex{kReductionFactor};
  if (rel.norm() < kZeroNorm) throw DegenerateError("reduction at this orientation vanishes");
  return rel;
}

InverseReduction inverse_reduce(const RelativeState& rel, const CoherentStateSystem& css) {
  check_slot(rel.frame_slot);
  if (rel.coeffs.rows() != 3 || rel.coeffs.cols() != 3) throw ShapeError("relative state must be 3x3");
  const auto& basis = physical_basis();
  const auto& phi = css.orientation_state(rel.orientation);

  // Column k: reduction of the k-th physical basis vector, flattened.
  ComplexMatrix m(9, kPhysicalDimension);
  std::vector<Complex> col(27);
  for (std::size_t k = 0; k < kPhysicalDimension; ++k) {
    for (std::size_t r = 0; r < 27; ++r) col[r] = basis(r, k);
    const auto red = contract(col, phi, rel.frame_slot);
    for (std::size_t r = 0; r < 9; ++r) m(r, k) = kReductionFactor * red.entries()[r];
  }

  const auto target = rel.coeffs.entries();
  const auto md = m.adjoint();
  const auto gram = md * m;
  const auto rhs = md.apply(target);
  const auto eig = hermitian_eigen(gram);
  const double cutoff = 1e-12 * std::max(eig.values.front(), 1e-300);
  std::vector<Complex> x(kPhysicalDimension);
  for (std::size_t j = 0; j < kPhysicalDimension; ++j) {
    if (eig.values[j] <= cutoff) continue;
    Complex proj = 0.0;
    for (std::size_t r = 0; r < kPhysicalDimension; ++r) proj += std::conj(eig.vectors(r, j)) * rhs[r];
    proj /= eig.values[j];
    for (std::size_t r = 0; r < kPhysicalDimension; ++r) x[r] += eig.vectors(r, j) * proj;
  }

  const auto fit = m.apply(x);
  double res = 0.0;
  for (std::size_t r = 0; r < 9; ++r) res += std::norm(fit[r] - target[r]);
  const double scale = vector_norm(target);
  if (scale < kZeroNorm) throw DegenerateError("cannot invert the reduction of a zero state");
  const double residual = std::sqrt(res) / scale;
  if (residual > kImageTol) {
    throw NotInImageError("relative state is not in the image of the reduction map (residual " +
                          std::to_string(residual) + ")");
  }
  return {PhysicalState(TripartiteVector({3, 3, 3}, basis.apply(x))), residual};
}

RelativeState imperfect_frame_change(const RelativeState& rel, const CoherentStateSystem& css, int to_slot,
                                     Element g) {
  return reduce(inverse_reduce(rel, css).physical, css, to_slot, g);
}

ImperfectReport theorem_failure_report(const RelativeState& before, const RelativeState& after) {
  const auto b = before.state();
  const auto a = after.state();
  ImperfectReport r;
  r.entropy = compare_frames(b, a, {Quantifier::kRelativeEntropyCoherence, Quantifier::kEntanglementEntropy});
  r.l2 = compare_frames(b, a, {Quantifier::kL2Coherence, Quantifier::kLinearEntropy});
  const auto rb = reduced_density(b, Keep::kFirst);
  const auto ra = reduced_density(a, Keep::kFirst);
  for (std::size_t i = 0; i < rb.dim(); ++i) r.diagonal_before.push_back(rb.diagonal(i));
  for (std::size_t i = 0; i < ra.dim(); ++i) r.diagonal_after.push_back(ra.diagonal(i));
  auto sb = r.diagonal_before;
  auto sa = r.diagonal_after;
  std::sort(sb.begin(), sb.end());
  std::sort(sa.begin(), sa.end());
  r.diagonals_permutation_equal = sb.size() == sa.size();
  for (std::size_t i = 0; r.diagonals_permutation_equal && i < sb.size(); ++i) {
    if (std::abs(sb[i] - sa[i]) > kDiagonalTol) r.diagonals_permutation_equal = false;
  }
  return r;
}

RelativeState build_parameterized_relative_state(const std::array<Complex, 5>& params, const Vec3& seed) {
  for (const auto& p : params) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) throw DomainError("parameters must be finite");
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix cb(3, 3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        const int k = orbit_of(a, b, c);
        const Complex weight = k == 0 ? params[0] : params[static_cast<std::size_t>(k)] * inv_sqrt2;
        cb(c, b) += std::conj(seed[a]) * weight;
      }
    }
  }
  const double n = cb.frobenius_norm();
  if (n < kZeroNorm) throw DegenerateError("parameterized relative state is zero");
  cb *= Complex{1.0 / n};
  return {std::move(cb), 2, 0};
}

ComplexMatrix canonical_phase(const ComplexMatrix& m) {
  std::size_t best = 0;
  double mag = -1.0;
  const auto e = m.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (std::abs(e[i]) > mag + 1e-12) {
      mag = std::abs(e[i]);
      best = i;
    }
  }
  if (mag <= 0.0) return m;
  return m * (std::conj(e[best]) / mag);
}

}  // namespace qrf
