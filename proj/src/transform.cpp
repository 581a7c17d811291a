#include "qrf/transform.hpp"

#include <cmath>

#include "qrf/errors.hpp"

namespace qrf {
namespace {

constexpr double kIncoherenceTol = 1e-12;

PermutationMatrix qrf_basis_map(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> mapping(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element inv = g.inverse(static_cast<Element>(a));
    for (std::size_t b = 0; b < n; ++b) {
      const Element target = g.compose(inv, static_cast<Element>(b));
      mapping[a * n + b] = static_cast<std::size_t>(inv) * n + static_cast<std::size_t>(target);
    }
  }
  return PermutationMatrix(std::move(mapping));
}

std::string swapped_frame(const std::string& frame) {
  if (frame == "C") return "A";
  if (frame == "A") return "C";
  return frame + "'";
}

}  // namespace

QrfUnitary::QrfUnitary(GroupPtr group) : group_(std::move(group)), basis_map_(qrf_basis_map(*group_)) {}

QrfUnitary build_qrf_unitary(GroupPtr group) { return QrfUnitary(std::move(group)); }

BipartiteState transform_state(const BipartiteState& psi) {
  const GroupTable& g = psi.require_group();
  const std::size_t n = g.order();
  ComplexMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element inv = g.inverse(static_cast<Element>(a));
    for (std::size_t b = 0; b < n; ++b) {
      out(a, b) = psi.coeffs()(static_cast<std::size_t>(inv), static_cast<std::size_t>(g.compose(inv, static_cast<Element>(b))));
    }
  }
  return BipartiteState(std::move(out), swapped_frame(psi.frame()), psi.group());
}

ComplexMatrix transform_observable(const ComplexMatrix& observable, const QrfUnitary& s) {
  const std::size_t d = s.dimension();
  if (observable.rows() != d || observable.cols() != d) {
    throw ShapeError("observable must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  // (S O S^dagger)(pi(i), pi(j)) = O(i, j) for the basis permutation pi.
  const auto& map = s.basis_map();
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out(map.image(i), map.image(j)) = observable(i, j);
  }
  return out;
}

std::vector<ComplexMatrix> kraus_operators(const GroupTable& group, std::span<const Complex> phi_b) {
  const std::size_t n = group.order();
  if (phi_b.size() != n) throw ShapeError("frame-free state must have length |G|");
  double n2 = 0.0;
  for (const auto& z : phi_b) n2 += std::norm(z);
  if (std::abs(n2 - 1.0) > 1e-10) throw NormalizationError("kraus_operators: phi_B is not normalized");

  std::vector<ComplexMatrix> ops;
  ops.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    ComplexMatrix e(n, n);
    for (std::size_t h = 0; h < n; ++h) {
      const auto hg = static_cast<std::size_t>(group.compose(static_cast<Element>(h), static_cast<Element>(g)));
      e(static_cast<std::size_t>(group.inverse(static_cast<Element>(h))), h) = phi_b[hg];
    }
    ops.push_back(std::move(e));
  }
  return ops;
}

ComplexMatrix apply_channel(std::span<const ComplexMatrix> kraus, const ComplexMatrix& rho) {
  if (kraus.empty()) throw ShapeError("empty Kraus list");
  ComplexMatrix out(kraus.front().rows(), kraus.front().rows());
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

IncoherenceResult is_incoherent_unitary(const ComplexMatrix& u, std::size_t dim_a, std::size_t dim_b) {
  const std::size_t d = dim_a * dim_b;
  if (u.rows() != d || u.cols() != d) throw ShapeError("unitary dimension does not match dim_a * dim_b");
  // U |k><k| U^dagger = |u_k><u_k| with u_k the k-th column of U.
  std::vector<Complex> col(d);
  for (std::size_t a = 0; a < dim_a; ++a) {
    for (std::size_t b = 0; b < dim_b; ++b) {
      const std::size_t k = a * dim_b + b;
      for (std::size_t r = 0; r < d; ++r) col[r] = u(r, k);
      if (!is_diagonal(ComplexMatrix::outer(col), kIncoherenceTol)) return {false, std::make_pair(a, b)};
    }
  }
  return {true, std::nullopt};
}

IncoherenceResult is_incoherent_unitary(const QrfUnitary& s) {
  return is_incoherent_unitary(s.dense(), s.group().order(), s.group().order());
}

}  // namespace qrf
