#include "qrf/bell.hpp"

#include <cmath>
#include <string>

#include "qrf/errors.hpp"

namespace qrf {
namespace {

constexpr double kLocalBound = 3.0;
constexpr double kBoundTol = 1e-9;
constexpr double kRankTol = 1e-10;

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) {
  const auto& r = rho.matrix();
  Complex s = 0.0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) s += r(i, j) * op(j, i);
  }
  return s.real();
}

}  // namespace

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix spin_along(const Direction& m) {
  return pauli_x() * Complex{m[0]} + pauli_y() * Complex{m[1]} + pauli_z() * Complex{m[2]};
}

ComplexMatrix spin_projector(const Direction& m, int outcome) {
  const double sign = outcome == 0 ? 1.0 : -1.0;
  return (ComplexMatrix::identity(2) + spin_along(m) * Complex{sign}) * Complex{0.5};
}

Observable::Observable(ComplexMatrix matrix, std::size_t dim_a, std::size_t dim_b)
    : matrix_(std::move(matrix)), dim_a_(dim_a), dim_b_(dim_b) {
  if (matrix_.rows() != dim_a * dim_b || !matrix_.is_square()) {
    throw ShapeError("observable shape does not match the declared bipartition");
  }
  if (!is_hermitian(matrix_, 1e-12)) throw ContractError("observable is not Hermitian");
}

ChshSettings ChshSettings::standard() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{Direction{0, 0, 1}, Direction{1, 0, 0}}, {Direction{r, 0, r}, Direction{-r, 0, r}}};
}

void ChshSettings::validate() const {
  for (const auto* side : {&alice, &bob}) {
    for (const auto& d : *side) {
      const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
      if (std::abs(n - 1.0) > 1e-12) throw DomainError("measurement direction is not unit norm");
    }
  }
}

std::array<ComplexMatrix, 16> product_projectors(const ChshSettings& settings) {
  settings.validate();
  std::array<ComplexMatrix, 16> out;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          out[table_index(x, y, a, b)] =
              tensor(spin_projector(settings.alice[x], a), spin_projector(settings.bob[y], b));
        }
      }
    }
  }
  return out;
}

std::array<Observable, 4> joint_observables(const ChshSettings& settings) {
  settings.validate();
  auto make = [&](int x, int y) {
    return Observable(tensor(spin_along(settings.alice[x]), spin_along(settings.bob[y])), 2, 2);
  };
  return {make(0, 0), make(0, 1), make(1, 0), make(1, 1)};
}

ProbabilityTable probabilities(const DensityMatrix& rho, const std::array<ComplexMatrix, 16>& projectors) {
  ProbabilityTable t{};
  for (std::size_t k = 0; k < 16; ++k) t[k] = expectation(rho, projectors[k]);
  return t;
}

ProbabilityTable outcome_probabilities(const DensityMatrix& rho, const ChshSettings& settings) {
  if (rho.dim() != 4) throw DomainError("CHSH probabilities need a two-qubit state");
  return probabilities(rho, product_projectors(settings));
}

ProbabilityTable outcome_probabilities(const ChshScenario& scenario) {
  const auto& st = scenario.state;
  if (st.dim_first() != 2 || st.dim_second() != 2) throw DomainError("CHSH probabilities need a two-qubit state");
  const auto amps = st.amplitudes();
  return outcome_probabilities(DensityMatrix::pure(amps), scenario.settings);
}

ChshValue chsh_value(const ProbabilityTable& table) {
  double v = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          if ((a ^ b) == (x & y)) v += table[table_index(x, y, a, b)];
        }
      }
    }
  }
  return {v, v > kLocalBound + kBoundTol};
}

TransformedScenario transform_scenario(const ChshScenario& scenario, const QrfUnitary& s) {
  if (s.group().order() != 2 || scenario.state.require_group().order() != 2) {
    throw DomainError("CHSH frame change needs a two-element group");
  }
  auto state = transform_state(scenario.state);
  const auto obs = joint_observables(scenario.settings);
  auto make = [&](std::size_t k) { return Observable(transform_observable(obs[k].matrix(), s), 2, 2); };
  std::array<Observable, 4> tobs = {make(0), make(1), make(2), make(3)};

  std::array<ComplexMatrix, 16> proj = product_projectors(scenario.settings);
  for (auto& p : proj) p = transform_observable(p, s);
  const auto amps = state.amplitudes();
  auto probs = probabilities(DensityMatrix::pure(amps), proj);
  return {std::move(state), std::move(tobs), std::move(proj), probs};
}

SchmidtRank operator_schmidt_rank(const ComplexMatrix& o, std::size_t dim_a, std::size_t dim_b) {
  if (o.rows() != dim_a * dim_b || o.cols() != dim_a * dim_b) throw ShapeError("operator does not match bipartition");
  ComplexMatrix r(dim_a * dim_a, dim_b * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i) {
    for (std::size_t ip = 0; ip < dim_b; ++ip) {
      for (std::size_t j = 0; j < dim_a; ++j) {
        for (std::size_t jp = 0; jp < dim_b; ++jp) {
          r(i * dim_a + j, ip * dim_b + jp) = o(i * dim_b + ip, j * dim_b + jp);
        }
      }
    }
  }
  SchmidtRank out;
  out.singular_values = singular_values(r);
  for (double s : out.singular_values) {
    if (s > kRankTol) ++out.rank;
  }
  return out;
}

SchmidtRank operator_schmidt_rank(const Observable& o) { return operator_schmidt_rank(o.matrix(), o.dim_a(), o.dim_b()); }

}  // namespace qrf
