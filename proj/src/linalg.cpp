#include "qrf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qrf/errors.hpp"

namespace qrf {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("matrix entries: expected " + std::to_string(rows_ * cols_) + ", got " +
                     std::to_string(entries_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) {
  return ComplexMatrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& z : out.entries_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw ShapeError("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

std::vector<Complex> ComplexMatrix::diagonal_entries() const {
  std::vector<Complex> d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) {
    throw ShapeError("matrix product: " + std::to_string(lhs.rows_) + "x" + std::to_string(lhs.cols_) +
                     " times " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  ComplexMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != cols_) throw ShapeError("matrix-vector product shape mismatch");
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("max_abs_diff shape mismatch");
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

bool is_diagonal(const ComplexMatrix& m, double tol) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex s = a(ia, ja);
      if (s == Complex{}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
      }
    }
  }
  return out;
}

DensityMatrix DensityMatrix::validated(ComplexMatrix m) {
  if (!m.is_square() || m.empty()) throw ShapeError("density matrix must be square and non-empty");
  if (!is_hermitian(m, kHermitianTol)) throw ContractError("density matrix is not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw NormalizationError("density matrix trace " + std::to_string(tr.real()) + " is not 1");
  }
  const auto eig = hermitian_eigenvalues(m);
  if (eig.back() < -kPositivityTol) {
    throw PositivityError("density matrix has eigenvalue " + std::to_string(eig.back()));
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) { return DensityMatrix(std::move(m)); }

DensityMatrix DensityMatrix::pure(std::span<const Complex> amplitudes) {
  double n2 = 0.0;
  for (const auto& z : amplitudes) n2 += std::norm(z);
  if (std::abs(n2 - 1.0) > 1e-10) throw NormalizationError("pure state is not normalized");
  return DensityMatrix(ComplexMatrix::outer(amplitudes));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b, Keep keep) {
  const auto& m = rho.matrix();
  if (dim_a * dim_b != rho.dim()) {
    throw ShapeError("partial_trace: " + std::to_string(dim_a) + "*" + std::to_string(dim_b) +
                     " != " + std::to_string(rho.dim()));
  }
  if (keep == Keep::kFirst) {
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i) {
      for (std::size_t k = 0; k < dim_a; ++k) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < dim_b; ++j) s += m(i * dim_b + j, k * dim_b + j);
        out(i, k) = s;
      }
    }
    return DensityMatrix::trusted(std::move(out));
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t j = 0; j < dim_b; ++j) {
    for (std::size_t l = 0; l < dim_b; ++l) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < dim_a; ++i) s += m(i * dim_b + j, i * dim_b + l);
      out(j, l) = s;
    }
  }
  return DensityMatrix::trusted(std::move(out));
}

namespace {

constexpr double kHermitianInputTol = 1e-10;
constexpr double kOffDiagonalStop = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Smaller root of t^2 + 2 zeta t - 1 = 0.
double jacobi_tangent(double zeta) {
  const double sign = zeta >= 0.0 ? 1.0 : -1.0;
  return sign / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("hermitian_eigen: matrix is not square");
  if (!is_hermitian(m, kHermitianInputTol)) throw ContractError("hermitian_eigen: matrix is not Hermitian");
  const std::size_t n = m.rows();

  ComplexMatrix a = (m + m.adjoint()) * Complex{0.5};
  ComplexMatrix v = ComplexMatrix::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= kOffDiagonalStop; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const Complex phase = apq / r;
        const Complex phase_c = std::conj(phase);
        const double t = jacobi_tangent((a(q, q).real() - a(p, p).real()) / (2.0 * r));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // J = [[c, s], [-s e*, c e*]] on (p, q); a <- J^dagger a J.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * phase_c * akq;
          a(k, q) = s * akp + c * phase_c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * phase_c * vkq;
          v(k, q) = s * vkp + c * phase_c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return hermitian_eigen(m).values; }

std::vector<double> singular_values(const ComplexMatrix& m) {
  // Orthogonalize the columns of the taller orientation.
  ComplexMatrix u = m.rows() >= m.cols() ? m : m.adjoint();
  const std::size_t rows = u.rows();
  const std::size_t cols = u.cols();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < cols; ++i) {
      for (std::size_t j = i + 1; j < cols; ++j) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += std::norm(u(k, i));
          beta += std::norm(u(k, j));
          gamma += std::conj(u(k, i)) * u(k, j);
        }
        const double g = std::abs(gamma);
        if (g < 1e-300 || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase_c = std::conj(gamma / g);
        const double t = jacobi_tangent((beta - alpha) / (2.0 * g));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < rows; ++k) {
          const Complex ui = u(k, i);
          const Complex vj = u(k, j) * phase_c;
          u(k, i) = c * ui - s * vj;
          u(k, j) = s * ui + c * vj;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> values(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < rows; ++k) s += std::norm(u(k, j));
    values[j] = std::sqrt(s);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  values.resize(std::min(m.rows(), m.cols()));
  return values;
}

double spectrum_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p < -DensityMatrix::kPositivityTol) {
      throw PositivityError("negative eigenvalue " + std::to_string(p) + " in entropy");
    }
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto values = hermitian_eigenvalues(rho.matrix());
  return spectrum_entropy(values);
}

}  // namespace qrf
