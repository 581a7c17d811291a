#pragma once

// Dense complex linear algebra sized for the small systems in this project
// (dimensions up to a few dozen). Storage is row-major; in tensor products
// the left factor is the slow index, so |i>_A |j>_B sits at i * dim_B + j.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qrf {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  // Row-wise literal, e.g. {{1, 0}, {0, -1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  // |v><v| for a column vector v.
  static ComplexMatrix outer(std::span<const Complex> v);
  static ComplexMatrix column(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  Complex trace() const;
  double frobenius_norm() const;
  std::vector<Complex> diagonal_entries() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  std::vector<Complex> apply(std::span<const Complex> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_diagonal(const ComplexMatrix& m, double tol);

// Kronecker product a ⊗ b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Hermitian, unit-trace, positive semidefinite matrix. Construction through
// `validated` checks all three; `trusted` is for results of operations that
// preserve them (partial traces and dephasing of valid states).
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPositivityTol = 1e-10;

  static DensityMatrix validated(ComplexMatrix m);
  static DensityMatrix trusted(ComplexMatrix m);
  static DensityMatrix pure(std::span<const Complex> amplitudes);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double diagonal(std::size_t i) const { return matrix_(i, i).real(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

enum class Keep { kFirst, kSecond };

// Reduced state on the kept tensor factor of a dim_a * dim_b system.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b, Keep keep);

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

// Cyclic complex Jacobi. Stops when the off-diagonal Frobenius norm drops
// below 1e-13 or after 100 sweeps. Throws ContractError when the input is not
// Hermitian within 1e-10.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// One-sided (Hestenes) Jacobi; min(rows, cols) values in descending order.
std::vector<double> singular_values(const ComplexMatrix& m);

// -sum p ln p, natural log, with 0 ln 0 = 0. Entries in [-1e-10, 0) are
// clamped to zero; anything more negative is a PositivityError.
double spectrum_entropy(std::span<const double> probabilities);
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace qrf
