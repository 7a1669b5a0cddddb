#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tensorbound {

using Complex = std::complex<double>;

/// Size limits for operations that materialize a dense tensor product.
struct Limits {
  std::size_t dim_cap = 4096;
};

/// Dense square complex matrix, row-major. Entries are finite at construction.
class OperatorMatrix {
 public:
  /// Zero matrix of the given dimension (dim >= 1).
  explicit OperatorMatrix(std::size_t dim);
  /// Takes ownership of `entries` (row-major, dim*dim values). Throws ValidationError on
  /// a size mismatch or a non-finite entry.
  OperatorMatrix(std::size_t dim, std::vector<Complex> entries);
  OperatorMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static OperatorMatrix identity(std::size_t dim);
  static OperatorMatrix zero(std::size_t dim) { return OperatorMatrix(dim); }
  static OperatorMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }

  Complex operator()(std::size_t row, std::size_t col) const noexcept { return data_[row * dim_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  OperatorMatrix adjoint() const;
  OperatorMatrix& operator+=(const OperatorMatrix& other);
  OperatorMatrix& operator-=(const OperatorMatrix& other);
  OperatorMatrix& operator*=(Complex scale);

  double frobenius_norm() const;
  /// Frobenius norm of a - a*.
  double hermiticity_defect() const;
  double max_abs_entry() const;
  bool is_zero() const;

  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs);
OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs);
OperatorMatrix operator-(OperatorMatrix a);
OperatorMatrix operator*(Complex scale, OperatorMatrix a);
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

/// Hermiticity tolerance for `a`: 1e-10 * max(1, |a|_F).
double hermitian_tolerance(const OperatorMatrix& a);

}  // namespace tensorbound
