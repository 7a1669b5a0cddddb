#include "tensorbound/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tensorbound/errors.hpp"
#include "tensorbound/kernels.hpp"

namespace tensorbound {

namespace {

void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
}

}  // namespace

OperatorMatrix::OperatorMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw ValidationError("operator dimension must be at least 1");
}

OperatorMatrix::OperatorMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
  if (dim == 0) throw ValidationError("operator dimension must be at least 1");
  if (data_.size() != dim * dim) {
    throw ValidationError("expected " + std::to_string(dim * dim) + " entries for a " + std::to_string(dim) + "x" +
                          std::to_string(dim) + " operator, got " + std::to_string(data_.size()));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!std::isfinite(data_[k].real()) || !std::isfinite(data_[k].imag())) {
      throw ValidationError("non-finite entry at (" + std::to_string(k / dim) + ", " + std::to_string(k % dim) + ")");
    }
  }
}

OperatorMatrix::OperatorMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : OperatorMatrix(rows.size(), [&] {
        std::vector<Complex> flat;
        flat.reserve(rows.size() * rows.size());
        for (const auto& row : rows) {
          if (row.size() != rows.size()) throw ValidationError("operator rows must form a square matrix");
          flat.insert(flat.end(), row.begin(), row.end());
        }
        return flat;
      }()) {}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
  OperatorMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

OperatorMatrix OperatorMatrix::diagonal(std::span<const double> values) {
  OperatorMatrix out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
  return out;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& other) {
  require_same_dim(*this, other, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& other) {
  require_same_dim(*this, other, "subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

double OperatorMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& v : data_) sum += std::norm(v);
  return std::sqrt(sum);
}

double OperatorMatrix::hermiticity_defect() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) sum += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  return std::sqrt(sum);
}

double OperatorMatrix::max_abs_entry() const {
  double best = 0.0;
  for (const auto& v : data_) best = std::max(best, std::abs(v));
  return best;
}

bool OperatorMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& v) { return v == Complex{}; });
}

OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs += rhs; }
OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs -= rhs; }
OperatorMatrix operator-(OperatorMatrix a) { return a *= -1.0; }
OperatorMatrix operator*(Complex scale, OperatorMatrix a) { return a *= scale; }

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "multiply");
  OperatorMatrix out(a.dim());
  kernels::matmul(a.data(), b.data(), out.data(), a.dim());
  return out;
}

double hermitian_tolerance(const OperatorMatrix& a) { return 1e-10 * std::max(1.0, a.frobenius_norm()); }

}  // namespace tensorbound
