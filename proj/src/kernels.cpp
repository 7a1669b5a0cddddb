#include "tensorbound/kernels.hpp"

#include <cstdint>

namespace tensorbound::kernels {

namespace serial {

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    Complex* row = out.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = Complex{};
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex{}) continue;
      const Complex* brow = b.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
  }
}

void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out) {
  const std::size_t n = na * nb;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < nb; ++k)
      for (std::size_t j = 0; j < na; ++j)
        for (std::size_t l = 0; l < nb; ++l) out[(i * nb + k) * n + j * nb + l] = a[i * na + j] * b[k * nb + l];
}

void kron_accumulate(Complex scale, std::span<const Complex> a, std::size_t na, std::span<const Complex> b,
                     std::size_t nb, std::span<Complex> out) {
  const std::size_t n = na * nb;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < nb; ++k)
      for (std::size_t j = 0; j < na; ++j) {
        const Complex sa = scale * a[i * na + j];
        for (std::size_t l = 0; l < nb; ++l) out[(i * nb + k) * n + j * nb + l] += sa * b[k * nb + l];
      }
}

}  // namespace serial

// Row-parallel versions of the loops above. Each output row is produced by exactly
// one thread with the same accumulation order, so results match the serial kernels bit for bit.

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t n) {
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    Complex* row = out.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = Complex{};
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex{}) continue;
      const Complex* brow = b.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
  }
}

void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out) {
  const std::size_t n = na * nb;
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t r = 0; r < rows; ++r) {
    const std::size_t i = static_cast<std::size_t>(r) / nb;
    const std::size_t k = static_cast<std::size_t>(r) % nb;
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t l = 0; l < nb; ++l) out[(i * nb + k) * n + j * nb + l] = a[i * na + j] * b[k * nb + l];
  }
}

void kron_accumulate(Complex scale, std::span<const Complex> a, std::size_t na, std::span<const Complex> b,
                     std::size_t nb, std::span<Complex> out) {
  const std::size_t n = na * nb;
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t r = 0; r < rows; ++r) {
    const std::size_t i = static_cast<std::size_t>(r) / nb;
    const std::size_t k = static_cast<std::size_t>(r) % nb;
    for (std::size_t j = 0; j < na; ++j) {
      const Complex sa = scale * a[i * na + j];
      for (std::size_t l = 0; l < nb; ++l) out[(i * nb + k) * n + j * nb + l] += sa * b[k * nb + l];
    }
  }
}

}  // namespace tensorbound::kernels
