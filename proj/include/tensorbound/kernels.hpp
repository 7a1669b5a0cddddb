#pragma once

// Dense kernels used by OperatorMatrix arithmetic. The default entry points are
// OpenMP-parallel; the `serial` namespace holds the reference versions the
// tests and benchmarks compare against. Both produce identical results: every
// output element is accumulated in the same order.

#include <cstddef>
#include <span>

#include "tensorbound/matrix.hpp"

namespace tensorbound::kernels {

namespace serial {

/// out = a * b for n x n row-major operands.
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t n);

/// out = a (x) b, with out of dimension na*nb.
void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out);

/// out += scale * (a (x) b).
void kron_accumulate(Complex scale, std::span<const Complex> a, std::size_t na, std::span<const Complex> b,
                     std::size_t nb, std::span<Complex> out);

}  // namespace serial

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t n);
void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out);
void kron_accumulate(Complex scale, std::span<const Complex> a, std::size_t na, std::span<const Complex> b,
                     std::size_t nb, std::span<Complex> out);

/// Below this output dimension the parallel kernels run on the calling thread.
inline constexpr std::size_t kParallelThreshold = 32;

}  // namespace tensorbound::kernels
