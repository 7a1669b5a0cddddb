#include "tensorbound/linalg.hpp"

#include <string>

#include "tensorbound/errors.hpp"
#include "tensorbound/kernels.hpp"

namespace tensorbound {

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b, const Limits& limits) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (na > limits.dim_cap / nb) {
    throw DimensionCapError("tensor dimension " + std::to_string(na) + "*" + std::to_string(nb) +
                            " exceeds the dimension cap " + std::to_string(limits.dim_cap));
  }
  OperatorMatrix out(na * nb);
  kernels::kron(a.data(), na, b.data(), nb, out.data());
  return out;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("commutator: dimension mismatch");
  return a * b - b * a;
}

OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("anticommutator: dimension mismatch");
  return a * b + b * a;
}

}  // namespace tensorbound
