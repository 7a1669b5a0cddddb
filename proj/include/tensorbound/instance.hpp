#pragma once

#include <span>
#include <vector>

#include "tensorbound/matrix.hpp"

namespace tensorbound {

/// B_c = sum_i c_i x_i (x) y_i with every x_i, y_i a self-adjoint contraction.
class TensorSumInstance {
 public:
  /// Empty `weights` means all ones. Throws ValidationError naming the offending term
  /// when a count, a dimension, an operator or a weight is out of contract.
  TensorSumInstance(std::vector<OperatorMatrix> x, std::vector<OperatorMatrix> y, std::vector<double> weights = {});

  std::size_t m() const noexcept { return x_.size(); }
  std::size_t dim_h() const noexcept { return x_.front().dim(); }
  std::size_t dim_k() const noexcept { return y_.front().dim(); }
  const std::vector<OperatorMatrix>& x() const noexcept { return x_; }
  const std::vector<OperatorMatrix>& y() const noexcept { return y_; }
  std::span<const double> weights() const noexcept { return weights_; }
  bool unit_weights() const noexcept;

  /// Same operators, new weights (validated).
  TensorSumInstance with_weights(std::vector<double> weights) const;

 private:
  std::vector<OperatorMatrix> x_;
  std::vector<OperatorMatrix> y_;
  std::vector<double> weights_;
};

double sum_of_squares(std::span<const double> weights);

}  // namespace tensorbound
