#include "tensorbound/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tensorbound/errors.hpp"
#include "tensorbound/operators.hpp"

namespace tensorbound {

namespace {

void require_contraction(const OperatorMatrix& a, const char* side, std::size_t index) {
  const ContractionCertificate cert = validate(a);
  std::ostringstream msg;
  msg << side << "[" << index << "] (term " << index + 1 << "): ";
  if (!cert.is_hermitian) {
    msg << "not self-adjoint (|a - a*|_F = " << cert.hermiticity_defect << ")";
    throw ValidationError(msg.str());
  }
  if (!cert.is_contraction) {
    msg << "not a contraction (norm " << cert.norm << ")";
    throw ValidationError(msg.str());
  }
}

void require_weights(const std::vector<double>& weights, std::size_t m) {
  if (weights.size() != m) {
    throw ValidationError("expected " + std::to_string(m) + " weights, got " + std::to_string(weights.size()));
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!std::isfinite(weights[i])) throw ValidationError("weight " + std::to_string(i) + " is not finite");
}

}  // namespace

TensorSumInstance::TensorSumInstance(std::vector<OperatorMatrix> x, std::vector<OperatorMatrix> y,
                                     std::vector<double> weights)
    : x_(std::move(x)), y_(std::move(y)), weights_(std::move(weights)) {
  if (x_.empty()) throw ValidationError("instance needs at least one term");
  if (x_.size() != y_.size()) {
    throw ValidationError("x has " + std::to_string(x_.size()) + " operators but y has " + std::to_string(y_.size()));
  }
  if (weights_.empty()) weights_.assign(x_.size(), 1.0);
  require_weights(weights_, x_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i].dim() != x_.front().dim()) throw ValidationError("x[" + std::to_string(i) + "]: dimension differs from x[0]");
    if (y_[i].dim() != y_.front().dim()) throw ValidationError("y[" + std::to_string(i) + "]: dimension differs from y[0]");
    require_contraction(x_[i], "x", i);
    require_contraction(y_[i], "y", i);
  }
}

bool TensorSumInstance::unit_weights() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](double c) { return c == 1.0; });
}

TensorSumInstance TensorSumInstance::with_weights(std::vector<double> weights) const {
  require_weights(weights, m());
  TensorSumInstance copy = *this;
  copy.weights_ = std::move(weights);
  return copy;
}

double sum_of_squares(std::span<const double> weights) {
  double sum = 0.0;
  for (double c : weights) sum += c * c;
  return sum;
}

}  // namespace tensorbound
