#include "tensorbound/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tensorbound/errors.hpp"
#include "tensorbound/linalg.hpp"
#include "tensorbound/rng.hpp"

namespace tensorbound {

ContractionCertificate validate(const OperatorMatrix& a) {
  ContractionCertificate cert;
  cert.hermiticity_defect = a.hermiticity_defect();
  cert.is_hermitian = cert.hermiticity_defect <= hermitian_tolerance(a);
  cert.norm = spectral_norm(a);
  cert.is_contraction = cert.norm <= 1.0 + kContractionTol;
  cert.involution_defect = spectral_norm(a * a - OperatorMatrix::identity(a.dim()));
  cert.is_unitary_involution = cert.is_hermitian && cert.involution_defect <= kInvolutionTol;
  return cert;
}

OperatorMatrix pauli(Pauli which) {
  using namespace std::complex_literals;
  switch (which) {
    case Pauli::x:
      return OperatorMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case Pauli::y:
      return OperatorMatrix{{0.0, -1i}, {1i, 0.0}};
    case Pauli::z:
      return OperatorMatrix{{1.0, 0.0}, {0.0, -1.0}};
  }
  throw PreconditionError("unknown Pauli matrix");
}

std::vector<OperatorMatrix> clifford_generators(std::size_t m, const Limits& limits) {
  if (m == 0) throw PreconditionError("clifford_generators: m must be at least 1");
  const std::size_t qubits = (m + 1) / 2;
  if (qubits >= 63 || (std::size_t{1} << qubits) > limits.dim_cap) {
    throw DimensionCapError("clifford_generators: " + std::to_string(m) + " generators need " +
                            std::to_string(qubits) + " qubits, beyond the dimension cap " +
                            std::to_string(limits.dim_cap));
  }
  const OperatorMatrix id = OperatorMatrix::identity(2);
  const OperatorMatrix z = pauli(Pauli::z);

  auto string_op = [&](std::size_t site, const OperatorMatrix& center) {
    OperatorMatrix out = site == 0 ? center : z;
    for (std::size_t q = 1; q < qubits; ++q) {
      const OperatorMatrix& factor = q < site ? z : (q == site ? center : id);
      out = kron(out, factor, limits);
    }
    return out;
  };

  std::vector<OperatorMatrix> gammas;
  gammas.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    gammas.push_back(string_op(k / 2, pauli(k % 2 == 0 ? Pauli::x : Pauli::y)));
  }
  return gammas;
}

namespace {

Complex complex_normal(Rng& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return {re, im};
}

// Columns of the unitary factor of a complex Gaussian matrix (modified Gram-Schmidt).
OperatorMatrix gaussian_unitary(Rng& rng, std::size_t n) {
  OperatorMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = complex_normal(rng);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex dot{};
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(g(r, prev)) * g(r, c);
      for (std::size_t r = 0; r < n; ++r) g(r, c) -= dot * g(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(g(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) g(r, c) /= norm;
  }
  return g;
}

void make_exactly_hermitian(OperatorMatrix& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const Complex mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = mean;
      a(j, i) = std::conj(mean);
    }
  }
}

}  // namespace

OperatorMatrix random_operator(const RandomEnsembleConfig& config) {
  if (config.dim == 0) throw PreconditionError("random_operator: dim must be at least 1");
  Rng rng(config.seed);
  const std::size_t n = config.dim;

  if (config.kind == EnsembleKind::contraction) {
    OperatorMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = complex_normal(rng);
    make_exactly_hermitian(h);
    const double scale = rng.uniform();
    const double norm = hermitian_eig(h).spectral_norm;
    if (norm == 0.0) return h;
    h *= scale / norm;
    return h;
  }

  const OperatorMatrix q = gaussian_unitary(rng, n);
  std::vector<double> signs(n);
  for (auto& s : signs) s = rng.coin() ? 1.0 : -1.0;
  OperatorMatrix out = q * OperatorMatrix::diagonal(signs) * q.adjoint();
  make_exactly_hermitian(out);
  return out;
}

}  // namespace tensorbound
