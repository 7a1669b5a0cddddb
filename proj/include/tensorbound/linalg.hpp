#pragma once

#include <vector>

#include "tensorbound/matrix.hpp"

namespace tensorbound {

/// Relative reconstruction tolerance the Hermitian eigensolver guarantees.
inline constexpr double kEigTol = 1e-9;

struct SpectralSummary {
  std::vector<double> eigenvalues;  // ascending
  double spectral_norm = 0.0;
  double lambda_max = 0.0;
  double lambda_min = 0.0;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  OperatorMatrix vectors;           // column k is the eigenvector of eigenvalues[k]
};

/// Kronecker product. Throws DimensionCapError when dim(a)*dim(b) exceeds limits.dim_cap.
OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b, const Limits& limits = {});

/// ab - ba.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
/// ab + ba.
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Eigenvalues of a Hermitian matrix, via Householder tridiagonalization and implicit QL.
/// Throws ValidationError when a is not Hermitian within hermitian_tolerance(a).
SpectralSummary hermitian_eig(const OperatorMatrix& a);

/// Eigenvalues and orthonormal eigenvectors; same preconditions as hermitian_eig.
EigenDecomposition hermitian_eigensystem(const OperatorMatrix& a);

SpectralSummary summarize_spectrum(std::vector<double> ascending_eigenvalues);

/// Operator (largest singular value) norm. Hermitian inputs use max |eigenvalue|,
/// everything else sqrt(lambda_max(a* a)).
double spectral_norm(const OperatorMatrix& a);

}  // namespace tensorbound
