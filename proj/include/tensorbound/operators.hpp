#pragma once

#include <cstdint>
#include <vector>

#include "tensorbound/matrix.hpp"

namespace tensorbound {

inline constexpr double kContractionTol = 1e-9;
inline constexpr double kInvolutionTol = 1e-9;

struct ContractionCertificate {
  bool is_hermitian = false;
  double hermiticity_defect = 0.0;
  double norm = 0.0;
  bool is_contraction = false;
  bool is_unitary_involution = false;
  /// |a^2 - I|.
  double involution_defect = 0.0;
};

/// Never throws; all findings are reported in the certificate.
ContractionCertificate validate(const OperatorMatrix& a);

enum class Pauli { x, y, z };

/// Standard Pauli matrix, sigma_y = [[0, -i], [i, 0]].
OperatorMatrix pauli(Pauli which);

/// m pairwise anticommuting Hermitian involutions of dimension 2^ceil(m/2), built
/// with the Jordan-Wigner pattern Z..Z X I..I / Z..Z Y I..I. Entries lie in {0, +-1, +-i}.
std::vector<OperatorMatrix> clifford_generators(std::size_t m, const Limits& limits = {});

enum class EnsembleKind { contraction, unitary_involution };

struct RandomEnsembleConfig {
  std::uint64_t seed = 0;
  std::size_t dim = 2;
  EnsembleKind kind = EnsembleKind::contraction;
};

/// contraction: Hermitian part of a complex Gaussian matrix scaled to norm s ~ U[0,1).
/// unitary_involution: Q diag(+-1) Q* with Q from QR of a complex Gaussian matrix.
/// Bit-identical for identical configs.
OperatorMatrix random_operator(const RandomEnsembleConfig& config);

}  // namespace tensorbound
