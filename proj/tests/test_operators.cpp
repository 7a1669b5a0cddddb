#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tensorbound/errors.hpp"
#include "tensorbound/linalg.hpp"
#include "tensorbound/operators.hpp"
#include "test_support.hpp"

namespace tensorbound {
namespace {

TEST(Validate, PauliXIsInvolution) {
  const ContractionCertificate c = validate(pauli(Pauli::x));
  EXPECT_TRUE(c.is_hermitian);
  EXPECT_DOUBLE_EQ(c.norm, 1.0);
  EXPECT_TRUE(c.is_contraction);
  EXPECT_TRUE(c.is_unitary_involution);
}

TEST(Validate, ScaledPauliIsNotContraction) {
  const ContractionCertificate c = validate(2.0 * pauli(Pauli::x));
  EXPECT_FALSE(c.is_contraction);
  EXPECT_FALSE(c.is_unitary_involution);
  EXPECT_DOUBLE_EQ(c.norm, 2.0);
}

TEST(Validate, HalfSumOfZAndX) {
  const OperatorMatrix a = 0.5 * (pauli(Pauli::z) + pauli(Pauli::x));
  const auto oracle = testing::eig_2x2(a);  // closed-form 2x2 eigenvalues
  const double expected_norm = std::max(std::abs(oracle[0]), std::abs(oracle[1]));
  EXPECT_NEAR(expected_norm, std::numbers::sqrt2 / 2.0, 1e-15);

  const ContractionCertificate c = validate(a);
  EXPECT_TRUE(c.is_contraction);
  EXPECT_FALSE(c.is_unitary_involution);
  EXPECT_NEAR(c.norm, expected_norm, 1e-14);
}

TEST(Validate, NonHermitianIsReportedNotThrown) {
  const OperatorMatrix a{{0.0, 1.0}, {0.0, 0.0}};
  ContractionCertificate c;
  EXPECT_NO_THROW(c = validate(a));
  EXPECT_FALSE(c.is_hermitian);
  EXPECT_NEAR(c.hermiticity_defect, std::sqrt(2.0), 1e-15);
  EXPECT_FALSE(c.is_unitary_involution);
  EXPECT_TRUE(c.is_contraction);
}

TEST(Pauli, StandardMatrices) {
  using namespace std::complex_literals;
  EXPECT_EQ(pauli(Pauli::z), (OperatorMatrix{{1.0, 0.0}, {0.0, -1.0}}));
  EXPECT_EQ(pauli(Pauli::x), (OperatorMatrix{{0.0, 1.0}, {1.0, 0.0}}));
  EXPECT_EQ(pauli(Pauli::y), (OperatorMatrix{{0.0, -1i}, {1i, 0.0}}));
  EXPECT_TRUE(anticommutator(pauli(Pauli::x), pauli(Pauli::z)).is_zero());
}

TEST(Clifford, SingleGenerator) {
  const auto g = clifford_generators(1);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], pauli(Pauli::x));
}

TEST(Clifford, TwoGenerators) {
  const auto g = clifford_generators(2);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], pauli(Pauli::x));
  EXPECT_EQ(g[1], pauli(Pauli::y));
  EXPECT_EQ(spectral_norm(anticommutator(g[0], g[1])), 0.0);
  EXPECT_EQ(spectral_norm(commutator(g[0], g[1])), 2.0);
}

TEST(Clifford, ThreeGeneratorsAnticommuteExactly) {
  const auto g = clifford_generators(3);
  ASSERT_EQ(g.size(), 3u);
  for (const auto& gamma : g) EXPECT_EQ(gamma.dim(), 4u);
  // Direct multiplication, entrywise.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const OperatorMatrix sum = g[i] * g[j] + g[j] * g[i];
      for (const Complex& v : sum.data()) EXPECT_EQ(v, Complex{});
    }
}

TEST(Clifford, PropertiesUpToTwelve) {
  for (std::size_t m = 1; m <= 12; ++m) {
    const auto g = clifford_generators(m);
    const std::size_t dim = std::size_t{1} << ((m + 1) / 2);
    for (std::size_t i = 0; i < m; ++i) {
      ASSERT_EQ(g[i].dim(), dim);
      EXPECT_EQ(g[i] * g[i], OperatorMatrix::identity(dim)) << "m=" << m << " i=" << i;
      EXPECT_TRUE(validate(g[i]).is_unitary_involution);
      for (std::size_t j = i + 1; j < m; ++j) EXPECT_TRUE(anticommutator(g[i], g[j]).is_zero());
    }
  }
}

TEST(Clifford, TensorSquaresCommute) {
  const auto g = clifford_generators(5);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const OperatorMatrix a = kron(g[i], g[i]);
      const OperatorMatrix b = kron(g[j], g[j]);
      EXPECT_EQ(a * b, b * a);
    }
}

TEST(Clifford, Errors) {
  EXPECT_THROW(clifford_generators(0), PreconditionError);
  EXPECT_THROW(clifford_generators(17, Limits{256}), DimensionCapError);
  EXPECT_NO_THROW(clifford_generators(16, Limits{256}));
}

TEST(RandomOperator, ContractionsStayContractions) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const OperatorMatrix a = random_operator({seed, 1 + seed % 5, EnsembleKind::contraction});
    const double norm = spectral_norm(a);
    ASSERT_LE(norm, 1.0) << "seed " << seed;
    ASSERT_TRUE(validate(a).is_contraction);
    ASSERT_EQ(a.hermiticity_defect(), 0.0);
  }
}

TEST(RandomOperator, InvolutionsSquareToIdentity) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t dim = 1 + seed % 6;
    const OperatorMatrix a = random_operator({seed, dim, EnsembleKind::unitary_involution});
    EXPECT_LE(spectral_norm(a * a - OperatorMatrix::identity(dim)), 1e-10) << "seed " << seed;
    EXPECT_TRUE(validate(a).is_unitary_involution);
  }
}

TEST(RandomOperator, Deterministic) {
  for (EnsembleKind kind : {EnsembleKind::contraction, EnsembleKind::unitary_involution}) {
    const RandomEnsembleConfig config{0xdeadbeefULL, 4, kind};
    EXPECT_EQ(random_operator(config), random_operator(config));
    EXPECT_NE(random_operator(config), random_operator({0xdeadbeefULL + 1, 4, kind}));
  }
}

TEST(Rng, SplitStreamsAreReproducible) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  Rng s1 = Rng(42).split(3), s2 = Rng(42).split(3), s3 = Rng(42).split(4);
  EXPECT_EQ(s1.next_u64(), s2.next_u64());
  EXPECT_NE(Rng(42).split(3).next_u64(), s3.next_u64());
}

TEST(Rng, NormalMomentsAreSane) {
  Rng rng(8);
  double sum = 0.0, sum_sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double v = rng.normal();
    sum += v;
    sum_sq += v * v;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sum_sq / n, 1.0, 0.01);
}

}  // namespace
}  // namespace tensorbound
