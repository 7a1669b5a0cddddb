#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tensorbound/certificates.hpp"
#include "tensorbound/demos.hpp"
#include "tensorbound/operators.hpp"

namespace tensorbound {
namespace {

const std::vector<double> kOnes4{1.0, 1.0, 1.0, 1.0};

TEST(Excess, Examples) {
  EXPECT_NEAR(certificate_excess(2.0 * std::numbers::sqrt2, kOnes4), 4.0, 1e-14);
  EXPECT_EQ(certificate_excess(1.5, kOnes4), 0.0);
  EXPECT_EQ(certificate_excess(-3.0, std::vector<double>{1.0, 1.0, 1.0}), 6.0);
  EXPECT_EQ(certificate_excess(3.0, std::vector<double>{0.5, -2.0}), 9.0 - 4.25);
}

TEST(Aggregate, ExternalBetaWithoutGraph) {
  const CertificateReport r = aggregate_certificate(3.0, std::vector<double>{1.0, 1.0, 1.0});
  EXPECT_EQ(r.beta_source, BetaSource::external);
  EXPECT_EQ(r.m, 3u);
  EXPECT_EQ(r.sum_c_squared, 3.0);
  EXPECT_EQ(r.excess, 6.0);
  EXPECT_EQ(r.aggregate_all_pairs, 6.0);
  EXPECT_FALSE(r.aggregate_edges.has_value());
  EXPECT_EQ(r.domination, DominationStatus::not_applicable);
}

TEST(Aggregate, ExternalBetaWithGraphIsAsserted) {
  const InteractionGraph g = star_graph(4);
  const CertificateReport r = aggregate_certificate(4.0, kOnes4, &g);
  EXPECT_EQ(r.domination, DominationStatus::asserted);
  EXPECT_DOUBLE_EQ(*r.graph_constant, 5.0);
  EXPECT_DOUBLE_EQ(*r.aggregate_edges, 12.0 / 5.0);
}

TEST(Aggregate, InstanceGraphIsVerified) {
  const InstanceBundle b = demo_star(4);
  const double beta = bell_value(b.instance);
  EXPECT_NEAR(beta, 4.0, 1e-9);
  const CertificateReport r = aggregate_certificate(beta, BetaSource::computed, b.instance, &*b.graph);
  EXPECT_EQ(r.beta_source, BetaSource::computed);
  EXPECT_EQ(r.domination, DominationStatus::verified);
  EXPECT_NEAR(r.excess, 12.0, 1e-8);
}

TEST(Aggregate, InstanceGraphFailingDominationThrows) {
  // Zero operator on the middle of a chain: both edges carry nothing, the non-edge (0,2) carries 2.
  const auto g3 = clifford_generators(2);
  const OperatorMatrix zero = OperatorMatrix::zero(g3[0].dim());
  const TensorSumInstance inst({g3[0], zero, g3[1]}, {g3[0], zero, g3[1]});
  const InteractionGraph chain = chain_graph(3);
  EXPECT_THROW(aggregate_certificate(2.0, BetaSource::computed, inst, &chain), DominationError);
}

TEST(Aggregate, IsolatedVertexRejected) {
  const InstanceBundle b = demo_counterexample();
  EXPECT_THROW(aggregate_certificate(2.0, BetaSource::computed, b.instance, &*b.graph), PreconditionError);
}

TEST(Aggregate, RejectsBadInput) {
  EXPECT_THROW(aggregate_certificate(NAN, kOnes4), PreconditionError);
  EXPECT_THROW(aggregate_certificate(1.0, std::vector<double>{}), PreconditionError);
  const InteractionGraph g = complete_graph(3);
  EXPECT_THROW(aggregate_certificate(1.0, kOnes4, &g), PreconditionError);
}

TEST(Counting, HeisenbergPairsMatchActualCount) {
  const TensorSumInstance inst = demo_heisenberg().instance;
  const CountingBound b = counting_certificate(3.0, inst.weights(), 2.0);
  EXPECT_DOUBLE_EQ(b.raw_pairs, 3.0);
  EXPECT_EQ(b.pairs, 3u);
  EXPECT_EQ(count_pairs_at_least(inst, phi_table(inst), 2.0), 3u);
}

TEST(Counting, RoundsUp) {
  const CountingBound b = counting_certificate(3.0, std::vector<double>{1.0, 1.0}, 2.0);
  EXPECT_DOUBLE_EQ(b.raw_pairs, 3.5);
  EXPECT_EQ(b.pairs, 4u);
  EXPECT_EQ(counting_certificate(1.0, std::vector<double>{1.0, 1.0}, 1.0).pairs, 0u);
}

TEST(Counting, RoundoffDoesNotBumpInteger) {
  const CountingBound b = counting_certificate(std::sqrt(7.0), std::vector<double>{1.0}, 2.0);
  EXPECT_NEAR(b.raw_pairs, 3.0, 1e-14);
  EXPECT_EQ(b.pairs, 3u);
}

TEST(Counting, EdgeVariantDividesByGraphConstant) {
  const InteractionGraph g = star_graph(4);
  const CountingBound b = counting_certificate(4.0, kOnes4, 0.5, &g);
  EXPECT_DOUBLE_EQ(b.raw_pairs, 24.0);
  EXPECT_DOUBLE_EQ(*b.raw_edges, 12.0 / (5.0 * 0.5));
  EXPECT_EQ(*b.edges, 5u);
}

TEST(Counting, RejectsNonPositiveThreshold) {
  EXPECT_THROW(counting_certificate(3.0, kOnes4, 0.0), PreconditionError);
  EXPECT_THROW(counting_certificate(3.0, kOnes4, -1.0), PreconditionError);
  EXPECT_THROW(counting_certificate(3.0, kOnes4, INFINITY), PreconditionError);
}

TEST(PhiThreshold, ScalesThresholdByCmaxSquared) {
  const std::vector<double> c{0.5, -1.5, 1.0};
  const PhiThresholdBound b = phi_threshold_certificate(3.0, c, 2.0, 1.5);
  EXPECT_DOUBLE_EQ(b.counts.threshold, 4.5);
  EXPECT_DOUBLE_EQ(b.counts.raw_pairs, (9.0 - 3.5) / 4.5);
  EXPECT_EQ(b.counts.pairs, 2u);
}

TEST(PhiThreshold, RejectsWeightAboveCmax) {
  try {
    phi_threshold_certificate(3.0, std::vector<double>{0.5, -1.5}, 1.0, 1.0);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("|c_2|"), std::string::npos) << e.what();
  }
  EXPECT_THROW(phi_threshold_certificate(3.0, kOnes4, 0.0, 1.0), PreconditionError);
  EXPECT_THROW(phi_threshold_certificate(3.0, kOnes4, 1.0, 0.0), PreconditionError);
}

TEST(BellValue, Examples) {
  EXPECT_NEAR(bell_value(demo_chsh().instance), 2.0 * std::numbers::sqrt2, 1e-12);
  // Heisenberg: the largest eigenvalue is 1 while the norm is 3.
  EXPECT_NEAR(bell_value(demo_heisenberg().instance), 1.0, 1e-12);
  EXPECT_NEAR(bell_value(demo_two_spin().instance), 2.0, 1e-12);
}

TEST(GroundTruthCounts, Examples) {
  const TensorSumInstance inst = demo_chsh().instance;
  const PhiTable phi = phi_table(inst);
  EXPECT_EQ(count_pairs_at_least(inst, phi, 1.5), 2u);
  EXPECT_EQ(count_pairs_at_least(inst, phi, 2.5), 0u);
  EXPECT_EQ(count_pairs_at_least(inst, phi, 0.0), 6u);

  const InstanceBundle s = demo_star(5);
  const PhiTable sphi = phi_table(s.instance);
  EXPECT_EQ(count_edges_at_least(s.instance, sphi, *s.graph, 1.5), 4u);
  EXPECT_EQ(count_pairs_at_least(s.instance, sphi, 1.5), 10u);
}

}  // namespace
}  // namespace tensorbound
