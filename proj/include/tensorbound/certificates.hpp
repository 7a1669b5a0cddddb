#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tensorbound/bounds.hpp"
#include "tensorbound/graph.hpp"
#include "tensorbound/instance.hpp"

namespace tensorbound {

enum class BetaSource { external, computed };

enum class DominationStatus {
  not_applicable,  // no graph
  verified,        // checked against operator data
  asserted,        // external beta with a graph: assumed by the caller, not verified
};

/// Lower bounds on how many pairs (and edges) carry weighted interaction >= threshold.
struct CountingBound {
  double threshold = 0.0;
  double raw_pairs = 0.0;  // excess / t
  std::uint64_t pairs = 0;
  std::optional<double> raw_edges;  // excess / (C(G) t)
  std::optional<std::uint64_t> edges;
};

/// Counting bound restated for unweighted phi_ij >= t_prime, given |c_i| <= c_max.
struct PhiThresholdBound {
  double t_prime = 0.0;
  double c_max = 0.0;
  CountingBound counts;  // counts.threshold = c_max^2 t_prime
};

struct CertificateReport {
  double beta = 0.0;
  BetaSource beta_source = BetaSource::external;
  std::size_t m = 0;
  double sum_c_squared = 0.0;
  double excess = 0.0;  // max(0, beta^2 - sum c_i^2)
  double aggregate_all_pairs = 0.0;
  std::optional<double> aggregate_edges;
  std::optional<double> graph_constant;
  DominationStatus domination = DominationStatus::not_applicable;
  std::vector<CountingBound> counting;
  std::optional<PhiThresholdBound> phi_threshold;
};

/// Relative slack used before rounding count bounds up, so that a value that is an
/// integer up to roundoff is not bumped to the next integer.
inline constexpr double kCountRoundingTol = 1e-9;

double certificate_excess(double beta, std::span<const double> weights);

/// External beta. With a graph, domination is recorded as asserted.
CertificateReport aggregate_certificate(double beta, std::span<const double> weights,
                                        const InteractionGraph* g = nullptr);

/// Beta checked against an instance; with a graph the weighted domination check is
/// run and DominationError thrown when it fails.
CertificateReport aggregate_certificate(double beta, BetaSource source, const TensorSumInstance& inst,
                                        const InteractionGraph* g = nullptr);

/// Throws PreconditionError for t <= 0 (or non-finite).
CountingBound counting_certificate(double beta, std::span<const double> weights, double t,
                                   const InteractionGraph* g = nullptr);

/// Throws PreconditionError when some |c_i| > c_max or t_prime/c_max are not positive.
PhiThresholdBound phi_threshold_certificate(double beta, std::span<const double> weights, double t_prime,
                                            double c_max, const InteractionGraph* g = nullptr);

/// lambda_max of B_c.
double bell_value(const TensorSumInstance& inst, const Limits& limits = {});

/// Ground-truth pair counts for soundness checks: #{i<j : |c_i c_j| phi_ij >= t}.
std::uint64_t count_pairs_at_least(const TensorSumInstance& inst, const PhiTable& phi, double t);
std::uint64_t count_edges_at_least(const TensorSumInstance& inst, const PhiTable& phi, const InteractionGraph& g,
                                   double t);

}  // namespace tensorbound
