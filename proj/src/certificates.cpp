#include "tensorbound/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tensorbound/errors.hpp"

namespace tensorbound {

namespace {

std::uint64_t round_up_count(double raw) {
  if (raw <= 0.0) return 0;
  const double snapped = raw - kCountRoundingTol * std::max(1.0, raw);
  return static_cast<std::uint64_t>(std::max(0.0, std::ceil(snapped)));
}

void require_beta(double beta) {
  if (!std::isfinite(beta)) throw PreconditionError("Bell value must be finite");
}

void require_weights(std::span<const double> weights) {
  if (weights.empty()) throw PreconditionError("at least one weight is required");
  for (double c : weights)
    if (!std::isfinite(c)) throw PreconditionError("weights must be finite");
}

void require_graph_size(std::span<const double> weights, const InteractionGraph& g) {
  if (g.vertex_count() != weights.size()) {
    throw PreconditionError("graph has " + std::to_string(g.vertex_count()) + " vertices but there are " +
                            std::to_string(weights.size()) + " weights");
  }
}

}  // namespace

double certificate_excess(double beta, std::span<const double> weights) {
  return std::max(0.0, beta * beta - sum_of_squares(weights));
}

CertificateReport aggregate_certificate(double beta, std::span<const double> weights, const InteractionGraph* g) {
  require_beta(beta);
  require_weights(weights);
  CertificateReport r;
  r.beta = beta;
  r.beta_source = BetaSource::external;
  r.m = weights.size();
  r.sum_c_squared = sum_of_squares(weights);
  r.excess = certificate_excess(beta, weights);
  r.aggregate_all_pairs = r.excess;
  if (g != nullptr) {
    require_graph_size(weights, *g);
    r.graph_constant = graph_constant(*g);
    r.aggregate_edges = r.excess / *r.graph_constant;
    r.domination = DominationStatus::asserted;
  }
  return r;
}

CertificateReport aggregate_certificate(double beta, BetaSource source, const TensorSumInstance& inst,
                                        const InteractionGraph* g) {
  if (g != nullptr) {
    graph_constant(*g);  // isolated vertices are rejected before the domination check
    DominationReport dom = check_domination(inst, *g, true);
    if (!dom.satisfied) throw DominationError(std::move(dom));
  }
  CertificateReport r = aggregate_certificate(beta, inst.weights(), g);
  r.beta_source = source;
  if (g != nullptr) r.domination = DominationStatus::verified;
  return r;
}

CountingBound counting_certificate(double beta, std::span<const double> weights, double t, const InteractionGraph* g) {
  require_beta(beta);
  require_weights(weights);
  if (!(t > 0.0) || !std::isfinite(t)) throw PreconditionError("threshold t must be positive and finite");
  const double excess = certificate_excess(beta, weights);
  CountingBound b;
  b.threshold = t;
  b.raw_pairs = excess / t;
  b.pairs = round_up_count(b.raw_pairs);
  if (g != nullptr) {
    require_graph_size(weights, *g);
    b.raw_edges = excess / (graph_constant(*g) * t);
    b.edges = round_up_count(*b.raw_edges);
  }
  return b;
}

PhiThresholdBound phi_threshold_certificate(double beta, std::span<const double> weights, double t_prime,
                                            double c_max, const InteractionGraph* g) {
  if (!(t_prime > 0.0) || !std::isfinite(t_prime)) throw PreconditionError("threshold t' must be positive and finite");
  if (!(c_max > 0.0) || !std::isfinite(c_max)) throw PreconditionError("c_max must be positive and finite");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (std::abs(weights[i]) > c_max) {
      std::ostringstream msg;
      msg << "|c_" << i + 1 << "| = " << std::abs(weights[i]) << " exceeds c_max = " << c_max;
      throw PreconditionError(msg.str());
    }
  }
  PhiThresholdBound out;
  out.t_prime = t_prime;
  out.c_max = c_max;
  out.counts = counting_certificate(beta, weights, c_max * c_max * t_prime, g);
  return out;
}

double bell_value(const TensorSumInstance& inst, const Limits& limits) {
  return exact_reference(inst, limits).lambda_max;
}

std::uint64_t count_pairs_at_least(const TensorSumInstance& inst, const PhiTable& phi, double t) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < inst.m(); ++i)
    for (std::size_t j = i + 1; j < inst.m(); ++j)
      if (std::abs(inst.weights()[i] * inst.weights()[j]) * phi.phi(i, j) >= t) ++n;
  return n;
}

std::uint64_t count_edges_at_least(const TensorSumInstance& inst, const PhiTable& phi, const InteractionGraph& g,
                                   double t) {
  std::uint64_t n = 0;
  for (const auto& [i, j] : g.edges())
    if (std::abs(inst.weights()[i] * inst.weights()[j]) * phi.phi(i, j) >= t) ++n;
  return n;
}

}  // namespace tensorbound
