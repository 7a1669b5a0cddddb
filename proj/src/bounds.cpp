#include "tensorbound/bounds.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

#include "tensorbound/kernels.hpp"
#include "tensorbound/operators.hpp"

namespace tensorbound {

PhiTable::PhiTable(std::size_t m) : m_(m), pairs_(m * (m - 1) / 2) {}

std::size_t PhiTable::index(std::size_t i, std::size_t j) const {
  if (i == j || i >= m_ || j >= m_) throw PreconditionError("phi table: invalid pair");
  if (i > j) std::swap(i, j);
  // Offset of row i in the packed strict upper triangle.
  return i * (2 * m_ - i - 1) / 2 + (j - i - 1);
}

PairTerms pair_terms(const OperatorMatrix& xi, const OperatorMatrix& xj, const OperatorMatrix& yi,
                     const OperatorMatrix& yj) {
  PairTerms t;
  t.comm_x = spectral_norm(commutator(xi, xj));
  t.comm_y = spectral_norm(commutator(yi, yj));
  t.anti_x = spectral_norm(anticommutator(xi, xj));
  t.anti_y = spectral_norm(anticommutator(yi, yj));
  t.phi = 0.5 * (t.comm_x * t.comm_y + t.anti_x * t.anti_y);
  return t;
}

namespace {

std::vector<VertexPair> all_pairs(std::size_t m) {
  std::vector<VertexPair> pairs;
  pairs.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  return pairs;
}

void require_matching_graph(const TensorSumInstance& inst, const InteractionGraph& g) {
  if (g.vertex_count() != inst.m()) {
    throw ValidationError("graph has " + std::to_string(g.vertex_count()) + " vertices but the instance has " +
                          std::to_string(inst.m()) + " terms");
  }
}

double weight_product(const TensorSumInstance& inst, std::size_t i, std::size_t j) {
  return std::abs(inst.weights()[i] * inst.weights()[j]);
}

}  // namespace

PhiTable phi_table_serial(const TensorSumInstance& inst) {
  PhiTable table(inst.m());
  for (const auto& [i, j] : all_pairs(inst.m())) {
    table.terms(i, j) = pair_terms(inst.x()[i], inst.x()[j], inst.y()[i], inst.y()[j]);
  }
  return table;
}

PhiTable phi_table(const TensorSumInstance& inst) {
  PhiTable table(inst.m());
  const auto pairs = all_pairs(inst.m());
  const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic) if (count > 1)
  for (std::int64_t p = 0; p < count; ++p) {
    const auto [i, j] = pairs[static_cast<std::size_t>(p)];
    table.terms(i, j) = pair_terms(inst.x()[i], inst.x()[j], inst.y()[i], inst.y()[j]);
  }
  return table;
}

double weighted_phi_sum(const TensorSumInstance& inst, const PhiTable& phi) {
  double sum = 0.0;
  for (std::size_t i = 0; i < inst.m(); ++i)
    for (std::size_t j = i + 1; j < inst.m(); ++j) sum += weight_product(inst, i, j) * phi.phi(i, j);
  return sum;
}

double weighted_edge_phi_sum(const TensorSumInstance& inst, const PhiTable& phi, const InteractionGraph& g) {
  require_matching_graph(inst, g);
  double sum = 0.0;
  for (const auto& [i, j] : g.edges()) sum += weight_product(inst, i, j) * phi.phi(i, j);
  return sum;
}

double complete_bound(const TensorSumInstance& inst, const PhiTable& phi) {
  return sum_of_squares(inst.weights()) + weighted_phi_sum(inst, phi);
}

double complete_bound(const TensorSumInstance& inst) { return complete_bound(inst, phi_table(inst)); }

std::vector<DominationEntry> DominationReport::violations() const {
  std::vector<DominationEntry> out;
  for (const auto& e : entries)
    if (e.violated) out.push_back(e);
  return out;
}

DominationReport check_domination(const TensorSumInstance& inst, const PhiTable& phi, const InteractionGraph& g,
                                  bool weighted) {
  require_matching_graph(inst, g);
  auto term = [&](std::size_t i, std::size_t j) {
    return weighted ? weight_product(inst, i, j) * phi.phi(i, j) : phi.phi(i, j);
  };
  // Neighbourhood average per vertex; an isolated vertex has an empty average of 0.
  std::vector<double> average(inst.m(), 0.0);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    if (g.degree(i) == 0) continue;
    double sum = 0.0;
    for (std::size_t k : g.neighbors(i)) sum += term(i, k);
    average[i] = sum / static_cast<double>(g.degree(i));
  }

  DominationReport report;
  report.weighted = weighted;
  report.isolated_vertices = g.isolated_vertices();
  for (const auto& pair : g.non_edges()) {
    DominationEntry e;
    e.pair = pair;
    e.lhs = term(pair.first, pair.second);
    e.rhs = average[pair.first] + average[pair.second];
    e.slack = e.rhs - e.lhs;
    e.violated = e.lhs > e.rhs + kDominationTol;
    report.satisfied = report.satisfied && !e.violated;
    report.entries.push_back(e);
  }
  return report;
}

DominationReport check_domination(const TensorSumInstance& inst, const InteractionGraph& g, bool weighted) {
  return check_domination(inst, phi_table(inst), g, weighted);
}

namespace {

std::string describe_violation(const DominationReport& report) {
  std::ostringstream msg;
  msg << "edge domination fails at";
  for (const auto& v : report.violations()) {
    msg << " (" << v.pair.first + 1 << ", " << v.pair.second + 1 << "): lhs " << v.lhs << " > rhs " << v.rhs << ";";
  }
  msg << " the graph-restricted bound does not apply";
  return msg.str();
}

}  // namespace

DominationError::DominationError(DominationReport report)
    : PreconditionError(describe_violation(report)), report_(std::move(report)) {}

double sparse_bound(const TensorSumInstance& inst, const PhiTable& phi, const InteractionGraph& g) {
  DominationReport report = check_domination(inst, phi, g, true);
  if (!report.satisfied) throw DominationError(std::move(report));
  const double constant = graph_constant(g);
  return sum_of_squares(inst.weights()) + constant * weighted_edge_phi_sum(inst, phi, g);
}

double sparse_bound(const TensorSumInstance& inst, const InteractionGraph& g) {
  return sparse_bound(inst, phi_table(inst), g);
}

OperatorMatrix tensor_sum_operator(const TensorSumInstance& inst, const Limits& limits) {
  const std::size_t dh = inst.dim_h();
  const std::size_t dk = inst.dim_k();
  if (dh > limits.dim_cap / dk) {
    throw DimensionCapError("tensor dimension " + std::to_string(dh) + "*" + std::to_string(dk) +
                            " exceeds the dimension cap " + std::to_string(limits.dim_cap));
  }
  OperatorMatrix b(dh * dk);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    kernels::kron_accumulate(inst.weights()[i], inst.x()[i].data(), dh, inst.y()[i].data(), dk, b.data());
  }
  return b;
}

SpectralSummary exact_reference(const TensorSumInstance& inst, const Limits& limits) {
  return hermitian_eig(tensor_sum_operator(inst, limits));
}

namespace {

void require_involution(const OperatorMatrix& a, const char* name) {
  const ContractionCertificate cert = validate(a);
  if (!cert.is_unitary_involution) {
    std::ostringstream msg;
    msg << name << " is not a self-adjoint unitary (|a - a*|_F = " << cert.hermiticity_defect
        << ", |a^2 - I| = " << cert.involution_defect << ")";
    throw ValidationError(msg.str());
  }
}

}  // namespace

OperatorMatrix chsh_operator(const OperatorMatrix& a0, const OperatorMatrix& a1, const OperatorMatrix& b0,
                             const OperatorMatrix& b1, const Limits& limits) {
  return kron(a0, b0, limits) + kron(a0, b1, limits) + kron(a1, b0, limits) - kron(a1, b1, limits);
}

double chsh_identity_residual(const OperatorMatrix& a0, const OperatorMatrix& a1, const OperatorMatrix& b0,
                              const OperatorMatrix& b1, const Limits& limits) {
  require_involution(a0, "A0");
  require_involution(a1, "A1");
  require_involution(b0, "B0");
  require_involution(b1, "B1");
  if (a0.dim() != a1.dim() || b0.dim() != b1.dim()) throw DimensionError("CHSH: observables on one side differ in dimension");
  const OperatorMatrix bell = chsh_operator(a0, a1, b0, b1, limits);
  OperatorMatrix rhs = 4.0 * OperatorMatrix::identity(bell.dim());
  rhs -= kron(commutator(a0, a1), commutator(b0, b1), limits);
  return spectral_norm(bell * bell - rhs);
}

TwoTermSharpness two_term_sharpness(const OperatorMatrix& x1, const OperatorMatrix& x2, const OperatorMatrix& y1,
                                    const OperatorMatrix& y2, const Limits& limits) {
  require_involution(x1, "x1");
  require_involution(x2, "x2");
  require_involution(y1, "y1");
  require_involution(y2, "y2");
  const double anti_x = spectral_norm(anticommutator(x1, x2));
  const double anti_y = spectral_norm(anticommutator(y1, y2));
  if (anti_x > kInvolutionTol || anti_y > kInvolutionTol) {
    std::ostringstream msg;
    msg << "two-term sharpness requires anticommuting pairs: |{x1,x2}| = " << anti_x << ", |{y1,y2}| = " << anti_y;
    throw PreconditionError(msg.str());
  }
  const OperatorMatrix s = kron(x1, y1, limits) + kron(x2, y2, limits);
  const OperatorMatrix w = kron(x1 * x2, y1 * y2, limits);
  const OperatorMatrix id = OperatorMatrix::identity(s.dim());

  TwoTermSharpness out;
  out.norm_s = spectral_norm(s);
  out.w_is_involution = validate(w).is_unitary_involution;
  out.identity_residual = spectral_norm(s * s - 2.0 * (id + w));
  return out;
}

BoundReport bound_report(const TensorSumInstance& inst, const InteractionGraph* g, const Limits& limits) {
  const PhiTable phi = phi_table(inst);
  BoundReport r;
  r.m = inst.m();
  r.dim_h = inst.dim_h();
  r.dim_k = inst.dim_k();
  r.sum_c_squared = sum_of_squares(inst.weights());
  r.total_phi_sum = weighted_phi_sum(inst, phi);
  r.baseline_bound = r.sum_c_squared + r.total_phi_sum;
  r.complete_bound = complete_bound(inst, phi);
  r.provenance.emplace_back("baseline_bound", "all-pairs phi sum (before edge/non-edge split)");
  r.provenance.emplace_back("complete_bound", "weighted complete-graph inequality");

  if (g != nullptr) {
    require_matching_graph(inst, *g);
    r.graph_supplied = true;
    r.edge_phi_sum = weighted_edge_phi_sum(inst, phi, *g);
    r.domination = check_domination(inst, phi, *g, true);
    r.provenance.emplace_back("domination", "weighted edge-domination check");
    if (g->min_degree() >= 1) {
      r.graph_constant = graph_constant(*g);
      r.provenance.emplace_back("graph_constant", "2(m-1)/delta - 1");
      if (r.domination->satisfied) {
        r.sparse_bound = r.sum_c_squared + *r.graph_constant * *r.edge_phi_sum;
        r.provenance.emplace_back("sparse_bound", "weighted sparse-graph inequality (domination verified)");
      }
    }
  }

  try {
    const SpectralSummary exact = exact_reference(inst, limits);
    r.exact_norm_squared = exact.spectral_norm * exact.spectral_norm;
    r.exact_lambda_max = exact.lambda_max;
    r.provenance.emplace_back("exact_norm_squared", "dense diagonalization of B_c");
  } catch (const DimensionCapError& e) {
    r.exact_skipped_reason = e.what();
  }
  return r;
}

}  // namespace tensorbound
