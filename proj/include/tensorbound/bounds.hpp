#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensorbound/errors.hpp"
#include "tensorbound/graph.hpp"
#include "tensorbound/instance.hpp"
#include "tensorbound/linalg.hpp"

namespace tensorbound {

/// Absolute slack allowed on the edge-domination comparison.
inline constexpr double kDominationTol = 1e-12;

/// Norms behind one phi_ij value.
struct PairTerms {
  double comm_x = 0.0;  // |[x_i, x_j]|
  double comm_y = 0.0;  // |[y_i, y_j]|
  double anti_x = 0.0;  // |{x_i, x_j}|
  double anti_y = 0.0;  // |{y_i, y_j}|
  double phi = 0.0;     // (comm_x comm_y + anti_x anti_y) / 2
};

/// Symmetric table of pairwise interaction magnitudes; the diagonal is never stored.
class PhiTable {
 public:
  explicit PhiTable(std::size_t m);

  std::size_t m() const noexcept { return m_; }
  const PairTerms& terms(std::size_t i, std::size_t j) const { return pairs_[index(i, j)]; }
  PairTerms& terms(std::size_t i, std::size_t j) { return pairs_[index(i, j)]; }
  double phi(std::size_t i, std::size_t j) const { return terms(i, j).phi; }

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t m_;
  std::vector<PairTerms> pairs_;  // packed upper triangle, row-major
};

PairTerms pair_terms(const OperatorMatrix& xi, const OperatorMatrix& xj, const OperatorMatrix& yi,
                     const OperatorMatrix& yj);

/// Pairs are evaluated in parallel.
PhiTable phi_table(const TensorSumInstance& inst);
/// Single-threaded reference for phi_table.
PhiTable phi_table_serial(const TensorSumInstance& inst);

/// sum_{i<j} |c_i c_j| phi_ij.
double weighted_phi_sum(const TensorSumInstance& inst, const PhiTable& phi);
/// sum over edges of |c_i c_j| phi_ij.
double weighted_edge_phi_sum(const TensorSumInstance& inst, const PhiTable& phi, const InteractionGraph& g);

/// Bound on |B_c|^2: sum c_i^2 + sum_{i<j} |c_i c_j| phi_ij.
double complete_bound(const TensorSumInstance& inst);
double complete_bound(const TensorSumInstance& inst, const PhiTable& phi);

struct DominationEntry {
  VertexPair pair;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool violated = false;
};

struct DominationReport {
  bool satisfied = true;
  bool weighted = false;
  std::vector<DominationEntry> entries;        // one per non-edge
  std::vector<std::size_t> isolated_vertices;  // 0-based

  std::vector<DominationEntry> violations() const;
};

/// Evaluates the edge-domination inequality at every non-edge. A vertex with no
/// neighbours contributes an empty average (0); such vertices are listed in the report.
DominationReport check_domination(const TensorSumInstance& inst, const InteractionGraph& g, bool weighted);
DominationReport check_domination(const TensorSumInstance& inst, const PhiTable& phi, const InteractionGraph& g,
                                  bool weighted);

/// Raised when a graph-restricted bound is requested but domination fails.
class DominationError : public PreconditionError {
 public:
  explicit DominationError(DominationReport report);
  const DominationReport& report() const noexcept { return report_; }

 private:
  DominationReport report_;
};

/// sum c_i^2 + C(G) sum_E |c_i c_j| phi_ij. Runs the weighted domination check first and
/// throws DominationError if it fails; throws PreconditionError on an isolated vertex.
double sparse_bound(const TensorSumInstance& inst, const InteractionGraph& g);
double sparse_bound(const TensorSumInstance& inst, const PhiTable& phi, const InteractionGraph& g);

/// Materializes B_c and diagonalizes it. lambda_max is the Bell value sup_rho tr(rho B_c).
SpectralSummary exact_reference(const TensorSumInstance& inst, const Limits& limits = {});
OperatorMatrix tensor_sum_operator(const TensorSumInstance& inst, const Limits& limits = {});

/// A0(x)B0 + A0(x)B1 + A1(x)B0 - A1(x)B1.
OperatorMatrix chsh_operator(const OperatorMatrix& a0, const OperatorMatrix& a1, const OperatorMatrix& b0,
                             const OperatorMatrix& b1, const Limits& limits = {});

/// |CHSH^2 - (4I - [A0,A1](x)[B0,B1])|. All four inputs must be Hermitian involutions.
double chsh_identity_residual(const OperatorMatrix& a0, const OperatorMatrix& a1, const OperatorMatrix& b0,
                              const OperatorMatrix& b1, const Limits& limits = {});

struct TwoTermSharpness {
  double norm_s = 0.0;
  bool w_is_involution = false;
  double identity_residual = 0.0;  // |S^2 - 2(I + W)|
};

/// S = x1(x)y1 + x2(x)y2 for anticommuting pairs of Hermitian involutions.
TwoTermSharpness two_term_sharpness(const OperatorMatrix& x1, const OperatorMatrix& x2, const OperatorMatrix& y1,
                                    const OperatorMatrix& y2, const Limits& limits = {});

struct BoundReport {
  std::size_t m = 0;
  std::size_t dim_h = 0;
  std::size_t dim_k = 0;
  double sum_c_squared = 0.0;
  double total_phi_sum = 0.0;  // sum_{i<j} |c_i c_j| phi_ij
  double baseline_bound = 0.0;
  double complete_bound = 0.0;
  bool graph_supplied = false;
  std::optional<double> edge_phi_sum;
  std::optional<double> graph_constant;
  std::optional<DominationReport> domination;
  std::optional<double> sparse_bound;
  std::optional<double> exact_norm_squared;
  std::optional<double> exact_lambda_max;
  std::optional<std::string> exact_skipped_reason;
  /// (field, result that produced it).
  std::vector<std::pair<std::string, std::string>> provenance;
};

/// Computes every applicable bound. The exact reference is included when the tensor
/// dimension fits under limits.dim_cap.
BoundReport bound_report(const TensorSumInstance& inst, const InteractionGraph* g, const Limits& limits = {});

}  // namespace tensorbound
