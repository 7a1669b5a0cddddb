#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tensorbound/graph.hpp"
#include "tensorbound/instance.hpp"
#include "tensorbound/matrix.hpp"
#include "tensorbound/operators.hpp"
#include "tensorbound/rng.hpp"

namespace tensorbound {

enum class EnsembleMix { contraction, unitary_involution, mixed };
enum class SweepGraphMode { complete, random_min_degree_1 };

struct SweepConfig {
  std::uint64_t trials = 500;
  std::uint64_t seed = 42;
  std::size_t max_m = 5;
  std::size_t max_dim = 4;
  EnsembleMix mix = EnsembleMix::mixed;
  SweepGraphMode graph_mode = SweepGraphMode::random_min_degree_1;
  double tol = 1e-8;
  Limits limits;
};

struct TrialResult {
  std::uint64_t index = 0;
  std::size_t m = 0;
  std::size_t dim_h = 0;
  std::size_t dim_k = 0;
  EnsembleKind kind = EnsembleKind::contraction;
  double exact_norm_squared = 0.0;
  double complete_bound = 0.0;
  bool complete_violated = false;
  bool graph_checked = false;  // a graph with min degree >= 1 was drawn
  bool domination_holds = false;
  std::optional<double> sparse_bound;
  bool sparse_violated = false;
};

struct SweepSummary {
  SweepConfig config;
  std::vector<TrialResult> trials;  // sorted by index
  std::uint64_t complete_violations = 0;
  std::uint64_t sparse_checked = 0;
  std::uint64_t sparse_violations = 0;
  double max_ratio = 0.0;  // max exact^2 / complete_bound
  double max_sparse_ratio = 0.0;
  double min_gap = 0.0;  // min complete_bound - exact^2
  double mean_gap = 0.0;

  std::uint64_t violations() const noexcept { return complete_violations + sparse_violations; }
};

/// One random instance: m in [1, max_m], dims in [1, max_dim], operators of one kind, weights
/// either all ones or uniform on [-2, 2].
TensorSumInstance random_instance(Rng& rng, std::size_t max_m, std::size_t max_dim, EnsembleKind kind);

TrialResult run_trial(const SweepConfig& config, std::uint64_t index);

/// Trials run in parallel; each derives its randomness from (seed, index) only.
SweepSummary run_sweep(const SweepConfig& config);
SweepSummary run_sweep_serial(const SweepConfig& config);

}  // namespace tensorbound
