#include "tensorbound/sweep.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "tensorbound/bounds.hpp"

namespace tensorbound {

TensorSumInstance random_instance(Rng& rng, std::size_t max_m, std::size_t max_dim, EnsembleKind kind) {
  const std::size_t m = 1 + static_cast<std::size_t>(rng.below(max_m));
  const std::size_t dh = 1 + static_cast<std::size_t>(rng.below(max_dim));
  const std::size_t dk = 1 + static_cast<std::size_t>(rng.below(max_dim));
  std::vector<OperatorMatrix> x, y;
  for (std::size_t i = 0; i < m; ++i) {
    x.push_back(random_operator({rng.next_u64(), dh, kind}));
    y.push_back(random_operator({rng.next_u64(), dk, kind}));
  }
  std::vector<double> weights(m, 1.0);
  if (rng.coin()) {
    for (auto& c : weights) c = rng.uniform(-2.0, 2.0);
  }
  return TensorSumInstance(std::move(x), std::move(y), std::move(weights));
}

TrialResult run_trial(const SweepConfig& config, std::uint64_t index) {
  Rng rng(derive_seed(config.seed, index));
  EnsembleKind kind = EnsembleKind::contraction;
  switch (config.mix) {
    case EnsembleMix::contraction:
      kind = EnsembleKind::contraction;
      break;
    case EnsembleMix::unitary_involution:
      kind = EnsembleKind::unitary_involution;
      break;
    case EnsembleMix::mixed:
      kind = rng.coin() ? EnsembleKind::unitary_involution : EnsembleKind::contraction;
      break;
  }
  const TensorSumInstance inst = random_instance(rng, config.max_m, config.max_dim, kind);
  const PhiTable phi = phi_table_serial(inst);  // trials are the unit of parallelism

  TrialResult r;
  r.index = index;
  r.m = inst.m();
  r.dim_h = inst.dim_h();
  r.dim_k = inst.dim_k();
  r.kind = kind;
  const double norm = exact_reference(inst, config.limits).spectral_norm;
  r.exact_norm_squared = norm * norm;
  r.complete_bound = complete_bound(inst, phi);
  r.complete_violated = r.exact_norm_squared > r.complete_bound + config.tol;

  if (inst.m() >= 2) {
    const InteractionGraph g = config.graph_mode == SweepGraphMode::complete
                                   ? complete_graph(inst.m())
                                   : random_graph_min_degree_one(inst.m(), rng.uniform(0.2, 0.8), rng);
    r.graph_checked = true;
    r.domination_holds = check_domination(inst, phi, g, true).satisfied;
    if (r.domination_holds) {
      r.sparse_bound = sparse_bound(inst, phi, g);
      r.sparse_violated = r.exact_norm_squared > *r.sparse_bound + config.tol;
    }
  }
  return r;
}

namespace {

SweepSummary summarize(const SweepConfig& config, std::vector<TrialResult> trials) {
  std::sort(trials.begin(), trials.end(), [](const TrialResult& a, const TrialResult& b) { return a.index < b.index; });
  SweepSummary s;
  s.config = config;
  s.min_gap = std::numeric_limits<double>::infinity();
  double gap_sum = 0.0;
  for (const auto& t : trials) {
    if (t.complete_violated) ++s.complete_violations;
    if (t.sparse_bound) {
      ++s.sparse_checked;
      if (t.sparse_violated) ++s.sparse_violations;
      if (*t.sparse_bound > 0.0) s.max_sparse_ratio = std::max(s.max_sparse_ratio, t.exact_norm_squared / *t.sparse_bound);
    }
    if (t.complete_bound > 0.0) s.max_ratio = std::max(s.max_ratio, t.exact_norm_squared / t.complete_bound);
    const double gap = t.complete_bound - t.exact_norm_squared;
    s.min_gap = std::min(s.min_gap, gap);
    gap_sum += gap;
  }
  if (trials.empty()) s.min_gap = 0.0;
  s.mean_gap = trials.empty() ? 0.0 : gap_sum / static_cast<double>(trials.size());
  s.trials = std::move(trials);
  return s;
}

}  // namespace

SweepSummary run_sweep_serial(const SweepConfig& config) {
  std::vector<TrialResult> trials;
  trials.reserve(config.trials);
  for (std::uint64_t i = 0; i < config.trials; ++i) trials.push_back(run_trial(config, i));
  return summarize(config, std::move(trials));
}

SweepSummary run_sweep(const SweepConfig& config) {
  std::vector<TrialResult> trials(config.trials);
  const auto count = static_cast<std::int64_t>(config.trials);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    trials[static_cast<std::size_t>(i)] = run_trial(config, static_cast<std::uint64_t>(i));
  }
  return summarize(config, std::move(trials));
}

}  // namespace tensorbound
