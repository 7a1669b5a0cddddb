#include "tensorbound/report_io.hpp"

#include <cmath>
#include <iomanip>
#include <string>

#include "tensorbound/rng.hpp"

namespace tensorbound {

using nlohmann::json;

namespace {

json pair_json(const VertexPair& p) { return json::array({p.first, p.second}); }

std::string pair_text(const VertexPair& p) {
  return "(" + std::to_string(p.first + 1) + ", " + std::to_string(p.second + 1) + ")";
}

const char* source_name(BetaSource s) { return s == BetaSource::external ? "external" : "computed"; }

const char* domination_name(DominationStatus s) {
  switch (s) {
    case DominationStatus::not_applicable:
      return "not_applicable";
    case DominationStatus::verified:
      return "verified";
    case DominationStatus::asserted:
      return "asserted_not_verified";
  }
  return "unknown";
}

const char* mix_name(EnsembleMix mix) {
  switch (mix) {
    case EnsembleMix::contraction:
      return "contraction";
    case EnsembleMix::unitary_involution:
      return "unitary_involution";
    case EnsembleMix::mixed:
      return "mixed";
  }
  return "unknown";
}

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

json counting_json(const CountingBound& b) {
  json j{{"threshold", b.threshold}, {"raw_pairs", b.raw_pairs}, {"pairs_lower_bound", b.pairs}};
  put_optional(j, "raw_edges", b.raw_edges);
  put_optional(j, "edges_lower_bound", b.edges);
  return j;
}

class PrecisionGuard {
 public:
  explicit PrecisionGuard(std::ostream& out) : out_(out), old_(out.precision(12)) {}
  ~PrecisionGuard() { out_.precision(old_); }

 private:
  std::ostream& out_;
  std::streamsize old_;
};

}  // namespace

json to_json(const SpectralSummary& s) {
  return {{"eigenvalues", s.eigenvalues},
          {"spectral_norm", s.spectral_norm},
          {"lambda_max", s.lambda_max},
          {"lambda_min", s.lambda_min}};
}

json to_json(const DominationReport& r) {
  json entries = json::array();
  json violations = json::array();
  for (const auto& e : r.entries) {
    json item{{"pair", pair_json(e.pair)}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"slack", e.slack}, {"violated", e.violated}};
    if (e.violated) violations.push_back(item);
    entries.push_back(std::move(item));
  }
  return {{"satisfied", r.satisfied},
          {"weighted", r.weighted},
          {"non_edges", entries},
          {"violations", violations},
          {"isolated_vertices", r.isolated_vertices}};
}

json to_json(const BoundReport& r) {
  json j{{"m", r.m},
         {"dim_h", r.dim_h},
         {"dim_k", r.dim_k},
         {"sum_c_squared", r.sum_c_squared},
         {"total_phi_sum", r.total_phi_sum},
         {"baseline_bound", r.baseline_bound},
         {"complete_bound", r.complete_bound},
         {"graph_supplied", r.graph_supplied}};
  put_optional(j, "edge_phi_sum", r.edge_phi_sum);
  put_optional(j, "graph_constant", r.graph_constant);
  put_optional(j, "sparse_bound", r.sparse_bound);
  put_optional(j, "exact_norm_squared", r.exact_norm_squared);
  put_optional(j, "exact_lambda_max", r.exact_lambda_max);
  put_optional(j, "exact_skipped_reason", r.exact_skipped_reason);
  if (r.domination) j["domination"] = to_json(*r.domination);
  json prov = json::object();
  for (const auto& [field, source] : r.provenance) prov[field] = source;
  j["provenance"] = prov;
  return j;
}

json to_json(const CertificateReport& r) {
  json j{{"beta", r.beta},
         {"beta_source", source_name(r.beta_source)},
         {"m", r.m},
         {"sum_c_squared", r.sum_c_squared},
         {"excess", r.excess},
         {"aggregate_all_pairs_lower_bound", r.aggregate_all_pairs},
         {"domination", domination_name(r.domination)}};
  put_optional(j, "aggregate_edges_lower_bound", r.aggregate_edges);
  put_optional(j, "graph_constant", r.graph_constant);
  json counting = json::array();
  for (const auto& b : r.counting) counting.push_back(counting_json(b));
  j["counting"] = counting;
  if (r.phi_threshold) {
    j["phi_threshold"] = {{"t_prime", r.phi_threshold->t_prime},
                          {"c_max", r.phi_threshold->c_max},
                          {"counts", counting_json(r.phi_threshold->counts)}};
  }
  return j;
}

json to_json(const SweepSummary& s) {
  const SweepConfig& c = s.config;
  return {{"config",
           {{"trials", c.trials},
            {"seed", c.seed},
            {"max_m", c.max_m},
            {"max_dim", c.max_dim},
            {"ensemble", mix_name(c.mix)},
            {"graph_mode", c.graph_mode == SweepGraphMode::complete ? "complete" : "random_min_degree_1"},
            {"tol", c.tol},
            {"rng", Rng::kAlgorithm}}},
          {"complete_violations", s.complete_violations},
          {"sparse_checked", s.sparse_checked},
          {"sparse_violations", s.sparse_violations},
          {"max_ratio", s.max_ratio},
          {"max_sparse_ratio", s.max_sparse_ratio},
          {"min_gap", s.min_gap},
          {"mean_gap", s.mean_gap}};
}

void write_text(std::ostream& out, const SpectralSummary& s) {
  PrecisionGuard guard(out);
  out << "spectral norm   " << s.spectral_norm << '\n';
  out << "lambda max      " << s.lambda_max << '\n';
  out << "lambda min      " << s.lambda_min << '\n';
  out << "eigenvalues    ";
  for (double v : s.eigenvalues) out << ' ' << v;
  out << '\n';
}

void write_text(std::ostream& out, const DominationReport& r) {
  PrecisionGuard guard(out);
  out << (r.weighted ? "weighted " : "") << "edge domination: " << (r.satisfied ? "satisfied" : "VIOLATED") << '\n';
  for (std::size_t v : r.isolated_vertices) out << "  isolated vertex " << v + 1 << '\n';
  for (const auto& e : r.entries) {
    out << "  non-edge " << pair_text(e.pair) << "  lhs " << e.lhs << "  rhs " << e.rhs << "  slack " << e.slack
        << (e.violated ? "  <- violation" : "") << '\n';
  }
}

void write_text(std::ostream& out, const BoundReport& r) {
  PrecisionGuard guard(out);
  out << "terms m             " << r.m << "  (dim " << r.dim_h << " x " << r.dim_k << ")\n";
  out << "sum c_i^2           " << r.sum_c_squared << '\n';
  out << "sum |c_i c_j| phi   " << r.total_phi_sum << '\n';
  out << "baseline bound      " << r.baseline_bound << '\n';
  out << "complete bound      " << r.complete_bound << "   (|B_c| <= " << std::sqrt(r.complete_bound) << ")\n";
  if (r.graph_supplied) {
    out << "edge phi sum        " << r.edge_phi_sum.value_or(0.0) << '\n';
    if (r.graph_constant) {
      out << "graph constant C(G) " << *r.graph_constant << '\n';
    } else {
      out << "graph constant C(G) undefined (isolated vertex)\n";
    }
    if (r.sparse_bound) {
      out << "sparse bound        " << *r.sparse_bound << "   (|B_c| <= " << std::sqrt(*r.sparse_bound) << ")\n";
    } else {
      out << "sparse bound        not available\n";
    }
  }
  if (r.exact_norm_squared) {
    out << "exact |B_c|^2       " << *r.exact_norm_squared << '\n';
    out << "exact lambda_max    " << *r.exact_lambda_max << '\n';
  } else if (r.exact_skipped_reason) {
    out << "exact reference     skipped: " << *r.exact_skipped_reason << '\n';
  }
  if (r.domination) write_text(out, *r.domination);
}

void write_text(std::ostream& out, const CertificateReport& r) {
  PrecisionGuard guard(out);
  out << "beta                  " << r.beta << "  (" << source_name(r.beta_source) << ")\n";
  out << "sum c_i^2             " << r.sum_c_squared << '\n';
  out << "excess                " << r.excess << '\n';
  out << "sum over pairs   >=   " << r.aggregate_all_pairs << '\n';
  if (r.aggregate_edges) {
    out << "sum over edges   >=   " << *r.aggregate_edges << "  (C(G) = " << *r.graph_constant
        << ", domination " << domination_name(r.domination) << ")\n";
  }
  for (const auto& b : r.counting) {
    out << "t = " << b.threshold << ":  N_t >= " << b.pairs << " (raw " << b.raw_pairs << ")";
    if (b.edges) out << ",  N_t^E >= " << *b.edges << " (raw " << *b.raw_edges << ")";
    out << '\n';
  }
  if (r.phi_threshold) {
    const auto& p = *r.phi_threshold;
    out << "phi >= " << p.t_prime << " with |c_i| <= " << p.c_max << ":  pairs >= " << p.counts.pairs;
    if (p.counts.edges) out << ",  edges >= " << *p.counts.edges;
    out << '\n';
  }
}

void write_text(std::ostream& out, const SweepSummary& s) {
  PrecisionGuard guard(out);
  out << "trials              " << s.trials.size() << "  (seed " << s.config.seed << ", " << mix_name(s.config.mix)
      << ", max_m " << s.config.max_m << ", max_dim " << s.config.max_dim << ")\n";
  out << "rng                 " << Rng::kAlgorithm << '\n';
  out << "complete violations " << s.complete_violations << '\n';
  out << "sparse checked      " << s.sparse_checked << '\n';
  out << "sparse violations   " << s.sparse_violations << '\n';
  out << "max exact^2/bound   " << s.max_ratio << '\n';
  out << "max exact^2/sparse  " << s.max_sparse_ratio << '\n';
  out << "min gap             " << s.min_gap << '\n';
  out << "mean gap            " << s.mean_gap << '\n';
}

void write_csv(std::ostream& out, const BoundReport& r) {
  const auto old = out.precision(17);
  out << "quantity,value,source\n";
  auto row = [&](const char* name, double v, const std::string& source) {
    out << name << ',' << v << ',' << source << '\n';
  };
  auto source_of = [&](const std::string& field) {
    for (const auto& [f, s] : r.provenance)
      if (f == field) return s;
    return std::string("input");
  };
  row("m", static_cast<double>(r.m), "input");
  row("sum_c_squared", r.sum_c_squared, "input");
  row("total_phi_sum", r.total_phi_sum, "phi table");
  row("baseline_bound", r.baseline_bound, source_of("baseline_bound"));
  row("complete_bound", r.complete_bound, source_of("complete_bound"));
  if (r.edge_phi_sum) row("edge_phi_sum", *r.edge_phi_sum, "phi table");
  if (r.graph_constant) row("graph_constant", *r.graph_constant, source_of("graph_constant"));
  if (r.sparse_bound) row("sparse_bound", *r.sparse_bound, source_of("sparse_bound"));
  if (r.exact_norm_squared) row("exact_norm_squared", *r.exact_norm_squared, source_of("exact_norm_squared"));
  out.precision(old);
}

}  // namespace tensorbound
