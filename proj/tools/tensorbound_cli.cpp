// tensorbound: command-line front end for the tensor-sum bound engine.
//
// Exit codes: 0 success, 1 validation/precondition failure, 2 usage error,
// 3 I/O error, 4 an exact norm exceeded a bound.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tensorbound/bounds.hpp"
#include "tensorbound/certificates.hpp"
#include "tensorbound/demos.hpp"
#include "tensorbound/errors.hpp"
#include "tensorbound/instance_io.hpp"
#include "tensorbound/report_io.hpp"
#include "tensorbound/sweep.hpp"

namespace {

using namespace tensorbound;

enum ExitCode : int { kOk = 0, kValidation = 1, kUsage = 2, kIo = 3, kViolation = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string output = "text";
  double tol = 1e-8;
  std::size_t dim_cap = 4096;
  std::uint64_t seed = 42;

  Limits limits() const { return Limits{dim_cap}; }
  bool json() const { return output == "json"; }
  bool csv() const { return output == "csv"; }
};

// `--graph` values: none, file (the instance file's graph), complete, star, chain.
std::optional<InteractionGraph> resolve_graph(const std::string& spec, const std::optional<InteractionGraph>& from_file,
                                              std::size_t m) {
  if (spec.empty() || spec == "none") return std::nullopt;
  if (spec == "file") {
    if (!from_file) throw UsageError("--graph file: the instance file has no graph");
    return from_file;
  }
  if (spec == "complete") return complete_graph(m);
  if (spec == "star") return star_graph(m);
  if (spec == "chain") return chain_graph(m);
  throw UsageError("unknown --graph value '" + spec + "' (none, file, complete, star, chain)");
}

void require_text_or_json(const GlobalOptions& g) {
  if (g.csv()) throw UsageError("--output csv is only available for the bound subcommand");
}

int run_bound(const GlobalOptions& opts, const std::string& path, const std::string& graph_spec) {
  const InstanceBundle bundle = read_instance_file(path);
  const auto graph = resolve_graph(graph_spec, bundle.graph, bundle.instance.m());
  const BoundReport report = bound_report(bundle.instance, graph ? &*graph : nullptr, opts.limits());

  if (opts.json()) {
    std::cout << to_json(report).dump(2) << '\n';
  } else if (opts.csv()) {
    write_csv(std::cout, report);
  } else {
    write_text(std::cout, report);
  }
  if (report.exact_norm_squared && *report.exact_norm_squared > report.complete_bound + opts.tol) {
    std::cerr << "error: exact |B_c|^2 exceeds the complete bound beyond tolerance\n";
    return kViolation;
  }
  if (report.domination && !report.domination->satisfied) {
    std::cerr << "error: edge domination fails; the sparse bound does not apply\n";
    return kValidation;
  }
  if (graph && !report.graph_constant) {
    std::cerr << "error: the graph has an isolated vertex; the sparse bound needs minimum degree >= 1\n";
    return kValidation;
  }
  return kOk;
}

int run_exact(const GlobalOptions& opts, const std::string& path) {
  require_text_or_json(opts);
  const InstanceBundle bundle = read_instance_file(path);
  const SpectralSummary s = exact_reference(bundle.instance, opts.limits());
  if (opts.json()) {
    std::cout << to_json(s).dump(2) << '\n';
  } else {
    write_text(std::cout, s);
  }
  return kOk;
}

int run_check_domination(const GlobalOptions& opts, const std::string& path, const std::string& graph_spec,
                         bool unweighted) {
  require_text_or_json(opts);
  const InstanceBundle bundle = read_instance_file(path);
  const auto graph = resolve_graph(graph_spec.empty() ? "file" : graph_spec, bundle.graph, bundle.instance.m());
  if (!graph) throw UsageError("check-domination needs a graph");
  const DominationReport report = check_domination(bundle.instance, *graph, !unweighted);
  if (opts.json()) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    write_text(std::cout, report);
  }
  return report.satisfied ? kOk : kValidation;
}

struct CertifyArgs {
  std::string instance_path;
  std::optional<double> beta;
  std::vector<double> weights;
  std::vector<double> thresholds;
  std::string graph_spec;
  std::optional<double> phi_threshold;
  std::optional<double> c_max;
};

int run_certify(const GlobalOptions& opts, const CertifyArgs& args) {
  require_text_or_json(opts);
  std::optional<InstanceBundle> bundle;
  if (!args.instance_path.empty()) bundle = read_instance_file(args.instance_path);
  if (bundle && !args.weights.empty()) throw UsageError("give either an instance file or --weights, not both");
  if (!bundle && args.weights.empty()) throw UsageError("certify needs an instance file or --weights");
  if (!bundle && !args.beta) throw UsageError("--beta is required without an instance file");
  if (args.phi_threshold.has_value() != args.c_max.has_value()) {
    throw UsageError("--phi-threshold and --c-max go together");
  }

  const std::vector<double> weights =
      bundle ? std::vector<double>(bundle->instance.weights().begin(), bundle->instance.weights().end())
             : args.weights;
  const auto graph = resolve_graph(args.graph_spec, bundle ? bundle->graph : std::nullopt, weights.size());
  const InteractionGraph* g = graph ? &*graph : nullptr;

  CertificateReport report;
  if (bundle) {
    const BetaSource source = args.beta ? BetaSource::external : BetaSource::computed;
    const double beta = args.beta ? *args.beta : bell_value(bundle->instance, opts.limits());
    report = aggregate_certificate(beta, source, bundle->instance, g);
  } else {
    report = aggregate_certificate(*args.beta, weights, g);
  }
  for (double t : args.thresholds) report.counting.push_back(counting_certificate(report.beta, weights, t, g));
  if (args.phi_threshold) {
    report.phi_threshold = phi_threshold_certificate(report.beta, weights, *args.phi_threshold, *args.c_max, g);
  }

  if (opts.json()) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    write_text(std::cout, report);
  }
  return kOk;
}

int run_demo(const GlobalOptions& opts, const std::string& name, std::size_t m, std::string write_path,
             bool no_write) {
  require_text_or_json(opts);
  const InstanceBundle bundle = make_demo(name, m);
  if (!no_write) {
    if (write_path.empty()) write_path = "demo-" + name + ".json";
    write_instance_file(write_path, bundle);
    std::cerr << "wrote " << write_path << '\n';
  }
  const BoundReport report = bound_report(bundle.instance, bundle.graph ? &*bundle.graph : nullptr, opts.limits());
  if (opts.json()) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << "demo " << name << '\n';
    write_text(std::cout, report);
  }
  return kOk;
}

int run_sweep_command(const GlobalOptions& opts, SweepConfig config, const std::string& ensemble,
                      const std::string& graph_mode, bool serial) {
  require_text_or_json(opts);
  if (ensemble == "contraction") {
    config.mix = EnsembleMix::contraction;
  } else if (ensemble == "involution") {
    config.mix = EnsembleMix::unitary_involution;
  } else if (ensemble == "mixed") {
    config.mix = EnsembleMix::mixed;
  } else {
    throw UsageError("unknown --ensemble '" + ensemble + "' (contraction, involution, mixed)");
  }
  if (graph_mode == "complete") {
    config.graph_mode = SweepGraphMode::complete;
  } else if (graph_mode == "random") {
    config.graph_mode = SweepGraphMode::random_min_degree_1;
  } else {
    throw UsageError("unknown --graph-mode '" + graph_mode + "' (complete, random)");
  }
  if (config.trials == 0 || config.max_m == 0 || config.max_dim == 0) {
    throw UsageError("--trials, --max-m and --max-dim must be positive");
  }
  config.seed = opts.seed;
  config.tol = opts.tol;
  config.limits = opts.limits();

  const SweepSummary summary = serial ? run_sweep_serial(config) : run_sweep(config);
  if (opts.json()) {
    std::cout << to_json(summary).dump(2) << '\n';
  } else {
    write_text(std::cout, summary);
  }
  return summary.violations() == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Norm bounds and noncommutativity certificates for tensor sums of self-adjoint contractions"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--output", opts.output, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--tol", opts.tol, "Slack allowed when comparing exact norms with bounds")->capture_default_str();
  app.add_option("--dim-cap", opts.dim_cap, "Largest tensor dimension that is diagonalized")->capture_default_str();
  app.add_option("--seed", opts.seed, "Master seed for sweep")->capture_default_str();

  std::string instance_path;
  std::string graph_spec;

  auto* bound = app.add_subcommand("bound", "Compute the bound report for an instance file");
  bound->add_option("instance", instance_path, "Instance file")->required();
  bound->add_option("--graph", graph_spec, "Graph: none, file, complete, star, chain")->expected(0, 1)->default_str("file");

  auto* exact = app.add_subcommand("exact", "Diagonalize B_c exactly");
  exact->add_option("instance", instance_path, "Instance file")->required();

  bool unweighted = false;
  auto* domination = app.add_subcommand("check-domination", "Evaluate the edge-domination condition");
  domination->add_option("instance", instance_path, "Instance file")->required();
  domination->add_option("--graph", graph_spec, "Graph: file (default), complete, star, chain");
  domination->add_flag("--unweighted", unweighted, "Ignore the weights");

  CertifyArgs cert;
  auto* certify = app.add_subcommand("certify", "Turn a Bell value into noncommutativity certificates");
  certify->add_option("instance", cert.instance_path, "Instance file (beta defaults to its lambda_max)");
  certify->add_option("--beta", cert.beta, "Observed Bell value");
  certify->add_option("--weights", cert.weights, "Weights c_i when no instance file is given")->delimiter(',');
  certify->add_option("--threshold,-t", cert.thresholds, "Threshold t (repeatable)")->delimiter(',');
  certify->add_option("--graph", cert.graph_spec, "Graph: none, file, complete, star, chain")->expected(0, 1)->default_str("file");
  certify->add_option("--phi-threshold", cert.phi_threshold, "Unweighted threshold t'");
  certify->add_option("--c-max", cert.c_max, "Bound on |c_i| for --phi-threshold");

  std::string demo_name;
  std::size_t demo_m = 4;
  std::string demo_write;
  bool demo_no_write = false;
  auto* demo = app.add_subcommand("demo", "Write a canonical instance file and print its report");
  demo->add_option("name", demo_name, "chsh, heisenberg, clifford, two-spin, counterexample, star, chain")
      ->required()
      ->check(CLI::IsMember(demo_names()));
  demo->add_option("--m", demo_m, "Number of terms for clifford, star and chain")->capture_default_str();
  demo->add_option("--write", demo_write, "Instance file to write (default demo-<name>.json)");
  demo->add_flag("--no-write", demo_no_write, "Do not write the instance file");

  SweepConfig sweep_config;
  std::string ensemble = "mixed";
  std::string graph_mode = "random";
  bool serial = false;
  auto* sweep = app.add_subcommand("sweep", "Check the bounds on seeded random instances");
  sweep->add_option("--trials", sweep_config.trials)->capture_default_str();
  sweep->add_option("--max-m", sweep_config.max_m)->capture_default_str();
  sweep->add_option("--max-dim", sweep_config.max_dim)->capture_default_str();
  sweep->add_option("--ensemble", ensemble, "contraction, involution, mixed")->capture_default_str();
  sweep->add_option("--graph-mode", graph_mode, "complete, random")->capture_default_str();
  sweep->add_flag("--serial", serial, "Run trials on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bound) return run_bound(opts, instance_path, graph_spec);
    if (*exact) return run_exact(opts, instance_path);
    if (*domination) return run_check_domination(opts, instance_path, graph_spec, unweighted);
    if (*certify) return run_certify(opts, cert);
    if (*demo) return run_demo(opts, demo_name, demo_m, demo_write, demo_no_write);
    if (*sweep) return run_sweep_command(opts, sweep_config, ensemble, graph_mode, serial);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const DominationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (opts.json()) {
      std::cout << to_json(e.report()).dump(2) << '\n';
    } else {
      write_text(std::cout, e.report());
    }
    return kValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kUsage;
}
