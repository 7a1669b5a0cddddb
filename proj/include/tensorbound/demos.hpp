#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensorbound/graph.hpp"
#include "tensorbound/instance.hpp"

namespace tensorbound {

/// A tensor-sum instance plus the graph it ships with, as stored in an instance file.
struct InstanceBundle {
  TensorSumInstance instance;
  std::optional<InteractionGraph> graph;
};

/// Four-term CHSH form: x = (A0, A0, A1, A1), y = (B0, B1, B0, -B1) with A0 = Z, A1 = X,
/// B0 = (Z + X)/sqrt2, B1 = (Z - X)/sqrt2.
InstanceBundle demo_chsh();
/// X(x)X + Y(x)Y + Z(x)Z.
InstanceBundle demo_heisenberg();
/// x_i = y_i = gamma_i from clifford_generators(m).
InstanceBundle demo_clifford(std::size_t m);
/// Z(x)Z + X(x)X.
InstanceBundle demo_two_spin();
/// x = y = (Z, 0, X) with the single-edge graph {(0,1)}: edge domination fails.
InstanceBundle demo_counterexample();
/// Clifford generators on a star graph centred at vertex 0.
InstanceBundle demo_star(std::size_t m);
/// Spin observables rotating in the x-z plane, x_i = y_i = cos(i pi/m) Z + sin(i pi/m) X, on a chain.
InstanceBundle demo_chain(std::size_t m);

/// Dispatch by name: chsh, heisenberg, clifford, two-spin, counterexample, star, chain.
/// `m` is used by clifford, star and chain. Throws PreconditionError for an unknown name.
InstanceBundle make_demo(const std::string& name, std::size_t m);
const std::vector<std::string>& demo_names();

}  // namespace tensorbound
