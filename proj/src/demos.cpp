#include "tensorbound/demos.hpp"

#include <cmath>
#include <numbers>

#include "tensorbound/errors.hpp"
#include "tensorbound/operators.hpp"

namespace tensorbound {

InstanceBundle demo_chsh() {
  const OperatorMatrix a0 = pauli(Pauli::z);
  const OperatorMatrix a1 = pauli(Pauli::x);
  const double r = 1.0 / std::numbers::sqrt2;
  const OperatorMatrix b0 = r * (pauli(Pauli::z) + pauli(Pauli::x));
  const OperatorMatrix b1 = r * (pauli(Pauli::z) - pauli(Pauli::x));
  return {TensorSumInstance({a0, a0, a1, a1}, {b0, b1, b0, -b1}), std::nullopt};
}

InstanceBundle demo_heisenberg() {
  std::vector<OperatorMatrix> s{pauli(Pauli::x), pauli(Pauli::y), pauli(Pauli::z)};
  return {TensorSumInstance(s, s), std::nullopt};
}

InstanceBundle demo_clifford(std::size_t m) {
  auto gammas = clifford_generators(m);
  return {TensorSumInstance(gammas, gammas), complete_graph(m)};
}

InstanceBundle demo_two_spin() {
  std::vector<OperatorMatrix> s{pauli(Pauli::z), pauli(Pauli::x)};
  return {TensorSumInstance(s, s), std::nullopt};
}

InstanceBundle demo_counterexample() {
  std::vector<OperatorMatrix> s{pauli(Pauli::z), OperatorMatrix::zero(2), pauli(Pauli::x)};
  return {TensorSumInstance(s, s), InteractionGraph(3, {{0, 1}})};
}

InstanceBundle demo_star(std::size_t m) {
  if (m < 2) throw PreconditionError("star demo needs m >= 2");
  auto gammas = clifford_generators(m);
  return {TensorSumInstance(gammas, gammas), star_graph(m)};
}

InstanceBundle demo_chain(std::size_t m) {
  if (m < 2) throw PreconditionError("chain demo needs m >= 2");
  std::vector<OperatorMatrix> spins;
  for (std::size_t i = 0; i < m; ++i) {
    const double angle = static_cast<double>(i) * std::numbers::pi / static_cast<double>(m);
    spins.push_back(std::cos(angle) * pauli(Pauli::z) + std::sin(angle) * pauli(Pauli::x));
  }
  return {TensorSumInstance(spins, spins), chain_graph(m)};
}

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"chsh", "heisenberg", "clifford", "two-spin",
                                              "counterexample", "star", "chain"};
  return names;
}

InstanceBundle make_demo(const std::string& name, std::size_t m) {
  if (name == "chsh") return demo_chsh();
  if (name == "heisenberg") return demo_heisenberg();
  if (name == "clifford") return demo_clifford(m);
  if (name == "two-spin") return demo_two_spin();
  if (name == "counterexample") return demo_counterexample();
  if (name == "star") return demo_star(m);
  if (name == "chain") return demo_chain(m);
  throw PreconditionError("unknown demo '" + name + "'");
}

}  // namespace tensorbound
