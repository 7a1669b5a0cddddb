#include "tensorbound/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tensorbound/errors.hpp"
#include "tensorbound/rng.hpp"

namespace tensorbound {

InteractionGraph::InteractionGraph(std::size_t m, std::vector<VertexPair> edges)
    : m_(m), neighbors_(m), adjacency_(m, std::vector<bool>(m, false)) {
  if (m == 0) throw ValidationError("graph must have at least one vertex");
  for (auto& [i, j] : edges) {
    if (i >= m || j >= m) {
      throw ValidationError("edge (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range for " +
                            std::to_string(m) + " vertices");
    }
    if (i == j) throw ValidationError("self-loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (adjacency_[i][j]) {
      throw ValidationError("duplicate edge (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    adjacency_[i][j] = adjacency_[j][i] = true;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
  for (const auto& [i, j] : edges_) {
    neighbors_[i].push_back(j);
    neighbors_[j].push_back(i);
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());
}

bool InteractionGraph::has_edge(std::size_t i, std::size_t j) const {
  if (i >= m_ || j >= m_) return false;
  return adjacency_[i][j];
}

std::size_t InteractionGraph::min_degree() const noexcept {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& n : neighbors_) best = std::min(best, n.size());
  return best;
}

std::vector<std::size_t> InteractionGraph::isolated_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m_; ++i)
    if (neighbors_[i].empty()) out.push_back(i);
  return out;
}

std::vector<VertexPair> InteractionGraph::non_edges() const {
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i + 1; j < m_; ++j)
      if (!adjacency_[i][j]) out.emplace_back(i, j);
  return out;
}

InteractionGraph complete_graph(std::size_t m) {
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  return InteractionGraph(m, std::move(edges));
}

InteractionGraph empty_graph(std::size_t m) { return InteractionGraph(m, {}); }

InteractionGraph star_graph(std::size_t m) {
  std::vector<VertexPair> edges;
  for (std::size_t j = 1; j < m; ++j) edges.emplace_back(0, j);
  return InteractionGraph(m, std::move(edges));
}

InteractionGraph chain_graph(std::size_t m) {
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  return InteractionGraph(m, std::move(edges));
}

InteractionGraph cycle_graph(std::size_t m) {
  if (m < 3) throw PreconditionError("cycle_graph needs at least 3 vertices");
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, m - 1);
  return InteractionGraph(m, std::move(edges));
}

InteractionGraph random_graph_min_degree_one(std::size_t m, double edge_probability, Rng& rng) {
  if (m < 2) throw PreconditionError("a graph with minimum degree 1 needs at least 2 vertices");
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (rng.uniform() < edge_probability) adj[i][j] = adj[j][i] = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (std::none_of(adj[i].begin(), adj[i].end(), [](bool b) { return b; })) {
      std::size_t partner = static_cast<std::size_t>(rng.below(m - 1));
      if (partner >= i) ++partner;
      adj[i][partner] = adj[partner][i] = true;
    }
  }
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (adj[i][j]) edges.emplace_back(i, j);
  return InteractionGraph(m, std::move(edges));
}

double graph_constant(const InteractionGraph& g) {
  const auto isolated = g.isolated_vertices();
  if (!isolated.empty()) {
    throw PreconditionError("graph constant requires minimum degree >= 1; vertex " +
                            std::to_string(isolated.front() + 1) + " is isolated");
  }
  const double m = static_cast<double>(g.vertex_count());
  const double delta = static_cast<double>(g.min_degree());
  return 2.0 * (m - 1.0) / delta - 1.0;
}

}  // namespace tensorbound
