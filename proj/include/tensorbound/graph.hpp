#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace tensorbound {

class Rng;

/// Unordered vertex pair, stored with first < second, 0-based.
using VertexPair = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..m-1 (rendered 1-based in reports).
class InteractionGraph {
 public:
  /// Throws ValidationError on self-loops, duplicates (in either orientation) or out-of-range indices.
  InteractionGraph(std::size_t m, std::vector<VertexPair> edges);

  std::size_t vertex_count() const noexcept { return m_; }
  const std::vector<VertexPair>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_edge(std::size_t i, std::size_t j) const;
  std::size_t degree(std::size_t i) const { return neighbors_[i].size(); }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return neighbors_[i]; }
  std::size_t min_degree() const noexcept;
  std::vector<std::size_t> isolated_vertices() const;

  /// Complement of the edge set among all i < j, in lexicographic order.
  std::vector<VertexPair> non_edges() const;

 private:
  std::size_t m_;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::vector<bool>> adjacency_;
};

InteractionGraph complete_graph(std::size_t m);
InteractionGraph empty_graph(std::size_t m);
/// Vertex 0 is the hub.
InteractionGraph star_graph(std::size_t m);
/// Path 0-1-...-(m-1).
InteractionGraph chain_graph(std::size_t m);
InteractionGraph cycle_graph(std::size_t m);
/// Erdos-Renyi G(m, p), then every isolated vertex is joined to a uniformly chosen partner. m >= 2.
InteractionGraph random_graph_min_degree_one(std::size_t m, double edge_probability, Rng& rng);

/// 2(m-1)/delta - 1. Throws PreconditionError naming the first isolated vertex (1-based).
double graph_constant(const InteractionGraph& g);

}  // namespace tensorbound
