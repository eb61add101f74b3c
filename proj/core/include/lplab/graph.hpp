#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "lplab/mat3.hpp"

namespace lplab {

/// Simple connected k-regular graph. Construction validates all three
/// properties and throws otherwise.
struct Graph {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, unoriented
  std::vector<std::vector<std::size_t>> adj;

  static Graph from_edges(std::size_t n,
                          std::vector<std::pair<std::size_t, std::size_t>> edges);

  bool adjacent(std::size_t u, std::size_t v) const;
  /// BFS distances from a source vertex.
  std::vector<std::size_t> distances(std::size_t source) const;
};

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen_graph();

/// Cayley graph of a closed element set: edges {g, g*s} for s in gens.
/// Generators must be symmetric, identity-free and deduplicated; the result
/// must come out connected and |gens|-regular or construction throws.
Graph cayley_graph(const std::vector<Mat3>& elements, const std::vector<Mat3>& gens);

/// Generic Cayley construction from index arithmetic: neighbor(v, j) gives
/// the j-th neighbor of vertex v, j < degree.
Graph cayley_graph_generic(std::size_t n, std::size_t degree,
                           const std::function<std::size_t(std::size_t, std::size_t)>& neighbor);

}  // namespace lplab
