#include "lplab/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace lplab {

Graph Graph::from_edges(std::size_t n,
                        std::vector<std::pair<std::size_t, std::size_t>> edges) {
  Graph g;
  g.n = n;
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("Graph: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("Graph: multi-edge");
  }
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (const auto& [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());

  if (n == 0) throw std::invalid_argument("Graph: empty vertex set");
  g.k = g.adj[0].size();
  for (const auto& nb : g.adj) {
    if (nb.size() != g.k) throw std::invalid_argument("Graph: not regular");
  }
  const auto dist = g.distances(0);
  for (std::size_t v = 0; v < n; ++v) {
    if (dist[v] == static_cast<std::size_t>(-1)) {
      throw std::invalid_argument("Graph: disconnected");
    }
  }
  return g;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::size_t> Graph::distances(std::size_t source) const {
  std::vector<std::size_t> dist(n, static_cast<std::size_t>(-1));
  std::deque<std::size_t> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop_front();
    for (std::size_t v : adj[u]) {
      if (dist[v] == static_cast<std::size_t>(-1)) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(e));
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(n, std::move(e));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("complete_bipartite: need a == b for regularity");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph::from_edges(a + b, std::move(e));
}

Graph petersen_graph() {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, std::move(e));
}

Graph cayley_graph(const std::vector<Mat3>& elements, const std::vector<Mat3>& gens) {
  if (elements.empty()) throw std::invalid_argument("cayley_graph: no elements");
  const std::uint64_t id_key = Mat3::identity(elements.front().l).key();
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(elements.size() * 2);
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i].key()] = i;

  std::unordered_map<std::uint64_t, bool> gen_keys;
  for (const Mat3& s : gens) {
    if (s.key() == id_key) {
      throw std::invalid_argument("cayley_graph: identity generator makes loops");
    }
    if (gen_keys.count(s.key())) {
      throw std::invalid_argument("cayley_graph: duplicate generator");
    }
    gen_keys[s.key()] = true;
  }
  for (const Mat3& s : gens) {
    if (!gen_keys.count(s.inverse().key())) {
      throw std::invalid_argument("cayley_graph: generator set is not symmetric");
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Mat3& s : gens) {
      const auto it = index.find((elements[i] * s).key());
      if (it == index.end()) {
        throw std::invalid_argument("cayley_graph: element set is not closed under gens");
      }
      if (i < it->second) edges.emplace_back(i, it->second);
    }
  }
  return Graph::from_edges(elements.size(), std::move(edges));
}

Graph cayley_graph_generic(
    std::size_t n, std::size_t degree,
    const std::function<std::size_t(std::size_t, std::size_t)>& neighbor) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < degree; ++j) {
      const std::size_t w = neighbor(v, j);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace lplab
