#include "cycleminor/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace cycleminor {

VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Graph::Graph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(n);
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++num_edges_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (num_vertices() > 64) throw GuardExceeded("bitmask adjacency needs n <= 64");
  std::vector<std::uint64_t> masks(num_vertices(), 0);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) masks[u] |= std::uint64_t{1} << v;
  }
  return masks;
}

VertexSet InducedSubgraph::to_original(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(original[v]);
  return make_vertex_set(std::move(out));
}

std::vector<Vertex> InducedSubgraph::to_original_seq(const std::vector<Vertex>& seq) const {
  std::vector<Vertex> out;
  out.reserve(seq.size());
  for (Vertex v : seq) out.push_back(original[v]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.relabel.assign(g.num_vertices(), -1);
  for (Vertex v : keep) {
    if (!g.has_vertex(v)) throw GraphError("vertex out of range: " + std::to_string(v));
    out.relabel[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }
  out.graph = Graph(static_cast<int>(out.original.size()));
  for (auto [u, v] : g.edges()) {
    if (out.relabel[u] >= 0 && out.relabel[v] >= 0) out.graph.add_edge(out.relabel[u], out.relabel[v]);
  }
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& x) {
  std::vector<char> gone(g.num_vertices(), 0);
  for (Vertex v : x) {
    if (!g.has_vertex(v)) throw GraphError("vertex out of range: " + std::to_string(v));
    gone[v] = 1;
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.num_vertices(), 0);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : s) {
    if (!g.has_vertex(v)) return false;
    in[v] = 1;
  }
  std::vector<Vertex> stack{s.front()};
  in[s.front()] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (in[w] == 1) {
        in[w] = 2;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

bool is_forest(const Graph& g) {
  return g.num_edges() + static_cast<int>(connected_components(g).size()) == g.num_vertices();
}

bool is_path(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  for (Vertex v : p) {
    if (!g.has_vertex(v)) return false;
  }
  if (make_vertex_set(p).size() != p.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.has_edge(p[i], p[i + 1])) return false;
  }
  return true;
}

bool is_cycle(const Graph& g, const Cycle& c) {
  return c.size() >= 3 && is_path(g, c) && g.has_edge(c.back(), c.front());
}

Cycle shortest_cycle(const Graph& g) {
  const int n = g.num_vertices();
  Cycle best;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (!best.empty() && 2 * dist[u] + 1 >= static_cast<int>(best.size())) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
          continue;
        }
        if (w == parent[u] || u == parent[w]) continue;
        // Non-tree edge: close the cycle through the lowest common ancestor.
        std::vector<Vertex> left{u}, right{w};
        while (left.back() != s) left.push_back(parent[left.back()]);
        while (right.back() != s) right.push_back(parent[right.back()]);
        std::reverse(left.begin(), left.end());
        std::reverse(right.begin(), right.end());
        std::size_t common = 0;
        while (common < left.size() && common < right.size() && left[common] == right[common]) ++common;
        Cycle c(left.begin() + static_cast<long>(common) - 1, left.end());
        for (auto it = right.rbegin(); it != right.rend() - static_cast<long>(common); ++it) c.push_back(*it);
        if (c.size() >= 3 && (best.empty() || c.size() < best.size())) best = std::move(c);
      }
    }
  }
  return best;
}

int circumference(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  std::vector<char> on(n, 0);
  std::vector<Vertex> path;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex u) {
    for (Vertex w : g.neighbors(u)) {
      if (w == start && path.size() >= 3) best = std::max(best, static_cast<int>(path.size()));
      if (w <= start || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < n && best < n - s; ++s) {
    on[s] = 1;
    path = {s};
    dfs(s, s);
    on[s] = 0;
  }
  return best;
}

Graph grid_graph(int k) {
  if (k < 1) throw GraphError("grid size must be positive");
  Graph g(k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (j + 1 < k) g.add_edge(i * k + j, i * k + j + 1);
      if (i + 1 < k) g.add_edge(i * k + j, (i + 1) * k + j);
    }
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph ladder_graph(int rungs, int rung_interior, int spacing) {
  if (rungs < 1 || rung_interior < 0 || spacing < 1) throw GraphError("invalid ladder parameters");
  const int rail = (rungs - 1) * spacing + 1;
  Graph g(2 * rail + rungs * rung_interior);
  for (int i = 0; i + 1 < rail; ++i) {
    g.add_edge(i, i + 1);
    g.add_edge(rail + i, rail + i + 1);
  }
  Vertex next = 2 * rail;
  for (int r = 0; r < rungs; ++r) {
    Vertex prev = r * spacing;
    for (int t = 0; t < rung_interior; ++t) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, rail + r * spacing);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.num_vertices() + b.num_vertices());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.num_vertices() + u, a.num_vertices() + v);
  return g;
}

Graph random_gnm(int n, int m, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  if (m < 0 || m > static_cast<int>(all.size())) throw GraphError("edge count out of range for G(n,m)");
  // Partial Fisher-Yates keeps the draw independent of the distribution
  // implementation beyond uniform_int_distribution.
  for (int i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  Graph g(n);
  for (int i = 0; i < m; ++i) g.add_edge(all[i].first, all[i].second);
  return g;
}

}  // namespace cycleminor
