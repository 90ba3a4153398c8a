#include "cycleminor/cycle_packing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

namespace cycleminor {

std::vector<std::vector<std::pair<int, int>>> MultiGraph::incidence() const {
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    inc[edges[e].first].emplace_back(edges[e].second, e);
    inc[edges[e].second].emplace_back(edges[e].first, e);
  }
  return inc;
}

int MultiGraph::max_degree() const {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

MultiGraph MultiGraph::from_graph(const Graph& g) {
  MultiGraph m;
  m.n = g.num_vertices();
  m.edges = g.edges();
  return m;
}

bool is_multicycle(const MultiGraph& g, const MultiCycle& c) {
  const std::size_t len = c.vertices.size();
  if (len < 2 || c.edges.size() != len) return false;
  std::vector<int> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::vector<int> es = c.edges;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    int e = c.edges[i];
    if (e < 0 || e >= static_cast<int>(g.edges.size())) return false;
    auto [a, b] = g.edges[e];
    int u = c.vertices[i], w = c.vertices[(i + 1) % len];
    if (!((a == u && b == w) || (a == w && b == u))) return false;
  }
  return true;
}

double k_log_k(double k) { return k <= 1.0 ? 0.0 : k * std::log2(k); }

namespace {

using Incidence = std::vector<std::vector<std::pair<int, int>>>;

// Shortest cycle among alive vertices, ties by smallest vertex id.
std::optional<MultiCycle> shortest_multicycle(const Incidence& inc, const std::vector<char>& alive) {
  const int n = static_cast<int>(inc.size());
  std::optional<MultiCycle> best;
  for (int s = 0; s < n; ++s) {
    if (!alive[s]) continue;
    std::vector<int> dist(n, -1), parent(n, -1), parent_edge(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (best && 2 * dist[u] + 1 >= static_cast<int>(best->vertices.size())) break;
      for (auto [w, e] : inc[u]) {
        if (!alive[w] || e == parent_edge[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          parent_edge[w] = e;
          q.push(w);
          continue;
        }
        if (e == parent_edge[w]) continue;
        // Non-tree edge e = (u, w): climb both sides to the common ancestor.
        std::vector<int> left{u}, right{w}, left_e, right_e;
        while (left.back() != s) {
          left_e.push_back(parent_edge[left.back()]);
          left.push_back(parent[left.back()]);
        }
        while (right.back() != s) {
          right_e.push_back(parent_edge[right.back()]);
          right.push_back(parent[right.back()]);
        }
        std::reverse(left.begin(), left.end());
        std::reverse(left_e.begin(), left_e.end());
        std::reverse(right.begin(), right.end());
        std::reverse(right_e.begin(), right_e.end());
        std::size_t common = 0;
        while (common < left.size() && common < right.size() && left[common] == right[common]) ++common;
        MultiCycle c;
        for (std::size_t i = common - 1; i < left.size(); ++i) {
          c.vertices.push_back(left[i]);
          if (i + 1 < left.size()) c.edges.push_back(left_e[i]);
        }
        c.edges.push_back(e);
        for (std::size_t i = right.size() - 1; i >= common; --i) {
          c.vertices.push_back(right[i]);
          c.edges.push_back(right_e[i - 1]);
          if (i == common) break;
        }
        if (!best || c.vertices.size() < best->vertices.size()) best = std::move(c);
      }
    }
  }
  return best;
}

class PackingSearch {
 public:
  PackingSearch(const MultiGraph& g, int k, long long budget)
      : g_(g), inc_(g.incidence()), k_(k), budget_(budget) {}

  MultiPacking run() {
    std::vector<char> alive(g_.n, 1);
    std::vector<MultiCycle> chosen;
    search(alive, chosen);
    MultiPacking out;
    out.requested = k_;
    out.exhaustive = nodes_ <= budget_;
    out.cycles = best_;
    if (!out.exhaustive) {
      auto greedy = greedy_cycle_packing(g_);
      if (greedy.size() > out.cycles.size()) out.cycles = std::move(greedy);
    }
    if (static_cast<int>(out.cycles.size()) > k_) out.cycles.resize(k_);
    out.reached = static_cast<int>(out.cycles.size()) >= k_;
    return out;
  }

 private:
  // Vertices of degree <= 1 lie on no cycle.
  void prune(std::vector<char>& alive) const {
    std::vector<int> deg(g_.n, 0);
    for (int v = 0; v < g_.n; ++v) {
      if (!alive[v]) continue;
      for (auto [w, e] : inc_[v]) deg[v] += alive[w];
    }
    std::vector<int> stack;
    for (int v = 0; v < g_.n; ++v) {
      if (alive[v] && deg[v] <= 1) stack.push_back(v);
    }
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (!alive[v]) continue;
      alive[v] = 0;
      for (auto [w, e] : inc_[v]) {
        if (alive[w] && --deg[w] <= 1) stack.push_back(w);
      }
    }
  }

  // Disjoint cycles are bounded by the cycle rank and by half the vertices.
  int upper_bound(const std::vector<char>& alive) const {
    int vertices = 0, edges = 0;
    for (int v = 0; v < g_.n; ++v) vertices += alive[v];
    for (auto [a, b] : g_.edges) edges += alive[a] && alive[b];
    std::vector<int> comp(g_.n, -1);
    int comps = 0;
    for (int s = 0; s < g_.n; ++s) {
      if (!alive[s] || comp[s] >= 0) continue;
      ++comps;
      std::vector<int> st{s};
      comp[s] = s;
      while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        for (auto [w, e] : inc_[u]) {
          if (alive[w] && comp[w] < 0) {
            comp[w] = s;
            st.push_back(w);
          }
        }
      }
    }
    return std::min(edges - vertices + comps, vertices / 2);
  }

  std::vector<MultiCycle> cycles_through(int v, const std::vector<char>& alive) const {
    std::vector<MultiCycle> out;
    std::vector<char> on(g_.n, 0);
    MultiCycle cur{{v}, {}};
    on[v] = 1;
    const std::size_t cap = 4096;
    std::function<void(int)> dfs = [&](int u) {
      for (auto [w, e] : inc_[u]) {
        if (out.size() >= cap) return;
        if (!alive[w] || (!cur.edges.empty() && e == cur.edges.back())) continue;
        if (w == v) {
          if (!cur.edges.empty() && cur.edges.front() < e) {
            MultiCycle c = cur;
            c.edges.push_back(e);
            out.push_back(std::move(c));
          }
          continue;
        }
        if (on[w]) continue;
        on[w] = 1;
        cur.vertices.push_back(w);
        cur.edges.push_back(e);
        dfs(w);
        cur.vertices.pop_back();
        cur.edges.pop_back();
        on[w] = 0;
      }
    };
    dfs(v);
    std::stable_sort(out.begin(), out.end(),
                     [](const MultiCycle& a, const MultiCycle& b) { return a.vertices.size() < b.vertices.size(); });
    return out;
  }

  bool search(std::vector<char> alive, std::vector<MultiCycle>& chosen) {
    if (++nodes_ > budget_) return true;
    if (chosen.size() > best_.size()) best_ = chosen;
    if (static_cast<int>(chosen.size()) >= k_) return true;
    prune(alive);
    if (static_cast<int>(chosen.size()) + upper_bound(alive) <= static_cast<int>(best_.size())) return false;
    auto shortest = shortest_multicycle(inc_, alive);
    if (!shortest) return false;
    const int v = *std::min_element(shortest->vertices.begin(), shortest->vertices.end());
    for (auto& c : cycles_through(v, alive)) {
      std::vector<char> next = alive;
      for (int x : c.vertices) next[x] = 0;
      chosen.push_back(c);
      bool stop = search(std::move(next), chosen);
      chosen.pop_back();
      if (stop) return true;
    }
    alive[v] = 0;
    return search(std::move(alive), chosen);
  }

  const MultiGraph& g_;
  Incidence inc_;
  int k_;
  long long budget_;
  long long nodes_ = 0;
  std::vector<MultiCycle> best_;
};

}  // namespace

std::vector<MultiCycle> greedy_cycle_packing(const MultiGraph& g) {
  auto inc = g.incidence();
  std::vector<char> alive(g.n, 1);
  std::vector<MultiCycle> out;
  while (auto c = shortest_multicycle(inc, alive)) {
    for (int v : c->vertices) alive[v] = 0;
    out.push_back(std::move(*c));
  }
  return out;
}

MultiPacking pack_disjoint_cycles(const MultiGraph& g, int k, long long node_budget) {
  if (k <= 0) return MultiPacking{{}, k, true, true};
  return PackingSearch(g, k, node_budget).run();
}

MultiPacking pack_cycles_subcubic(const MultiGraph& g, int k, PackingConfig config) {
  if (k < 1) throw PreconditionError("pack_cycles_subcubic needs k >= 1");
  if (g.max_degree() > 3) throw PreconditionError("pack_cycles_subcubic needs maximum degree <= 3");
  if (config.strict) {
    const double need = g.n + 3.0 * config.c_star * k_log_k(k);
    if (static_cast<double>(g.edges.size()) < need) {
      throw PreconditionError("pack_cycles_subcubic: |E| < |V| + 3·c*·k·log k");
    }
  }
  return pack_disjoint_cycles(g, k, config.node_budget);
}

AuxiliaryGraph build_auxiliary_graph(const PathSystem& ps) {
  AuxiliaryGraph aux;
  std::vector<Vertex> host = ps.p1;
  host.insert(host.end(), ps.p2.begin(), ps.p2.end());
  aux.host = host;
  aux.j.n = static_cast<int>(host.size());
  auto index_of = [&](Vertex v) {
    return static_cast<int>(std::find(aux.host.begin(), aux.host.end(), v) - aux.host.begin());
  };
  const int n1 = static_cast<int>(ps.p1.size());
  for (int i = 0; i + 1 < n1; ++i) {
    aux.j.edges.emplace_back(i, i + 1);
    aux.lift.push_back(-1);
  }
  for (int i = 0; i + 1 < static_cast<int>(ps.p2.size()); ++i) {
    aux.j.edges.emplace_back(n1 + i, n1 + i + 1);
    aux.lift.push_back(-1);
  }
  aux.p1_edges = std::max(0, n1 - 1);
  aux.p2_edges = std::max(0, static_cast<int>(ps.p2.size()) - 1);
  for (int q = 0; q < static_cast<int>(ps.links.size()); ++q) {
    aux.j.edges.emplace_back(index_of(ps.links[q].front()), index_of(ps.links[q].back()));
    aux.lift.push_back(q);
  }
  aux.link_edges = static_cast<int>(ps.links.size());
  return aux;
}

LinkagePacking cycles_from_linkage(const Graph& g, const PathSystem& ps, int k, PackingConfig config) {
  if (k < 1) throw PreconditionError("cycles_from_linkage needs k >= 1");
  if (auto check = verify_path_system(g, ps); !check) throw PreconditionError("cycles_from_linkage: " + check.reason);
  if (config.strict && static_cast<double>(ps.links.size()) < 2.0 + 3.0 * config.c_star * k_log_k(k)) {
    throw PreconditionError("cycles_from_linkage: fewer than 2 + 3·c*·k·log k links");
  }
  LinkagePacking out;
  out.aux = build_auxiliary_graph(ps);
  out.requested = k;
  // The threshold was checked on the link count; the contracted graph
  // satisfies the edge condition by construction.
  PackingConfig relaxed = config;
  relaxed.strict = false;
  auto packing = pack_cycles_subcubic(out.aux.j, k, relaxed);
  for (const auto& mc : packing.cycles) {
    Cycle c;
    std::vector<int> used;
    const std::size_t len = mc.vertices.size();
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex from = out.aux.host[mc.vertices[i]];
      const Vertex to = out.aux.host[mc.vertices[(i + 1) % len]];
      const int link = out.aux.lift[mc.edges[i]];
      c.push_back(from);
      if (link < 0) continue;
      used.push_back(link);
      const Path& q = ps.links[link];
      // Insert the interior of the link in travel direction.
      if (q.front() == from) {
        for (std::size_t t = 1; t + 1 < q.size(); ++t) c.push_back(q[t]);
      } else {
        for (std::size_t t = q.size() - 2; t >= 1; --t) c.push_back(q[t]);
      }
      (void)to;
    }
    std::sort(used.begin(), used.end());
    out.cycles.push_back(std::move(c));
    out.links_used.push_back(std::move(used));
  }
  out.reached = static_cast<int>(out.cycles.size()) >= k;
  if (!verify_cycle_packing(g, out.cycles)) throw std::logic_error("cycles_from_linkage lifted an invalid packing");
  return out;
}

bool verify_cycle_packing(const Graph& g, const std::vector<Cycle>& cycles) {
  std::vector<char> used(g.num_vertices(), 0);
  for (const auto& c : cycles) {
    if (!is_cycle(g, c)) return false;
    for (Vertex v : c) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

VertexSet minimum_feedback_vertex_set(const Graph& g, int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices) throw GuardExceeded("minimum_feedback_vertex_set: graph exceeds guard");
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      VertexSet x(pick.begin(), pick.end());
      if (is_forest(delete_vertices(g, x).graph)) return x;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

HittingOrPacking cycle_hitting_or_packing(const Graph& g, int k, double c_star, int max_vertices) {
  if (k < 1) throw PreconditionError("cycle_hitting_or_packing needs k >= 1");
  if (g.num_vertices() > max_vertices) throw GuardExceeded("cycle_hitting_or_packing: graph exceeds guard");
  HittingOrPacking out;
  out.bound = c_star * k_log_k(k);
  auto packing = pack_disjoint_cycles(MultiGraph::from_graph(g), k, 50'000'000);
  if (packing.reached) {
    std::vector<Cycle> cycles;
    for (const auto& mc : packing.cycles) cycles.push_back(mc.vertices);
    out.packing = std::move(cycles);
    return out;
  }
  out.feedback_set = minimum_feedback_vertex_set(g, max_vertices);
  out.calibration_finding = static_cast<double>(out.feedback_set->size()) > out.bound;
  return out;
}

std::optional<Graph> random_subcubic(int n, int m, std::mt19937_64& rng, int attempts) {
  if (2 * m > 3 * n) return std::nullopt;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Graph g(n);
    bool stuck = false;
    while (g.num_edges() < m && !stuck) {
      std::vector<std::pair<Vertex, Vertex>> open;
      for (Vertex u = 0; u < n; ++u) {
        if (g.degree(u) >= 3) continue;
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.degree(v) < 3 && !g.has_edge(u, v)) open.emplace_back(u, v);
        }
      }
      if (open.empty()) {
        stuck = true;
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
      auto [u, v] = open[pick(rng)];
      g.add_edge(u, v);
    }
    if (!stuck) return g;
  }
  return std::nullopt;
}

}  // namespace cycleminor
