#include "cycleminor/linkage.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "flow.hpp"

namespace cycleminor {

namespace {

using detail::MinCostFlow;

// Incremental count of bramble elements met by a changing vertex multiset.
class HitTracker {
 public:
  HitTracker(const Graph& g, const Bramble& b) : count_(b.size(), 0), elements_of_(g.num_vertices()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (Vertex v : b.elements[i]) elements_of_[v].push_back(static_cast<int>(i));
    }
  }

  void add(Vertex v) {
    for (int e : elements_of_[v]) hit_ += (count_[e]++ == 0);
  }
  void remove(Vertex v) {
    for (int e : elements_of_[v]) hit_ -= (--count_[e] == 0);
  }
  int hit() const { return hit_; }
  bool all() const { return hit_ == static_cast<int>(count_.size()); }
  bool element_hit(int e) const { return count_[e] > 0; }

 private:
  std::vector<int> count_;
  std::vector<std::vector<int>> elements_of_;
  int hit_ = 0;
};

// ord(b) >= 3 exactly when no set of at most two vertices meets every element.
bool order_at_least_three(const Graph& g, const Bramble& b) {
  if (b.size() < 3) return false;
  const int n = g.num_vertices();
  std::vector<std::vector<char>> member(n, std::vector<char>(b.size(), 0));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (Vertex v : b.elements[i]) member[v][i] = 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) {
      bool all = true;
      for (std::size_t i = 0; i < b.size() && all; ++i) all = member[u][i] || member[v][i];
      if (all) return false;
    }
  }
  return true;
}

std::optional<Cycle> exhaustive_hitting_cycle(const Graph& g, const Bramble& b, long long budget) {
  const int n = g.num_vertices();
  HitTracker tracker(g, b);
  std::vector<char> on(n, 0);
  Path path;
  long long steps = 0;
  std::optional<Cycle> found;
  std::function<bool(Vertex)> dfs = [&](Vertex start) -> bool {
    Vertex u = path.back();
    for (Vertex w : g.neighbors(u)) {
      if (++steps > budget) return true;
      if (w == start) {
        if (path.size() >= 3 && path[1] < path.back() && tracker.all()) {
          found = path;
          return true;
        }
        continue;
      }
      if (w < start || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      tracker.add(w);
      bool stop = dfs(start);
      tracker.remove(w);
      path.pop_back();
      on[w] = 0;
      if (stop) return true;
    }
    return false;
  };
  for (Vertex s = 0; s < n && !found && steps <= budget; ++s) {
    on[s] = 1;
    path = {s};
    tracker.add(s);
    dfs(s);
    tracker.remove(s);
    on[s] = 0;
  }
  return found;
}

// Shortest cycle through v, or empty.
Cycle shortest_cycle_through(const Graph& g, Vertex v) {
  Cycle best;
  const auto& nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    // BFS from nbrs[i] avoiding v; close at another neighbour of v.
    std::vector<int> parent(g.num_vertices(), -2);
    std::queue<Vertex> q;
    parent[nbrs[i]] = -1;
    parent[v] = -3;
    q.push(nbrs[i]);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (u != nbrs[i] && g.has_edge(u, v)) {
        Cycle c{v};
        std::vector<Vertex> back;
        for (Vertex x = u; x != -1; x = parent[x]) back.push_back(x);
        c.insert(c.end(), back.rbegin(), back.rend());
        if (c.size() >= 3 && (best.empty() || c.size() < best.size())) best = std::move(c);
        break;
      }
      for (Vertex w : g.neighbors(u)) {
        if (parent[w] == -2) {
          parent[w] = u;
          q.push(w);
        }
      }
    }
  }
  return best;
}

// Two internally disjoint paths x -> a and x -> b using only `usable` vertices
// (plus x, a, b). Returned paths both start at x.
std::optional<std::pair<Path, Path>> fan_to_pair(const Graph& g, Vertex x, Vertex a, Vertex b,
                                                 const std::vector<char>& usable) {
  const int n = g.num_vertices();
  MinCostFlow flow(2 * n + 1);
  const int sink = 2 * n;
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  auto allowed = [&](Vertex v) { return usable[v] || v == x || v == a || v == b; };
  for (Vertex v = 0; v < n; ++v) {
    if (!allowed(v)) continue;
    flow.add_arc(in(v), out(v), v == x ? 2 : 1, 1);
  }
  for (auto [u, v] : g.edges()) {
    if (!allowed(u) || !allowed(v)) continue;
    // Terminals a and b only receive flow.
    if (u != a && u != b) flow.add_arc(out(u), in(v), 1, 0);
    if (v != a && v != b) flow.add_arc(out(v), in(u), 1, 0);
  }
  flow.add_arc(out(a), sink, 1, 0);
  flow.add_arc(out(b), sink, 1, 0);
  if (flow.run(in(x), sink, 2) < 2) return std::nullopt;
  std::pair<Path, Path> result;
  for (int which = 0; which < 2; ++which) {
    Path p{x};
    Vertex cur = x;
    while (cur != a && cur != b) {
      Vertex next = -1;
      for (auto& arc : flow.arcs(out(cur))) {
        if (arc.orig_cap > 0 && arc.flow() > 0 && arc.to != sink) {
          next = arc.to / 2;
          --arc.orig_cap;  // consume this unit
          break;
        }
      }
      if (next < 0) return std::nullopt;
      p.push_back(next);
      cur = next;
    }
    (cur == a ? result.first : result.second) = std::move(p);
  }
  if (result.first.empty() || result.second.empty()) return std::nullopt;
  return result;
}

std::optional<Cycle> heuristic_hitting_cycle(const Graph& g, const Bramble& b, int restarts) {
  const int n = g.num_vertices();
  std::vector<int> richness(n, 0);
  for (const auto& e : b.elements)
    for (Vertex v : e) ++richness[v];
  std::vector<Vertex> starts(n);
  for (Vertex v = 0; v < n; ++v) starts[v] = v;
  std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex c) { return richness[a] > richness[c]; });

  for (int attempt = 0; attempt < restarts && attempt < n; ++attempt) {
    Cycle cycle = shortest_cycle_through(g, starts[attempt]);
    if (cycle.empty()) continue;
    HitTracker tracker(g, b);
    std::vector<char> on(n, 0);
    for (Vertex v : cycle) {
      tracker.add(v);
      on[v] = 1;
    }
    bool improved = true;
    while (!tracker.all() && improved) {
      improved = false;
      for (std::size_t e = 0; e < b.size() && !improved; ++e) {
        if (tracker.element_hit(static_cast<int>(e))) continue;
        for (Vertex x : b.elements[e]) {
          if (on[x]) continue;
          const int len = static_cast<int>(cycle.size());
          // Replace the arc cycle[i] .. cycle[i+d] by a detour through x.
          for (int d = 1; d <= std::min(3, len - 1) && !improved; ++d) {
            for (int i = 0; i < len && !improved; ++i) {
              Vertex a = cycle[i];
              Vertex c = cycle[(i + d) % len];
              std::vector<char> usable(n, 0);
              for (Vertex v = 0; v < n; ++v) usable[v] = !on[v];
              for (int j = 1; j < d; ++j) usable[cycle[(i + j) % len]] = 1;
              auto fan = fan_to_pair(g, x, a, c, usable);
              if (!fan) continue;
              Cycle next;
              // Walk from c around the kept part of the cycle back to a.
              for (int j = 0; j <= len - d; ++j) next.push_back(cycle[(i + d + j) % len]);
              // next ends at a; add detour a -> ... -> x -> ... -> c (c excluded).
              const Path& to_a = fan->first;
              const Path& to_c = fan->second;
              for (auto it = to_a.rbegin() + 1; it != to_a.rend(); ++it) next.push_back(*it);
              for (std::size_t k = 1; k + 1 < to_c.size(); ++k) next.push_back(to_c[k]);
              if (!is_cycle(g, next)) continue;
              HitTracker trial(g, b);
              for (Vertex v : next) trial.add(v);
              if (trial.hit() <= tracker.hit()) continue;
              for (Vertex v : cycle) {
                tracker.remove(v);
                on[v] = 0;
              }
              cycle = std::move(next);
              for (Vertex v : cycle) {
                tracker.add(v);
                on[v] = 1;
              }
              improved = true;
            }
          }
          if (improved) break;
        }
      }
    }
    if (tracker.all()) return cycle;
  }
  return std::nullopt;
}

bool hits_all(const Bramble& b, const Cycle& c) { return is_hitting_set(b, make_vertex_set(c)); }

}  // namespace

Cycle hitting_cycle(const Graph& g, const Bramble& b, HittingCycleOptions options) {
  if (!order_at_least_three(g, b)) throw PreconditionError("hitting_cycle requires a bramble of order >= 3");
  const bool small = g.num_vertices() <= options.exhaustive_max_vertices;
  std::optional<Cycle> c;
  if (small) c = exhaustive_hitting_cycle(g, b, options.exhaustive_step_budget);
  if (!c) c = heuristic_hitting_cycle(g, b, options.heuristic_restarts);
  if (!c && !small) c = exhaustive_hitting_cycle(g, b, options.exhaustive_step_budget);
  if (!c) throw BudgetExhausted("hitting_cycle: no cycle meeting every element found within budget");
  if (!is_cycle(g, *c) || !hits_all(b, *c)) throw std::logic_error("hitting_cycle produced an invalid cycle");
  return *c;
}

LinkageResult disjoint_paths(const Graph& g, const VertexSet& s, const VertexSet& t, int k, bool minimize_length) {
  const int n = g.num_vertices();
  MinCostFlow flow(2 * n + 2);
  const int source = 2 * n, sink = 2 * n + 1;
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  // Unit vertex costs make the flow minimise total path vertices; without
  // minimisation the same network still yields a maximum linkage.
  const int vertex_cost = minimize_length ? 1 : 0;
  for (Vertex v = 0; v < n; ++v) flow.add_arc(in(v), out(v), 1, vertex_cost);
  // Edge arcs are uncuttable so that every minimum cut is a vertex cut.
  const int wide = std::max(n, 1);
  for (auto [u, v] : g.edges()) {
    flow.add_arc(out(u), in(v), wide, 0);
    flow.add_arc(out(v), in(u), wide, 0);
  }
  for (Vertex v : s) flow.add_arc(source, in(v), 1, 0);
  for (Vertex v : t) flow.add_arc(out(v), sink, 1, 0);

  LinkageResult result;
  const int pushed = flow.run(source, sink, std::max(k, 0));
  if (pushed < k) {
    auto reach = flow.residual_reachable(source);
    // Saturated source, vertex and sink arcs each stand for one vertex.
    VertexSet cut;
    for (Vertex v = 0; v < n; ++v) {
      const bool from_source = contains(s, v) && !reach[in(v)];
      const bool through = reach[in(v)] && !reach[out(v)];
      const bool to_sink = contains(t, v) && reach[out(v)] && !reach[sink];
      if (from_source || through || to_sink) cut.push_back(v);
    }
    result.cut = std::move(cut);
    return result;
  }
  std::vector<Path> paths;
  for (auto& arc : flow.arcs(source)) {
    if (arc.orig_cap == 0 || arc.flow() == 0) continue;
    Path p;
    Vertex cur = arc.to / 2;
    p.push_back(cur);
    for (;;) {
      int next_node = -1;
      for (auto& a : flow.arcs(out(cur))) {
        if (a.orig_cap > 0 && a.flow() > 0) {
          next_node = a.to;
          --a.orig_cap;
          break;
        }
      }
      if (next_node == sink || next_node < 0) break;
      cur = next_node / 2;
      p.push_back(cur);
    }
    // Keep only the part after the last S vertex and up to the first T vertex.
    std::size_t first = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (contains(s, p[i])) first = i;
    }
    std::size_t last = p.size() - 1;
    for (std::size_t i = first; i < p.size(); ++i) {
      if (contains(t, p[i])) {
        last = i;
        break;
      }
    }
    paths.emplace_back(p.begin() + static_cast<long>(first), p.begin() + static_cast<long>(last) + 1);
  }
  std::sort(paths.begin(), paths.end());
  result.paths = std::move(paths);
  return result;
}

int max_linkage_size(const Graph& g, const VertexSet& s, const VertexSet& t) {
  auto r = disjoint_paths(g, s, t, g.num_vertices() + 1, false);
  return static_cast<int>(r.cut->size());
}

bool separates(const Graph& g, const VertexSet& s, const VertexSet& t, const VertexSet& cut) {
  std::vector<char> blocked(g.num_vertices(), 0), seen(g.num_vertices(), 0);
  for (Vertex v : cut) blocked[v] = 1;
  std::vector<Vertex> stack;
  for (Vertex v : s) {
    if (!blocked[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    if (contains(t, u)) return false;
    for (Vertex w : g.neighbors(u)) {
      if (!blocked[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

PathSystemCheck verify_path_system(const Graph& g, const PathSystem& ps) {
  auto fail = [](std::string why) { return PathSystemCheck{false, std::move(why)}; };
  if (!is_path(g, ps.p1) || !is_path(g, ps.p2)) return fail("p1/p2 are not paths");
  VertexSet v1 = make_vertex_set(ps.p1), v2 = make_vertex_set(ps.p2);
  if (intersects(v1, v2)) return fail("p1 and p2 intersect");
  if (static_cast<int>(ps.links.size()) != ps.t) return fail("link count differs from t");
  std::vector<char> used(g.num_vertices(), 0);
  for (std::size_t i = 0; i < ps.links.size(); ++i) {
    const Path& q = ps.links[i];
    if (!is_path(g, q) || q.size() < 2) return fail("link " + std::to_string(i) + " is not a path");
    if (!contains(v1, q.front()) || !contains(v2, q.back())) return fail("link " + std::to_string(i) + " does not join p1 to p2");
    for (std::size_t j = 1; j + 1 < q.size(); ++j) {
      if (contains(v1, q[j]) || contains(v2, q[j])) return fail("link " + std::to_string(i) + " is not internally disjoint");
    }
    for (Vertex v : q) {
      if (used[v]) return fail("links " + std::to_string(i) + " overlaps another link");
      used[v] = 1;
    }
  }
  return {};
}

PathSystem path_partition_on_cycle(const Graph& g, const Bramble& b, const Cycle& cycle, int t) {
  if (t < 1) throw PreconditionError("path_partition needs t >= 1");
  if (!is_cycle(g, cycle)) throw PreconditionError("path_partition: not a cycle");
  // Start at the smallest vertex, heading towards its smaller cycle neighbour.
  const std::size_t len = cycle.size();
  std::size_t start = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
  Vertex fwd = cycle[(start + 1) % len], bwd = cycle[(start + len - 1) % len];
  Path walk;
  for (std::size_t i = 0; i < len; ++i) {
    walk.push_back(fwd < bwd ? cycle[(start + i) % len] : cycle[(start + len - i) % len]);
  }

  auto grow = [&](std::size_t from, BrambleOrder& witness) -> Path {
    Path p;
    for (std::size_t i = from; i < walk.size(); ++i) {
      p.push_back(walk[i]);
      witness = bramble_order(g, subbramble_touching(b, make_vertex_set(p)));
      if (witness.order >= t) return p;
    }
    throw PreconditionError("path_partition: cycle does not carry order " + std::to_string(t));
  };
  PathSystem ps;
  ps.t = t;
  ps.p1 = grow(0, ps.p1_witness);
  ps.p2 = grow(ps.p1.size(), ps.p2_witness);

  auto linkage = disjoint_paths(g, make_vertex_set(ps.p1), make_vertex_set(ps.p2), t, true);
  if (!linkage.paths) {
    throw std::logic_error("path_partition: fewer than t disjoint paths between subpaths of order t");
  }
  ps.links = std::move(*linkage.paths);
  if (auto check = verify_path_system(g, ps); !check) throw std::logic_error("path_partition: " + check.reason);
  return ps;
}

PathSystem path_partition(const Graph& g, const Bramble& b, int t, HittingCycleOptions options) {
  if (t < 1) throw PreconditionError("path_partition needs t >= 1");
  if (!verify_bramble(g, b)) throw PreconditionError("path_partition: input is not a bramble");
  if (bramble_order(g, b).order < 2 * t + 1) throw PreconditionError("path_partition requires ord(b) >= 2t+1");
  return path_partition_on_cycle(g, b, hitting_cycle(g, b, options), t);
}

}  // namespace cycleminor
