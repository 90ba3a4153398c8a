#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

namespace cycleminor::detail {

// Successive shortest paths with SPFA; small unit-capacity networks only.
class MinCostFlow {
 public:
  struct Arc {
    int to;
    int cap;
    int cost;
    int rev;
    int orig_cap;

    int flow() const { return orig_cap - cap; }
  };

  explicit MinCostFlow(int nodes) : graph_(nodes) {}

  int add_arc(int from, int to, int cap, int cost) {
    graph_[from].push_back({to, cap, cost, static_cast<int>(graph_[to].size()), cap});
    graph_[to].push_back({from, 0, -cost, static_cast<int>(graph_[from].size()) - 1, 0});
    return static_cast<int>(graph_[from].size()) - 1;
  }

  /// Pushes up to `limit` units; returns the amount pushed.
  int run(int source, int sink, int limit) {
    const int inf = std::numeric_limits<int>::max();
    int flow = 0;
    const int n = static_cast<int>(graph_.size());
    while (flow < limit) {
      std::vector<int> dist(n, inf), prev_node(n, -1), prev_arc(n, -1);
      std::vector<char> queued(n, 0);
      std::deque<int> q{source};
      dist[source] = 0;
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        queued[u] = 0;
        for (int i = 0; i < static_cast<int>(graph_[u].size()); ++i) {
          const Arc& a = graph_[u][i];
          if (a.cap > 0 && dist[u] + a.cost < dist[a.to]) {
            dist[a.to] = dist[u] + a.cost;
            prev_node[a.to] = u;
            prev_arc[a.to] = i;
            if (!queued[a.to]) {
              queued[a.to] = 1;
              q.push_back(a.to);
            }
          }
        }
      }
      if (dist[sink] == inf) break;
      int push = limit - flow;
      for (int v = sink; v != source; v = prev_node[v]) push = std::min(push, graph_[prev_node[v]][prev_arc[v]].cap);
      for (int v = sink; v != source; v = prev_node[v]) {
        Arc& a = graph_[prev_node[v]][prev_arc[v]];
        a.cap -= push;
        graph_[v][a.rev].cap += push;
      }
      flow += push;
    }
    return flow;
  }

  /// Nodes reachable from `source` in the residual network.
  std::vector<char> residual_reachable(int source) const {
    std::vector<char> seen(graph_.size(), 0);
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const Arc& a : graph_[u]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

  const std::vector<Arc>& arcs(int node) const { return graph_[node]; }
  std::vector<Arc>& arcs(int node) { return graph_[node]; }

 private:
  std::vector<std::vector<Arc>> graph_;
};

}  // namespace cycleminor::detail
