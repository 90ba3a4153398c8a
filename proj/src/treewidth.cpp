#include "cycleminor/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace cycleminor {

namespace {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

class EliminationSearch {
 public:
  explicit EliminationSearch(const Graph& g) : n_(g.num_vertices()), adj_(g.adjacency_masks()) {
    all_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
  }

  // Number of vertices outside eliminated ∪ {v} reachable from v through
  // eliminated vertices: v's degree at the moment it is eliminated.
  int eliminated_degree(Mask eliminated, int v) const {
    Mask comp = bit(v);
    Mask nb = adj_[v];
    for (;;) {
      Mask grow = nb & eliminated & ~comp;
      if (!grow) break;
      comp |= grow;
      for (Mask t = grow; t; t &= t - 1) nb |= adj_[std::countr_zero(t)];
    }
    return std::popcount(nb & ~comp & ~eliminated);
  }

  // Elimination ordering of width <= k, if any. Explores eliminated sets
  // reachable through steps of degree <= k.
  std::optional<std::vector<Vertex>> decide(int k) const {
    std::unordered_map<Mask, int> parent;  // set -> last eliminated vertex
    std::vector<Mask> layer{0};
    parent[0] = -1;
    for (int depth = 0; depth < n_; ++depth) {
      std::vector<Mask> next;
      for (Mask s : layer) {
        // Once at most k+1 vertices remain, any order of them has width <= k.
        if (n_ - std::popcount(s) <= k + 1) return finish(parent, s);
        for (Mask rest = all_ & ~s; rest; rest &= rest - 1) {
          int v = std::countr_zero(rest);
          Mask t = s | bit(v);
          if (parent.contains(t)) continue;
          if (eliminated_degree(s, v) > k) continue;
          parent[t] = v;
          next.push_back(t);
        }
      }
      if (next.empty()) return std::nullopt;
      layer = std::move(next);
    }
    return finish(parent, all_);
  }

  int min_degree_width(std::vector<Vertex>* order) const {
    Mask s = 0;
    int width = 0;
    order->clear();
    for (int step = 0; step < n_; ++step) {
      int best = -1, best_deg = 0;
      for (Mask rest = all_ & ~s; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        int d = eliminated_degree(s, v);
        if (best < 0 || d < best_deg) {
          best = v;
          best_deg = d;
        }
      }
      width = std::max(width, best_deg);
      order->push_back(best);
      s |= bit(best);
    }
    return width;
  }

 private:
  std::vector<Vertex> finish(const std::unordered_map<Mask, int>& parent, Mask s) const {
    std::vector<Vertex> order;
    for (Mask t = s; t;) {
      int v = parent.at(t);
      order.push_back(v);
      t &= ~bit(v);
    }
    std::reverse(order.begin(), order.end());
    for (Mask rest = all_ & ~s; rest; rest &= rest - 1) order.push_back(std::countr_zero(rest));
    return order;
  }

  int n_;
  std::vector<Mask> adj_;
  Mask all_;
};

}  // namespace

int TreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& b : bags) largest = std::max(largest, b.size());
  return std::max(0, static_cast<int>(largest) - 1);
}

TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.num_vertices();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  std::vector<std::vector<char>> filled(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) filled[u][v] = filled[v][u] = 1;
  td.bags.resize(n);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex w = 0; w < n; ++w) {
      if (filled[v][w] && pos[w] > i) later.push_back(w);
    }
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b) filled[later[a]][later[b]] = filled[later[b]][later[a]] = 1;
    VertexSet bag = later;
    bag.push_back(v);
    td.bags[i] = make_vertex_set(std::move(bag));
    if (later.empty()) {
      roots.push_back(i);
    } else {
      int parent = pos[*std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; })];
      td.tree_edges.emplace_back(i, parent);
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.tree_edges.emplace_back(roots[r - 1], roots[r]);
  return td;
}

TreewidthResult exact_treewidth(const Graph& g, TreewidthOptions options) {
  const int n = g.num_vertices();
  const int limit = std::min(options.max_vertices, 64);
  if (n > limit) {
    throw GuardExceeded("exact_treewidth: " + std::to_string(n) + " vertices exceed guard " + std::to_string(limit));
  }
  TreewidthResult result;
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    EliminationSearch search(sub.graph);
    std::vector<Vertex> greedy;
    int upper = search.min_degree_width(&greedy);
    std::vector<Vertex> best = greedy;
    int width = upper;
    for (int k = upper - 1; k >= 0; --k) {
      auto order = search.decide(k);
      if (!order) break;
      best = std::move(*order);
      width = k;
    }
    result.width = std::max(result.width, width);
    for (Vertex v : best) result.elimination_order.push_back(sub.original[v]);
  }
  result.decomposition = decomposition_from_ordering(g, result.elimination_order);
  return result;
}

DecompositionCheck verify_tree_decomposition(const Graph& g, const TreeDecomposition& t) {
  auto fail = [](std::string why) { return DecompositionCheck{false, std::move(why)}; };
  const int m = static_cast<int>(t.bags.size());
  if (m == 0) return fail("no bags");
  if (static_cast<int>(t.tree_edges.size()) != m - 1) return fail("tree must have exactly bags-1 edges");
  std::vector<std::vector<int>> tree(m);
  for (auto [a, b] : t.tree_edges) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b) return fail("invalid tree edge");
    tree[a].push_back(b);
    tree[b].push_back(a);
  }
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : tree[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != m) return fail("tree is disconnected");

  std::vector<std::vector<int>> holders(g.num_vertices());
  for (int i = 0; i < m; ++i) {
    for (Vertex v : t.bags[i]) {
      if (!g.has_vertex(v)) return fail("bag contains unknown vertex " + std::to_string(v));
      holders[v].push_back(i);
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (holders[v].empty()) return fail("vertex " + std::to_string(v) + " is in no bag");
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : holders[u]) covered = covered || contains(t.bags[i], v);
    if (!covered) return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<char> in(m, 0);
    for (int i : holders[v]) in[i] = 1;
    std::vector<int> st{holders[v].front()};
    in[st.front()] = 2;
    std::size_t count = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : tree[x]) {
        if (in[y] == 1) {
          in[y] = 2;
          ++count;
          st.push_back(y);
        }
      }
    }
    if (count != holders[v].size()) return fail("bags containing vertex " + std::to_string(v) + " are not connected");
  }
  return {};
}

DualityReport check_duality(const Graph& g, const Bramble& b, TreewidthOptions tw_options,
                            BrambleOrderOptions order_options) {
  if (!verify_bramble(g, b)) throw PreconditionError("check_duality: input is not a bramble");
  DualityReport report;
  auto order = bramble_order(g, b, order_options);
  report.order = order.order;
  report.hitting_set = std::move(order.hitting_set);
  report.treewidth = exact_treewidth(g, tw_options).width;
  report.bound_holds = report.order <= report.treewidth + 1;
  report.tight = report.order == report.treewidth + 1;
  return report;
}

}  // namespace cycleminor
