#include "cycleminor/bramble.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace cycleminor {

namespace {

using Mask = std::uint64_t;

bool touching(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (intersects(a, b)) return true;
  const VertexSet& small = a.size() <= b.size() ? a : b;
  const VertexSet& large = a.size() <= b.size() ? b : a;
  for (Vertex v : small) {
    for (Vertex w : g.neighbors(v)) {
      if (contains(large, w)) return true;
    }
  }
  return false;
}

bool pairwise_disjoint(const Bramble& b) {
  std::vector<Vertex> all;
  for (const auto& e : b.elements) all.insert(all.end(), e.begin(), e.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

// Exact minimum hitting set over at most 64 elements.
class HittingSetSolver {
 public:
  explicit HittingSetSolver(const Bramble& b) : m_(static_cast<int>(b.size())) {
    std::vector<Vertex> verts;
    for (const auto& e : b.elements) verts.insert(verts.end(), e.begin(), e.end());
    verts = make_vertex_set(std::move(verts));
    std::vector<Mask> cover(verts.size(), 0);
    for (int i = 0; i < m_; ++i) {
      for (Vertex v : b.elements[i]) {
        auto idx = std::lower_bound(verts.begin(), verts.end(), v) - verts.begin();
        cover[idx] |= Mask{1} << i;
      }
    }
    // Drop vertices whose element cover is contained in another vertex's.
    for (std::size_t v = 0; v < verts.size(); ++v) {
      bool dominated = false;
      for (std::size_t w = 0; w < verts.size() && !dominated; ++w) {
        if (w == v) continue;
        bool subset = (cover[v] & ~cover[w]) == 0;
        dominated = subset && (cover[v] != cover[w] || w < v);
      }
      if (!dominated && cover[v] != 0) {
        vertex_ids_.push_back(verts[v]);
        cover_.push_back(cover[v]);
      }
    }
    element_vertices_.resize(m_);
    for (std::size_t v = 0; v < cover_.size(); ++v) {
      for (Mask c = cover_[v]; c; c &= c - 1) element_vertices_[std::countr_zero(c)].push_back(static_cast<int>(v));
    }
    for (auto& list : element_vertices_) {
      std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
        return std::popcount(cover_[a]) > std::popcount(cover_[b]);
      });
    }
    disjoint_from_.assign(m_, 0);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        bool share = false;
        for (int v : element_vertices_[i]) share = share || ((cover_[v] >> j) & 1);
        if (!share) disjoint_from_[i] |= Mask{1} << j;
      }
    }
  }

  BrambleOrder solve() {
    Mask all = m_ == 64 ? ~Mask{0} : (Mask{1} << m_) - 1;
    BrambleOrder out;
    out.order = search(all, m_ + 1);
    for (Mask u = all; u;) {
      const auto& entry = memo_.at(u);
      out.hitting_set.push_back(vertex_ids_[entry.choice]);
      u &= ~cover_[entry.choice];
    }
    out.hitting_set = make_vertex_set(std::move(out.hitting_set));
    return out;
  }

 private:
  struct Entry {
    int value;
    bool exact;
    int choice;
  };

  int packing_bound(Mask u) const {
    int count = 0;
    while (u) {
      int best = -1;
      for (Mask t = u; t; t &= t - 1) {
        int e = std::countr_zero(t);
        if (best < 0 || element_vertices_[e].size() < element_vertices_[best].size()) best = e;
      }
      ++count;
      u &= disjoint_from_[best] & ~(Mask{1} << best);
    }
    return count;
  }

  // Returns the minimum if it is below `limit`, otherwise a lower bound >= limit.
  int search(Mask u, int limit) {
    if (u == 0) return 0;
    auto it = memo_.find(u);
    int lb = 0;
    if (it != memo_.end()) {
      if (it->second.exact || it->second.value >= limit) return it->second.value;
      lb = it->second.value;
    }
    lb = std::max(lb, packing_bound(u));
    if (lb >= limit) {
      memo_[u] = {lb, false, -1};
      return lb;
    }
    int pick = -1;
    for (Mask t = u; t; t &= t - 1) {
      int e = std::countr_zero(t);
      if (pick < 0 || element_vertices_[e].size() < element_vertices_[pick].size()) pick = e;
    }
    int best = limit;
    int choice = -1;
    for (int v : element_vertices_[pick]) {
      int r = 1 + search(u & ~cover_[v], best - 1);
      if (r < best) {
        best = r;
        choice = v;
        if (best == lb) break;
      }
    }
    if (choice >= 0) {
      memo_[u] = {best, true, choice};
    } else {
      memo_[u] = {std::max(lb, limit), false, -1};
    }
    return best;
  }

  int m_;
  std::vector<Vertex> vertex_ids_;
  std::vector<Mask> cover_;
  std::vector<std::vector<int>> element_vertices_;
  std::vector<Mask> disjoint_from_;
  std::unordered_map<Mask, Entry> memo_;
};

// Maximum clique by Bron-Kerbosch with pivoting; n <= 64.
VertexSet maximum_clique(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return {};
  if (n > 64) {
    // Greedy: repeatedly add the candidate of largest degree.
    VertexSet clique;
    std::vector<Vertex> cand(n);
    for (Vertex v = 0; v < n; ++v) cand[v] = v;
    while (!cand.empty()) {
      Vertex best = *std::max_element(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a > b);
      });
      clique.push_back(best);
      std::vector<Vertex> next;
      for (Vertex w : cand) {
        if (g.has_edge(best, w)) next.push_back(w);
      }
      cand = std::move(next);
    }
    return make_vertex_set(clique);
  }
  auto adj = g.adjacency_masks();
  Mask best = 0;
  std::function<void(Mask, Mask, Mask)> bk = [&](Mask r, Mask p, Mask x) {
    if (!p && !x) {
      if (std::popcount(r) > std::popcount(best)) best = r;
      return;
    }
    if (std::popcount(r) + std::popcount(p) <= std::popcount(best)) return;
    int pivot = std::countr_zero(p | x);
    for (Mask c = p & ~adj[pivot]; c; c &= c - 1) {
      int v = std::countr_zero(c);
      bk(r | (Mask{1} << v), p & adj[v], x & adj[v]);
      p &= ~(Mask{1} << v);
      x |= Mask{1} << v;
    }
  };
  Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  bk(0, all, 0);
  VertexSet out;
  for (Mask t = best; t; t &= t - 1) out.push_back(std::countr_zero(t));
  return out;
}

// Branch sets of a clique minor obtained by greedy min-degree contraction.
Bramble clique_minor_bramble(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexSet> branch(n);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<char> alive(n, 1);
  for (Vertex v = 0; v < n; ++v) branch[v] = {v};
  Bramble best;
  int remaining = n;
  auto degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w = 0; w < n; ++w) d += alive[w] && adj[v][w];
    return d;
  };
  while (remaining > 0) {
    Graph contracted(remaining);
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v]) ids.push_back(v);
    }
    for (int i = 0; i < remaining; ++i)
      for (int j = i + 1; j < remaining; ++j)
        if (adj[ids[i]][ids[j]]) contracted.add_edge(i, j);
    auto clique = maximum_clique(contracted);
    if (clique.size() > best.size()) {
      best.elements.clear();
      for (Vertex c : clique) best.elements.push_back(branch[ids[c]]);
    }
    // Contract a minimum-degree vertex into the neighbour sharing the fewest
    // neighbours with it; isolated vertices are dropped.
    Vertex v = -1;
    for (Vertex w : ids) {
      if (v < 0 || degree(w) < degree(v)) v = w;
    }
    if (v < 0) break;
    Vertex into = -1;
    int best_common = INT_MAX;
    for (Vertex w : ids) {
      if (!adj[v][w]) continue;
      int common = 0;
      for (Vertex x : ids) common += adj[v][x] && adj[w][x];
      if (common < best_common) {
        best_common = common;
        into = w;
      }
    }
    alive[v] = 0;
    --remaining;
    if (into >= 0) {
      branch[into] = set_union(branch[into], branch[v]);
      for (Vertex x = 0; x < n; ++x) {
        if (adj[v][x] && x != into) adj[into][x] = adj[x][into] = 1;
      }
    }
    for (Vertex x = 0; x < n; ++x) adj[v][x] = adj[x][v] = 0;
  }
  return best;
}

std::optional<int> grid_side(const Graph& g) {
  int k = 1;
  while (k * k < g.num_vertices()) ++k;
  if (k * k != g.num_vertices() || k < 2) return std::nullopt;
  if (!(g == grid_graph(k))) return std::nullopt;
  return k;
}

int certified_order(const Graph& g, const Bramble& b) {
  if (b.empty()) return 0;
  try {
    return bramble_order(g, b).order;
  } catch (const GuardExceeded&) {
    return -1;
  }
}

std::vector<VertexSet> connected_sets_up_to(const Graph& g, int max_size) {
  std::vector<VertexSet> out;
  std::function<void(VertexSet&, std::vector<Vertex>, std::vector<char>&)> grow =
      [&](VertexSet& set, std::vector<Vertex> cand, std::vector<char>& excluded) {
        out.push_back(make_vertex_set(set));
        if (static_cast<int>(set.size()) >= max_size) return;
        std::vector<Vertex> marked;
        for (std::size_t i = 0; i < cand.size(); ++i) {
          Vertex w = cand[i];
          std::vector<Vertex> next(cand.begin() + static_cast<long>(i) + 1, cand.end());
          for (Vertex x : g.neighbors(w)) {
            if (!excluded[x] && std::find(set.begin(), set.end(), x) == set.end() &&
                std::find(next.begin(), next.end(), x) == next.end() && x != w) {
              next.push_back(x);
            }
          }
          set.push_back(w);
          grow(set, std::move(next), excluded);
          set.pop_back();
          excluded[w] = 1;
          marked.push_back(w);
        }
        for (Vertex w : marked) excluded[w] = 0;
      };
  std::vector<char> excluded(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    VertexSet set{v};
    std::vector<Vertex> cand;
    for (Vertex w : g.neighbors(v)) {
      if (!excluded[w]) cand.push_back(w);
    }
    grow(set, cand, excluded);
    excluded[v] = 1;
  }
  return out;
}

// Elements containing another element never change the order.
Bramble drop_supersets(const Bramble& b) {
  Bramble out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < b.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = b.elements[j];
      const auto& c = b.elements[i];
      bool subset = std::includes(c.begin(), c.end(), a.begin(), a.end());
      redundant = subset && (a.size() < c.size() || j < i);
    }
    if (!redundant) out.elements.push_back(b.elements[i]);
  }
  return out;
}

}  // namespace

bool verify_bramble(const Graph& g, const Bramble& b) {
  for (const auto& e : b.elements) {
    if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end()) return false;
    if (!is_connected_subset(g, e)) return false;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!touching(g, b.elements[i], b.elements[j])) return false;
    }
  }
  return true;
}

bool is_hitting_set(const Bramble& b, const VertexSet& hs) {
  return std::all_of(b.elements.begin(), b.elements.end(), [&](const VertexSet& e) { return intersects(e, hs); });
}

BrambleOrder bramble_order(const Graph&, const Bramble& b, BrambleOrderOptions options) {
  if (b.empty()) return {};
  for (const auto& e : b.elements) {
    if (e.empty()) throw PreconditionError("bramble element is empty");
  }
  if (pairwise_disjoint(b)) {
    BrambleOrder out;
    out.order = static_cast<int>(b.size());
    for (const auto& e : b.elements) out.hitting_set.push_back(e.front());
    out.hitting_set = make_vertex_set(std::move(out.hitting_set));
    return out;
  }
  Bramble reduced = b.size() > 1 ? drop_supersets(b) : b;
  const std::size_t limit = std::min<std::size_t>(options.max_elements, 64);
  if (reduced.size() > limit) {
    throw GuardExceeded("bramble_order: " + std::to_string(reduced.size()) + " elements exceed guard " +
                        std::to_string(limit));
  }
  return HittingSetSolver(reduced).solve();
}

VertexSet greedy_hitting_set(const Bramble& b) {
  std::vector<char> hit(b.size(), 0);
  std::size_t remaining = b.size();
  VertexSet hs;
  while (remaining > 0) {
    std::unordered_map<Vertex, int> count;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (hit[i]) continue;
      for (Vertex v : b.elements[i]) ++count[v];
    }
    Vertex best = -1;
    int best_count = 0;
    for (auto [v, c] : count) {
      if (c > best_count || (c == best_count && v < best)) {
        best = v;
        best_count = c;
      }
    }
    hs.push_back(best);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!hit[i] && contains(b.elements[i], best)) {
        hit[i] = 1;
        --remaining;
      }
    }
  }
  return make_vertex_set(std::move(hs));
}

Bramble subbramble_touching(const Bramble& b, const VertexSet& x) {
  Bramble out;
  for (const auto& e : b.elements) {
    if (intersects(e, x)) out.elements.push_back(e);
  }
  return out;
}

Bramble restrict_to_remainder(const Bramble& b, const InducedSubgraph& remainder) {
  Bramble out;
  for (const auto& e : b.elements) {
    VertexSet mapped;
    bool keep = true;
    for (Vertex v : e) {
      Vertex nv = v < static_cast<Vertex>(remainder.relabel.size()) ? remainder.relabel[v] : -1;
      if (nv < 0) {
        keep = false;
        break;
      }
      mapped.push_back(nv);
    }
    if (keep) out.elements.push_back(make_vertex_set(std::move(mapped)));
  }
  return out;
}

Bramble grid_cross_bramble(int k) {
  if (k < 2) throw PreconditionError("grid_cross_bramble needs k >= 2");
  Bramble b;
  auto id = [k](int i, int j) { return i * k + j; };
  for (int i = 0; i + 1 < k; ++i) {
    for (int j = 0; j + 1 < k; ++j) {
      std::vector<Vertex> cross;
      for (int c = 0; c + 1 < k; ++c) cross.push_back(id(i, c));
      for (int r = 0; r + 1 < k; ++r) cross.push_back(id(r, j));
      b.elements.push_back(make_vertex_set(std::move(cross)));
    }
  }
  VertexSet bottom, right;
  for (int c = 0; c < k; ++c) bottom.push_back(id(k - 1, c));
  for (int r = 0; r + 1 < k; ++r) right.push_back(id(r, k - 1));
  b.elements.push_back(make_vertex_set(bottom));
  b.elements.push_back(make_vertex_set(right));
  return b;
}

Bramble singleton_bramble(const VertexSet& clique) {
  Bramble b;
  for (Vertex v : clique) b.elements.push_back({v});
  return b;
}

Bramble max_order_small_bramble(const Graph& g, int max_element_size) {
  auto sets = connected_sets_up_to(g, max_element_size);
  const std::size_t m = sets.size();
  std::vector<std::vector<char>> touch(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) touch[i][j] = touch[j][i] = touching(g, sets[i], sets[j]);

  Bramble best;
  int best_order = -1;
  auto consider = [&](const std::vector<std::size_t>& members) {
    Bramble b;
    for (auto i : members) b.elements.push_back(sets[i]);
    int order = certified_order(g, b);
    if (order > best_order) {
      best_order = order;
      best = std::move(b);
    }
  };
  // Bron-Kerbosch over the touching relation; every maximal family is scored.
  std::function<void(std::vector<std::size_t>&, std::vector<std::size_t>, std::vector<std::size_t>)> bk =
      [&](std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          consider(r);
          return;
        }
        std::size_t pivot = p.empty() ? x.front() : p.front();
        std::size_t pivot_deg = 0;
        for (auto cand : p) {
          std::size_t d = 0;
          for (auto w : p) d += touch[cand][w];
          if (d >= pivot_deg) {
            pivot_deg = d;
            pivot = cand;
          }
        }
        std::vector<std::size_t> branch;
        for (auto v : p) {
          if (!touch[pivot][v]) branch.push_back(v);
        }
        for (auto v : branch) {
          std::vector<std::size_t> np, nx;
          for (auto w : p) {
            if (touch[v][w]) np.push_back(w);
          }
          for (auto w : x) {
            if (touch[v][w]) nx.push_back(w);
          }
          r.push_back(v);
          bk(r, std::move(np), std::move(nx));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<std::size_t> r, p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = i;
  bk(r, p, {});
  return best;
}

Bramble greedy_bramble(const Graph& g) {
  if (g.num_vertices() == 0) return {};
  std::vector<Bramble> candidates;
  candidates.push_back(singleton_bramble(maximum_clique(g)));
  if (auto k = grid_side(g)) candidates.push_back(grid_cross_bramble(*k));
  if (g.num_vertices() <= 100) candidates.push_back(clique_minor_bramble(g));
  if (g.num_vertices() <= 10) candidates.push_back(max_order_small_bramble(g, 2));

  Bramble best;
  int best_order = -1;
  for (auto& b : candidates) {
    if (!verify_bramble(g, b)) continue;
    int order = certified_order(g, b);
    if (order > best_order) {
      best_order = order;
      best = std::move(b);
    }
  }
  return best;
}

}  // namespace cycleminor
