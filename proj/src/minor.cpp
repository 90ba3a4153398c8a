#include "cycleminor/minor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

namespace cycleminor {

std::string to_string(MinorViolation::Kind kind) {
  switch (kind) {
    case MinorViolation::Kind::WrongArity: return "wrong_arity";
    case MinorViolation::Kind::InvalidVertex: return "invalid_vertex";
    case MinorViolation::Kind::Empty: return "empty_branch_set";
    case MinorViolation::Kind::Overlap: return "overlap";
    case MinorViolation::Kind::Disconnected: return "disconnected";
    case MinorViolation::Kind::MissingEdge: return "missing_edge";
  }
  return "unknown";
}

MinorCheck verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model) {
  MinorCheck check;
  auto report = [&](MinorViolation::Kind k, std::vector<Vertex> who) {
    check.violations.push_back({k, std::move(who)});
  };
  if (static_cast<int>(model.branch_sets.size()) != pattern.num_vertices()) {
    report(MinorViolation::Kind::WrongArity, {});
    return check;
  }
  std::vector<int> owner(host.num_vertices(), -1);
  for (Vertex p = 0; p < pattern.num_vertices(); ++p) {
    const auto& bs = model.branch_sets[p];
    if (bs.empty()) {
      report(MinorViolation::Kind::Empty, {p});
      continue;
    }
    bool valid = std::is_sorted(bs.begin(), bs.end()) &&
                 std::adjacent_find(bs.begin(), bs.end()) == bs.end();
    for (Vertex v : bs) valid = valid && host.has_vertex(v);
    if (!valid) {
      report(MinorViolation::Kind::InvalidVertex, {p});
      continue;
    }
    for (Vertex v : bs) {
      if (owner[v] >= 0) {
        report(MinorViolation::Kind::Overlap, {owner[v], p});
      } else {
        owner[v] = p;
      }
    }
    if (!is_connected_subset(host, bs)) report(MinorViolation::Kind::Disconnected, {p});
  }
  if (!check.ok()) return check;
  for (auto [a, b] : pattern.edges()) {
    bool realised = false;
    for (Vertex v : model.branch_sets[a]) {
      for (Vertex w : host.neighbors(v)) {
        if (owner[w] == b) {
          realised = true;
          break;
        }
      }
      if (realised) break;
    }
    if (!realised) report(MinorViolation::Kind::MissingEdge, {a, b});
  }
  return check;
}

namespace {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

int cycle_rank(const Graph& g) {
  return g.num_edges() - g.num_vertices() + static_cast<int>(connected_components(g).size());
}

struct ComponentStats {
  int vertices = 0;
  int edges = 0;
  int rank = 0;
};

std::vector<ComponentStats> component_stats(const Graph& g) {
  std::vector<ComponentStats> out;
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    out.push_back({sub.graph.num_vertices(), sub.graph.num_edges(), cycle_rank(sub.graph)});
  }
  return out;
}

// Every pattern component must land inside a single host component, so the
// pattern components must be packable into host components by size.
bool components_packable(std::vector<ComponentStats> pat, std::vector<ComponentStats> host) {
  std::sort(pat.begin(), pat.end(), [](auto& a, auto& b) { return a.vertices > b.vertices; });
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == pat.size()) return true;
    for (auto& h : host) {
      if (h.vertices >= pat[i].vertices && h.edges >= pat[i].edges && h.rank >= pat[i].rank) {
        h.vertices -= pat[i].vertices;
        h.edges -= pat[i].edges;
        h.rank -= pat[i].rank;
        bool ok = place(i + 1);
        h.vertices += pat[i].vertices;
        h.edges += pat[i].edges;
        h.rank += pat[i].rank;
        if (ok) return true;
      }
    }
    return false;
  };
  return place(0);
}

bool necessary_conditions(const Graph& host, const Graph& pattern) {
  if (pattern.num_vertices() > host.num_vertices()) return false;
  if (pattern.num_edges() > host.num_edges()) return false;
  if (cycle_rank(pattern) > cycle_rank(host)) return false;
  // Minors of graphs with maximum degree <= 2 are unions of paths and cycles.
  if (pattern.max_degree() >= 3 && host.max_degree() < 3) return false;
  return components_packable(component_stats(pattern), component_stats(host));
}

class BranchSetSearch {
 public:
  BranchSetSearch(const Graph& host, const Graph& pattern)
      : n_(host.num_vertices()), adj_(host.adjacency_masks()), pattern_(pattern) {
    order_pattern();
    sets_.assign(pattern.num_vertices(), 0);
  }

  std::optional<MinorModel> run() {
    Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    if (!assign(0, all)) return std::nullopt;
    MinorModel model;
    model.branch_sets.resize(pattern_.num_vertices());
    for (Vertex p = 0; p < pattern_.num_vertices(); ++p) {
      for (int v = 0; v < n_; ++v) {
        if (sets_[p] & bit(v)) model.branch_sets[p].push_back(v);
      }
    }
    return model;
  }

 private:
  void order_pattern() {
    auto comps = connected_components(pattern_);
    std::stable_sort(comps.begin(), comps.end(), [](auto& a, auto& b) { return a.size() > b.size(); });
    std::vector<int> pos(pattern_.num_vertices(), -1);
    for (const auto& comp : comps) {
      Vertex root = *std::max_element(comp.begin(), comp.end(), [&](Vertex a, Vertex b) {
        return pattern_.degree(a) < pattern_.degree(b);
      });
      std::vector<Vertex> queue{root};
      pos[root] = static_cast<int>(order_.size());
      order_.push_back(root);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Vertex w : pattern_.neighbors(queue[i])) {
          if (pos[w] < 0) {
            pos[w] = static_cast<int>(order_.size());
            order_.push_back(w);
            queue.push_back(w);
          }
        }
      }
    }
    earlier_.resize(order_.size());
    has_later_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Vertex w : pattern_.neighbors(order_[i])) {
        if (pos[w] < static_cast<int>(i)) earlier_[i].push_back(w); else has_later_[i] = true;
      }
    }
    pos_ = std::move(pos);
  }

  Mask neighborhood(Mask s) const {
    Mask out = 0;
    for (Mask t = s; t; t &= t - 1) out |= adj_[std::countr_zero(t)];
    return out & ~s;
  }

  // Connected subsets of `allowed` containing `anchor`, of size <= cap.
  void enumerate_connected(Mask set, Mask cand, Mask excluded, Mask allowed, int cap,
                           std::vector<Mask>& out) const {
    out.push_back(set);
    if (std::popcount(set) >= cap) return;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      Mask next = set | bit(w);
      Mask next_cand = (cand | adj_[w]) & allowed & ~next & ~excluded;
      enumerate_connected(next, next_cand, excluded, allowed, cap, out);
      excluded |= bit(w);
    }
  }

  bool assign(std::size_t idx, Mask free) {
    if (idx == order_.size()) return true;
    const int remaining_after = static_cast<int>(order_.size() - idx - 1);
    const int cap = std::popcount(free) - remaining_after;
    if (cap < 1) return false;
    const Vertex u = order_[idx];

    Mask anchors = free;
    if (!earlier_[idx].empty()) anchors = neighborhood(sets_[earlier_[idx].front()]) & free;
    // Isolated pattern vertices only ever need a single host vertex.
    const int size_cap = pattern_.degree(u) == 0 ? 1 : cap;

    std::vector<Mask> candidates;
    Mask excluded = 0;
    for (Mask a = anchors; a; a &= a - 1) {
      int v = std::countr_zero(a);
      Mask allowed = free & ~excluded;
      enumerate_connected(bit(v), adj_[v] & allowed & ~bit(v), excluded, allowed, size_cap, candidates);
      excluded |= bit(v);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

    for (Mask s : candidates) {
      Mask nb = neighborhood(s);
      bool ok = true;
      for (std::size_t k = 1; k < earlier_[idx].size() && ok; ++k) ok = (nb & sets_[earlier_[idx][k]]) != 0;
      if (!ok) continue;
      Mask rest = free & ~s;
      if (has_later_[idx] && !(nb & rest)) continue;
      sets_[u] = s;
      if (frontier_alive(idx, rest) && assign(idx + 1, rest)) return true;
    }
    sets_[u] = 0;
    return false;
  }

  // Every placed pattern vertex with unplaced neighbours still needs room.
  bool frontier_alive(std::size_t idx, Mask rest) const {
    for (std::size_t i = 0; i <= idx; ++i) {
      Vertex p = order_[i];
      bool pending = false;
      for (Vertex w : pattern_.neighbors(p)) pending = pending || pos_[w] > static_cast<int>(idx);
      if (pending && !(neighborhood(sets_[p]) & rest)) return false;
    }
    return true;
  }

  int n_;
  std::vector<Mask> adj_;
  const Graph& pattern_;
  std::vector<Vertex> order_;
  std::vector<int> pos_;
  std::vector<std::vector<Vertex>> earlier_;
  std::vector<bool> has_later_;
  std::vector<Mask> sets_;
};

}  // namespace

std::optional<MinorModel> find_minor_brute(const Graph& host, const Graph& pattern, MinorSearchOptions options) {
  const int limit = std::min(options.max_host_vertices, 64);
  if (host.num_vertices() > limit) {
    throw GuardExceeded("find_minor_brute: host has " + std::to_string(host.num_vertices()) +
                        " vertices, guard is " + std::to_string(limit));
  }
  if (pattern.num_vertices() == 0) return MinorModel{};
  if (!necessary_conditions(host, pattern)) return std::nullopt;
  auto model = BranchSetSearch(host, pattern).run();
  if (model && !verify_minor_model(host, pattern, *model)) {
    throw std::logic_error("find_minor_brute produced an invalid model");
  }
  return model;
}

Graph cycle_union_pattern(const std::vector<int>& lengths) {
  int total = std::accumulate(lengths.begin(), lengths.end(), 0);
  Graph g(total);
  int base = 0;
  for (int len : lengths) {
    if (len < 3) throw GraphError("pattern cycles need length >= 3");
    for (int i = 0; i < len; ++i) g.add_edge(base + i, base + (i + 1) % len);
    base += len;
  }
  return g;
}

MinorModel model_from_cycles(const std::vector<Cycle>& cycles, const std::vector<int>& lengths) {
  if (cycles.size() != lengths.size()) throw PreconditionError("one host cycle per pattern cycle required");
  MinorModel model;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& c = cycles[i];
    const int len = lengths[i];
    if (static_cast<int>(c.size()) < len) throw PreconditionError("host cycle shorter than pattern cycle");
    // First len-1 pattern vertices get single host vertices, the last one
    // absorbs the remaining arc.
    for (int j = 0; j < len - 1; ++j) model.branch_sets.push_back({c[j]});
    model.branch_sets.push_back(make_vertex_set(Cycle(c.begin() + len - 1, c.end())));
  }
  return model;
}

}  // namespace cycleminor
