#include "cycleminor/extract.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cycleminor {

namespace {

double lg(double x) { return x <= 0.0 ? 0.0 : std::log2(x); }

const double kBFloorRatio = std::pow(2.0, -0.75);
const double kBCapRatio = std::pow(2.0, 0.75);

// Simple cycles by increasing length. Each cycle is produced once, starting
// at its smallest vertex and heading to the smaller of its two neighbours.
class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, long long budget) : g_(g), budget_(budget) {}

  // Calls `visit` on cycles with min_len <= length <= max_len until it
  // returns true. Returns true when `visit` accepted a cycle.
  bool run(int min_len, int max_len, const std::function<bool(const Cycle&)>& visit) {
    const int n = g_.num_vertices();
    min_len = std::max(min_len, 3);
    max_len = std::min(max_len, n);
    dist_.assign(n, {});
    for (int len = min_len; len <= max_len; ++len) {
      for (Vertex s = 0; s < n; ++s) {
        if (exhausted_) return false;
        if (dist_[s].empty()) dist_[s] = distances_above(s);
        path_.assign(1, s);
        on_path_.assign(n, 0);
        on_path_[s] = 1;
        if (dfs(s, len, visit)) return true;
      }
    }
    return false;
  }

  bool exhausted() const { return exhausted_; }

 private:
  std::vector<int> distances_above(Vertex s) const {
    std::vector<int> d(g_.num_vertices(), -1);
    std::deque<Vertex> q{s};
    d[s] = 0;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex w : g_.neighbors(u)) {
        if (w > s && d[w] < 0) {
          d[w] = d[u] + 1;
          q.push_back(w);
        }
      }
    }
    return d;
  }

  bool dfs(Vertex s, int len, const std::function<bool(const Cycle&)>& visit) {
    if (++steps_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const Vertex u = path_.back();
    const int depth = static_cast<int>(path_.size());
    if (depth == len) {
      if (len >= 3 && g_.has_edge(u, s) && path_[1] < u) return visit(path_);
      return false;
    }
    for (Vertex w : g_.neighbors(u)) {
      if (w <= s || on_path_[w]) continue;
      const int d = dist_[s][w];
      if (d < 0 || depth + d > len) continue;
      path_.push_back(w);
      on_path_[w] = 1;
      const bool done = dfs(s, len, visit);
      on_path_[w] = 0;
      path_.pop_back();
      if (done || exhausted_) return done;
    }
    return false;
  }

  const Graph& g_;
  long long budget_;
  long long steps_ = 0;
  bool exhausted_ = false;
  std::vector<std::vector<int>> dist_;
  Path path_;
  std::vector<char> on_path_;
};

// Exact order where the guard allows it, greedy upper bound otherwise.
BrambleOrder order_or_bound(const Graph& g, const Bramble& b, bool& exact) {
  try {
    exact = true;
    return bramble_order(g, b);
  } catch (const GuardExceeded&) {
    exact = false;
    VertexSet hs = greedy_hitting_set(b);
    return BrambleOrder{static_cast<int>(hs.size()), hs};
  }
}

std::vector<int> positions_on(const Path& p, int n) {
  std::vector<int> pos(n, -1);
  for (int i = 0; i < static_cast<int>(p.size()); ++i) pos[p[i]] = i;
  return pos;
}

PathSystem restrict_links(const PathSystem& ps, const std::vector<int>& keep) {
  PathSystem out;
  out.p1 = ps.p1;
  out.p2 = ps.p2;
  for (int i : keep) out.links.push_back(ps.links[i]);
  out.t = static_cast<int>(out.links.size());
  out.p1_witness = ps.p1_witness;
  out.p2_witness = ps.p2_witness;
  return out;
}

PackingConfig packing_config(const ConstantsConfig& cfg, const ExtractOptions& options) {
  PackingConfig pc;
  pc.c_star = cfg.effective_c_star();
  pc.strict = !cfg.relaxed;
  pc.node_budget = options.packing_node_budget;
  return pc;
}

int exact_order(const Graph& g, const Bramble& b) { return bramble_order(g, b).order; }

}  // namespace

int CycleUnionSpec::h() const {
  int s = 0;
  for (int l : lengths) s += l;
  return s;
}

void CycleUnionSpec::validate() const {
  if (lengths.empty()) throw PreconditionError("cycle union spec needs at least one cycle");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 3) throw PreconditionError("cycle lengths must be at least 3");
    if (i > 0 && lengths[i] > lengths[i - 1]) throw PreconditionError("cycle lengths must be sorted descending");
  }
  if (max_length < lengths.front()) throw PreconditionError("declared maximum length is below the longest cycle");
}

CycleUnionSpec CycleUnionSpec::parse(const std::string& text) {
  std::vector<int> lengths;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("invalid cycle length '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw PreconditionError("invalid cycle length '" + item + "'");
    lengths.push_back(v);
  }
  CycleUnionSpec spec;
  spec.lengths = std::move(lengths);
  spec.max_length = spec.longest();
  spec.validate();
  return spec;
}

CycleUnionSpec CycleUnionSpec::from_lengths(std::vector<int> lengths) {
  CycleUnionSpec spec;
  spec.lengths = std::move(lengths);
  spec.max_length = spec.longest();
  spec.validate();
  return spec;
}

CycleUnionSpec CycleUnionSpec::suffix(int first) const {
  CycleUnionSpec out;
  out.lengths.assign(lengths.begin() + first, lengths.end());
  out.max_length = out.longest();
  return out;
}

ConstantsConfig ConstantsConfig::strict_defaults(double c_star) {
  ConstantsConfig cfg;
  cfg.c_star = c_star;
  return cfg;
}

ConstantsConfig ConstantsConfig::relaxed_with(double factor, double c_star) {
  if (!(factor > 0.0)) throw PreconditionError("relaxed factor must be positive");
  ConstantsConfig cfg;
  cfg.c_star = c_star;
  cfg.relaxed = true;
  cfg.relaxed_factor = factor;
  return cfg;
}

double ConstantsConfig::c() const {
  const double base = 68.0 * c_star + 8.0;
  return relaxed ? base * relaxed_factor : base;
}

double ConstantsConfig::case_split(int r) const { return 1.0 + 3.0 * effective_c_star() * r * lg(r); }

int ConstantsConfig::a(int r) const {
  const int v = static_cast<int>(std::floor(c() * r * lg(r) / 4.0));
  return relaxed ? std::max(v, 1) : v;
}

int ConstantsConfig::b_cap(int r, int l1) const {
  return static_cast<int>(std::ceil(kBCapRatio * 3.0 * r / (4.0 * l1)));
}

double ConstantsConfig::linkage_threshold(int k) const { return 2.0 + 3.0 * effective_c_star() * k_log_k(k); }

double ConstantsConfig::order_requirement(const CycleUnionSpec& spec) const {
  const int r = spec.r();
  return 1.0 + c() * spec.h() * lg(r + 1) + c() * r * lg(r) * lg(spec.max_length);
}

Inequality1 evaluate_inequality1(const std::vector<int>& lengths, int max_length, int b, double c) {
  const int r = static_cast<int>(lengths.size());
  if (b < 1 || b > r) throw PreconditionError("inequality (1) needs 1 <= b <= r");
  double sum = 0.0;
  for (int i = 0; i < b; ++i) sum += lengths[i];
  const double next = b < r ? lengths[b] : max_length;
  const double lr = lg(r);
  Inequality1 out;
  out.lhs = c * sum * lr + c * r * lr * lg(max_length) - c * r * lr * lg(next);
  out.rhs = 3.0 * c * r * lr / 4.0;
  return out;
}

int choose_b(const std::vector<int>& lengths, int b_cap) {
  const int r = static_cast<int>(lengths.size());
  const int cap = std::min(b_cap, r);
  const double floor_len = kBFloorRatio * lengths.front();
  int b = 1;
  for (int i = 1; i <= cap; ++i) {
    if (lengths[i - 1] >= floor_len) b = i;
  }
  return b;
}

std::optional<Cycle> find_long_cycle(const Graph& g, int min_length, long long budget) {
  CycleEnumerator en(g, budget);
  std::optional<Cycle> found;
  en.run(min_length, g.num_vertices(), [&](const Cycle& c) {
    found = c;
    return true;
  });
  return found;
}

std::optional<Case1Result> try_case1(const Graph& g, const Bramble& b, const CycleUnionSpec& spec,
                                     const ConstantsConfig& cfg, long long cycle_budget) {
  const int l1 = spec.longest();
  const double budget = cfg.case1_budget(l1);
  std::optional<Case1Result> out;
  CycleEnumerator en(g, cycle_budget);
  en.run(l1, g.num_vertices(), [&](const Cycle& c) {
    Bramble touched = subbramble_touching(b, make_vertex_set(c));
    bool exact = false;
    BrambleOrder ord = order_or_bound(g, touched, exact);
    // V(C) itself hits every touched element.
    if (!exact && ord.order > static_cast<int>(c.size())) ord = BrambleOrder{static_cast<int>(c.size()), make_vertex_set(c)};
    if (static_cast<double>(ord.order) > budget) return false;
    out = Case1Result{c, ord};
    return true;
  });
  return out;
}

std::vector<int> select_spaced_links(const PathSystem& ps, const std::vector<int>& eligible, int spacing,
                                     std::size_t count) {
  std::vector<std::pair<int, int>> by_pos;  // (position on p1, link)
  for (int i : eligible) {
    auto it = std::find(ps.p1.begin(), ps.p1.end(), ps.links[i].front());
    by_pos.emplace_back(static_cast<int>(it - ps.p1.begin()), i);
  }
  std::sort(by_pos.begin(), by_pos.end());
  std::vector<int> picked;
  int last = 0;
  for (const auto& [pos, link] : by_pos) {
    if (picked.size() >= count) break;
    if (picked.empty() || pos - last >= spacing) {
      picked.push_back(link);
      last = pos;
    }
  }
  return picked;
}

Case21Result run_case2_1_on_system(const Graph& g, const Bramble& b, const CycleUnionSpec& spec,
                                   const ConstantsConfig& cfg, const PathSystem& ps, ExtractOptions options) {
  const int l1 = spec.longest();
  Case21Result out;
  out.system = ps;
  for (int i = 0; i < static_cast<int>(ps.links.size()); ++i) {
    (static_cast<int>(ps.links[i].size()) <= l1 ? out.short_links : out.long_links).push_back(i);
  }
  if (static_cast<int>(out.short_links.size()) >= l1) {
    // Outermost short links along p1, closed through p2.
    const int n = g.num_vertices();
    auto pos1 = positions_on(ps.p1, n), pos2 = positions_on(ps.p2, n);
    auto by_p1 = out.short_links;
    std::sort(by_p1.begin(), by_p1.end(),
              [&](int x, int y) { return pos1[ps.links[x].front()] < pos1[ps.links[y].front()]; });
    const Path& qa = ps.links[by_p1.front()];
    const Path& qb = ps.links[by_p1.back()];
    Cycle c;
    for (int i = pos1[qa.front()]; i <= pos1[qb.front()]; ++i) c.push_back(ps.p1[i]);
    for (std::size_t i = 1; i < qb.size(); ++i) c.push_back(qb[i]);
    const int from = pos2[qb.back()], to = pos2[qa.back()];
    const int step = to > from ? 1 : -1;
    for (int i = from + step; i != to + step; i += step) c.push_back(ps.p2[i]);
    for (std::size_t i = qa.size() - 1; i-- > 1;) c.push_back(qa[i]);
    if (!is_cycle(g, c)) throw std::logic_error("run_case2_1: short-link cycle is invalid");
    Case21Diagnostic d;
    d.cycle = c;
    bool exact = false;
    d.order = order_or_bound(g, subbramble_touching(b, make_vertex_set(c)), exact).order;
    d.bound = static_cast<int>(qa.size() + qb.size()) + 2 * ps.t;
    d.budget = static_cast<int>(cfg.case1_budget(l1));
    out.diagnostic = std::move(d);
    return out;
  }
  std::vector<int> chosen = out.long_links;
  if (static_cast<int>(chosen.size()) > l1 + 1) chosen.resize(l1 + 1);
  if (chosen.size() < 2) return out;
  PathSystem sub = restrict_links(ps, chosen);
  PackingConfig pc = packing_config(cfg, options);
  if (pc.strict && static_cast<double>(chosen.size()) < cfg.linkage_threshold(spec.r())) pc.strict = false;
  out.packing = cycles_from_linkage(g, sub, spec.r(), pc);
  for (auto& used : out.packing->links_used) {
    for (int& q : used) q = chosen[q];
  }
  return out;
}

Case21Result run_case2_1(const Graph& g, const Bramble& b, const CycleUnionSpec& spec, const ConstantsConfig& cfg,
                         ExtractOptions options) {
  int t = 2 * spec.longest();
  if (cfg.relaxed) t = std::min(t, (exact_order(g, b) - 1) / 2);
  if (t < 1) throw PreconditionError("run_case2_1: bramble order too small for a path system");
  return run_case2_1_on_system(g, b, spec, cfg, path_partition(g, b, t, options.hitting), options);
}

Case22Result run_case2_2_on_system(const Graph& g, const Bramble& b, const CycleUnionSpec& spec,
                                   const ConstantsConfig& cfg, const PathSystem& ps, ExtractOptions options) {
  const int r = spec.r();
  const int l1 = spec.longest();
  Case22Result out;
  out.system = ps;
  out.a = ps.t;
  std::vector<int> short_links;
  for (int i = 0; i < static_cast<int>(ps.links.size()); ++i) {
    (static_cast<int>(ps.links[i].size()) >= l1 ? out.long_links : short_links).push_back(i);
  }
  const PackingConfig pc = packing_config(cfg, options);

  if (static_cast<double>(out.long_links.size()) >= cfg.linkage_threshold(r) && out.long_links.size() >= 2) {
    auto packing = cycles_from_linkage(g, restrict_links(ps, out.long_links), r, pc);
    if (packing.reached) {
      for (auto& used : packing.links_used) {
        for (int& q : used) q = out.long_links[q];
      }
      packing.cycles.resize(r);
      packing.links_used.resize(r);
      out.packing = std::move(packing);
      out.finished_by_long_links = true;
      out.b = r;
      return out;
    }
  }

  out.b = choose_b(spec.lengths, cfg.b_cap(r, l1));
  out.inequality1 = evaluate_inequality1(spec.lengths, spec.max_length, out.b, cfg.c());
  out.selection_claim_lhs = out.a - cfg.case_split(r);
  out.selection_claim_rhs = l1 * cfg.linkage_threshold(out.b);
  const auto want = static_cast<std::size_t>(std::ceil(cfg.linkage_threshold(out.b)));
  out.selected_links = select_spaced_links(ps, short_links, l1, want);
  if (out.selected_links.size() < want) {
    out.failure = "S selection found " + std::to_string(out.selected_links.size()) + " of " +
                  std::to_string(want) + " spaced short links";
    return out;
  }
  auto packing = cycles_from_linkage(g, restrict_links(ps, out.selected_links), out.b, pc);
  for (auto& used : packing.links_used) {
    for (int& q : used) q = out.selected_links[q];
  }
  if (!packing.reached) {
    out.failure = "linkage through S gave " + std::to_string(packing.cycles.size()) + " of " +
                  std::to_string(out.b) + " cycles";
    out.packing = std::move(packing);
    return out;
  }
  packing.cycles.resize(out.b);
  packing.links_used.resize(out.b);
  for (const Cycle& f : packing.cycles) {
    if (static_cast<int>(f.size()) < l1) {
      out.failure = "a cycle through S is shorter than l1";
      out.packing = std::move(packing);
      return out;
    }
  }
  VertexSet used;
  for (const Cycle& f : packing.cycles) used = set_union(used, make_vertex_set(f));
  out.deleted_order = order_or_bound(g, subbramble_touching(b, used), out.deleted_order_exact).order;
  out.packing = std::move(packing);
  return out;
}

Case22Result run_case2_2(const Graph& g, const Bramble& b, const CycleUnionSpec& spec, const ConstantsConfig& cfg,
                         ExtractOptions options) {
  int t = cfg.a(spec.r());
  if (cfg.relaxed) t = std::min(t, (exact_order(g, b) - 1) / 2);
  if (t < 1) throw PreconditionError("run_case2_2: bramble order too small for a path system");
  return run_case2_2_on_system(g, b, spec, cfg, path_partition(g, b, t, options.hitting), options);
}

namespace {

class Extractor {
 public:
  Extractor(const ConstantsConfig& cfg, const ExtractOptions& options, int components)
      : cycles_(components), cfg_(cfg), options_(options) {}

  // `to_root` maps level vertices to root ids; `first` is the index of the
  // first pattern component still open.
  bool run(const Graph& g, const std::vector<Vertex>& to_root, const Bramble& b, const CycleUnionSpec& spec,
           int first, int level) {
    LevelRecord rec;
    rec.level = level;
    const int r = spec.r();
    const int l1 = spec.longest();
    rec.budgets.emplace_back("r", r);
    rec.budgets.emplace_back("h", spec.h());
    rec.budgets.emplace_back("l1", l1);
    rec.budgets.emplace_back("l", spec.max_length);

    try {
      if (r == 1) return base_case(g, to_root, b, spec, first, std::move(rec));

      rec.budgets.emplace_back("case1_budget", cfg_.case1_budget(l1));
      if (auto c1 = try_case1(g, b, spec, cfg_, options_.case1_cycle_budget)) {
        rec.case_taken = "1";
        rec.budgets.emplace_back("case1_order", c1->touched.order);
        return commit_and_recurse(g, to_root, b, spec, first, level, {c1->cycle}, std::move(rec));
      }

      const double split = cfg_.case_split(r);
      rec.budgets.emplace_back("case_split", split);
      if (l1 >= split) {
        Case21Result res = run_case2_1(g, b, spec, cfg_, options_);
        rec.budgets.emplace_back("t", res.system.t);
        rec.budgets.emplace_back("long_links", static_cast<double>(res.long_links.size()));
        rec.budgets.emplace_back("short_links", static_cast<double>(res.short_links.size()));
        if (res.diagnostic) {
          const auto& d = *res.diagnostic;
          rec.case_taken = "2.1-diagnostic";
          rec.budgets.emplace_back("diagnostic_order", d.order);
          rec.budgets.emplace_back("diagnostic_bound", d.bound);
          rec.budgets.emplace_back("diagnostic_budget", d.budget);
          if (static_cast<int>(d.cycle.size()) >= l1) {
            rec.note = "short-link cycle used as a Case 1 cycle";
            return commit_and_recurse(g, to_root, b, spec, first, level, {d.cycle}, std::move(rec));
          }
          return fail(std::move(rec), "short-link cycle shorter than l1");
        }
        rec.case_taken = "2.1";
        if (!res.packing || !res.packing->reached) {
          return fail(std::move(rec), "long links carry fewer than r disjoint cycles");
        }
        std::vector<Cycle> cs(res.packing->cycles.begin(), res.packing->cycles.begin() + r);
        return commit_and_recurse(g, to_root, b, spec, first, level, cs, std::move(rec));
      }

      Case22Result res = run_case2_2(g, b, spec, cfg_, options_);
      rec.case_taken = "2.2";
      rec.budgets.emplace_back("a", res.a);
      rec.budgets.emplace_back("long_links", static_cast<double>(res.long_links.size()));
      if (res.finished_by_long_links) {
        rec.note = "long links carry r cycles";
        return commit_and_recurse(g, to_root, b, spec, first, level, res.packing->cycles, std::move(rec));
      }
      rec.budgets.emplace_back("b", res.b);
      rec.budgets.emplace_back("b_cap", cfg_.b_cap(r, l1));
      rec.budgets.emplace_back("selection_claim_lhs", res.selection_claim_lhs);
      rec.budgets.emplace_back("selection_claim_rhs", res.selection_claim_rhs);
      rec.budgets.emplace_back("selected_links", static_cast<double>(res.selected_links.size()));
      rec.inequality1 = res.inequality1;
      if (!res.inequality1.holds()) rec.note = "inequality (1) violated";
      if (!res.failure.empty()) return fail(std::move(rec), res.failure);
      rec.budgets.emplace_back("deleted_order", res.deleted_order);
      rec.budgets.emplace_back("deleted_order_exact", res.deleted_order_exact ? 1 : 0);
      rec.budgets.emplace_back("deletion_budget", 3.0 * res.a);
      return commit_and_recurse(g, to_root, b, spec, first, level, res.packing->cycles, std::move(rec));
    } catch (const PreconditionError& e) {
      return fail(std::move(rec), e.what());
    } catch (const BudgetExhausted& e) {
      return fail(std::move(rec), e.what());
    } catch (const GuardExceeded& e) {
      return fail(std::move(rec), e.what());
    }
  }

  ExtractionTrace trace;
  std::string failure;
  std::vector<Cycle> cycles_;

 private:
  bool base_case(const Graph& g, const std::vector<Vertex>& to_root, const Bramble& b, const CycleUnionSpec& spec,
                 int first, LevelRecord rec) {
    rec.case_taken = "base";
    const int l1 = spec.longest();
    std::optional<Cycle> cycle;
    if (!b.empty()) {
      try {
        Cycle c = hitting_cycle(g, b, options_.hitting);
        rec.budgets.emplace_back("hitting_cycle_length", static_cast<double>(c.size()));
        if (static_cast<int>(c.size()) >= l1) cycle = std::move(c);
      } catch (const PreconditionError&) {
        rec.note = "bramble order below 3";
      } catch (const BudgetExhausted&) {
        rec.note = "hitting cycle search exhausted";
      }
    }
    if (!cycle) {
      cycle = find_long_cycle(g, l1, options_.case1_cycle_budget);
      if (cycle) rec.note += rec.note.empty() ? "long cycle fallback" : "; long cycle fallback";
    }
    if (!cycle) return fail(std::move(rec), "no cycle of length >= " + std::to_string(l1));
    commit(to_root, {*cycle}, first, rec);
    trace.levels.push_back(std::move(rec));
    return true;
  }

  void commit(const std::vector<Vertex>& to_root, const std::vector<Cycle>& cs, int first, LevelRecord& rec) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      Cycle mapped;
      for (Vertex v : cs[i]) mapped.push_back(to_root[v]);
      cycles_[first + i] = mapped;
      rec.committed_cycles.push_back(mapped);
      rec.committed_components.push_back(first + static_cast<int>(i));
    }
  }

  bool commit_and_recurse(const Graph& g, const std::vector<Vertex>& to_root, const Bramble& b,
                          const CycleUnionSpec& spec, int first, int level, const std::vector<Cycle>& cs,
                          LevelRecord rec) {
    VertexSet deleted;
    for (const Cycle& c : cs) deleted = set_union(deleted, make_vertex_set(c));
    for (Vertex v : deleted) rec.deleted.push_back(to_root[v]);
    std::sort(rec.deleted.begin(), rec.deleted.end());
    commit(to_root, cs, first, rec);
    trace.levels.push_back(std::move(rec));
    const int done = static_cast<int>(cs.size());
    if (done >= spec.r()) return true;

    InducedSubgraph rest = delete_vertices(g, deleted);
    std::vector<Vertex> next_root(rest.graph.num_vertices());
    for (int v = 0; v < rest.graph.num_vertices(); ++v) next_root[v] = to_root[rest.original[v]];
    Bramble next_b = restrict_to_remainder(b, rest);
    return run(rest.graph, next_root, next_b, spec.suffix(done), first + done, level + 1);
  }

  bool fail(LevelRecord rec, const std::string& why) {
    if (rec.case_taken.empty()) rec.case_taken = "fail";
    rec.note += rec.note.empty() ? why : "; " + why;
    failure = "level " + std::to_string(rec.level) + ": " + why;
    trace.levels.push_back(std::move(rec));
    return false;
  }

  const ConstantsConfig& cfg_;
  const ExtractOptions& options_;
};

}  // namespace

ExtractionResult extract_cycle_union_minor(const Graph& g, const Bramble& b, const CycleUnionSpec& spec,
                                           const ConstantsConfig& cfg, ExtractOptions options) {
  spec.validate();
  if (!verify_bramble(g, b)) throw PreconditionError("extract: input is not a bramble");
  if (!cfg.relaxed) {
    const int ord = bramble_order(g, b).order;
    const double need = cfg.order_requirement(spec);
    if (ord < need) {
      throw PreconditionError("extract: strict mode needs ord(b) >= " + std::to_string(need) + ", got " +
                              std::to_string(ord));
    }
  }

  ExtractionResult out;
  Extractor ex(cfg, options, spec.r());
  std::vector<Vertex> identity(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) identity[v] = v;
  const bool ok = ex.run(g, identity, b, spec, 0, 0);
  out.trace = std::move(ex.trace);
  if (!ok) {
    out.failure = ex.failure;
    return out;
  }

  // Committed cycles must be disjoint across all levels.
  std::vector<char> seen(g.num_vertices(), 0);
  for (const Cycle& c : ex.cycles_) {
    if (!is_cycle(g, c)) throw std::logic_error("extract: committed walk is not a cycle");
    for (Vertex v : c) {
      if (seen[v]) throw std::logic_error("extract: committed cycles overlap");
      seen[v] = 1;
    }
  }
  MinorModel model = model_from_cycles(ex.cycles_, spec.lengths);
  if (!verify_minor_model(g, cycle_union_pattern(spec.lengths), model)) {
    out.failure = "assembled model failed verification";
    return out;
  }
  out.model = std::move(model);
  out.cycles = std::move(ex.cycles_);
  return out;
}

}  // namespace cycleminor
