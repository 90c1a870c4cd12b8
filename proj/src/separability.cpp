#include "envymin/separability.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace envymin {

bool splits(const Allocation& alloc, const std::vector<int>& comp_a,
            const std::vector<int>& comp_b) {
  if (comp_a.empty() || comp_b.empty()) throw input_error("splits needs non-empty components");
  std::set<int> seen(comp_a.begin(), comp_a.end());
  for (int v : comp_b)
    if (seen.count(v)) throw input_error("splits needs disjoint components");
  int lo = alloc[comp_a.front()], hi = lo;
  for (int v : comp_a) {
    lo = std::min(lo, alloc[v]);
    hi = std::max(hi, alloc[v]);
  }
  for (int v : comp_b)
    if (lo < alloc[v] && alloc[v] < hi) return false;
  return true;
}

namespace {

struct Span {
  int lo, hi, size;
};

std::vector<Span> component_spans(const Allocation& alloc, const std::vector<Component>& comps) {
  std::vector<Span> spans;
  spans.reserve(comps.size());
  for (const auto& c : comps) {
    Span s{alloc[c.vertices.front()], alloc[c.vertices.front()],
           static_cast<int>(c.vertices.size())};
    for (int v : c.vertices) {
      s.lo = std::min(s.lo, alloc[v]);
      s.hi = std::max(s.hi, alloc[v]);
    }
    spans.push_back(s);
  }
  return spans;
}

bool all_contiguous(const std::vector<Span>& spans) {
  return std::all_of(spans.begin(), spans.end(),
                     [](const Span& s) { return s.hi - s.lo + 1 == s.size; });
}

// Component order where every earlier component splits every later one, or
// empty. Crossing pairs kill it; otherwise spans are pairwise disjoint or
// nested, and shorter spans must come first.
std::vector<int> splitting_order(const Allocation& alloc, const std::vector<Component>& comps) {
  const int r = static_cast<int>(comps.size());
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  auto spans = component_spans(alloc, comps);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int la = spans[a].hi - spans[a].lo, lb = spans[b].hi - spans[b].lo;
    if (la != lb) return la < lb;
    if (spans[a].lo != spans[b].lo) return spans[a].lo < spans[b].lo;
    return a < b;
  });
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!splits(alloc, comps[order[i]].vertices, comps[order[j]].vertices)) return {};
  return order;
}

std::optional<std::array<int, 4>> find_interleaving(const Allocation& alloc,
                                                    const std::vector<Component>& comps) {
  const int r = static_cast<int>(comps.size());
  const int n = static_cast<int>(alloc.size());
  std::vector<int> owner(n, -1);
  for (int c = 0; c < r; ++c)
    for (int v : comps[c].vertices) owner[alloc[v]] = c;
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      if (splits(alloc, comps[a].vertices, comps[b].vertices) ||
          splits(alloc, comps[b].vertices, comps[a].vertices))
        continue;
      // Crossing pair: the merged rank sequence alternates at least 4 times.
      std::array<int, 4> quad{};
      int len = 0;
      for (int rank = 0; rank < n && len < 4; ++rank) {
        if (owner[rank] != a && owner[rank] != b) continue;
        if (len == 0 || owner[quad[len - 1]] != owner[rank]) quad[len++] = rank;
      }
      if (len == 4) return quad;
    }
  }
  return std::nullopt;
}

}  // namespace

SeparabilityReport classify_separability_empirical(const Graph& g, const ValueProfile& p,
                                                   long long budget) {
  auto comps = connected_components(g);
  OptimalSet opt = enumerate_optima(g, p, budget);
  SeparabilityReport rep;
  rep.envy = opt.envy;
  rep.optima_count = opt.optima.size();
  rep.truncated = opt.truncated;
  for (const Allocation& alloc : opt.optima) {
    if (!rep.strongly_separable && all_contiguous(component_spans(alloc, comps))) {
      rep.strongly_separable = true;
      rep.strong_witness = alloc;
    }
    if (!rep.separable) {
      auto order = splitting_order(alloc, comps);
      if (!order.empty()) {
        rep.separable = true;
        rep.separable_witness = alloc;
        rep.separable_order = std::move(order);
      }
    }
    if (rep.strongly_separable && rep.separable) break;
  }
  if (!rep.separable) rep.interleaving = find_interleaving(opt.optima.front(), comps);
  return rep;
}

bool check_mla_contiguity(const Graph& g, const ValueProfile& p, long long budget) {
  if (p.size() != g.n) throw input_error("profile size must match the vertex count");
  for (int k = 2; k < p.size(); ++k)
    if (p.values[k] - p.values[k - 1] != p.values[1] - p.values[0])
      throw input_error("contiguity check expects an evenly spaced profile");
  if (p.size() >= 2 && p.values[1] == p.values[0])
    throw input_error("contiguity check expects distinct values");
  auto comps = connected_components(g);
  OptimalSet opt = enumerate_optima(g, p, budget);
  for (const Allocation& alloc : opt.optima)
    if (all_contiguous(component_spans(alloc, comps))) return true;
  return false;
}

namespace {

Graph fig3_graph() {
  return Graph(5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}});
}

void require_positive(const Rational& x, const char* what) {
  if (x <= 0) throw input_error(std::string(what) + " must be positive");
}

}  // namespace

Instance make_figure_instance(FigureId id, const FigureParams& params) {
  Instance inst;
  switch (id) {
    case FigureId::Fig1: {
      inst.graph = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}});
      inst.values = {1, 2, 4, 5, 6};
      inst.metadata = {{"figure", "fig1"}, {"allocation", "1 4 2 5 3"}};
      return inst;
    }
    case FigureId::Fig3Top: {
      require_positive(params.eps, "eps");
      if (params.big <= params.eps * 2) throw input_error("cluster gap must exceed the cluster");
      inst.graph = fig3_graph();
      const Rational& e = params.eps;
      const Rational& c = params.big;
      inst.values = {0, e, c, c + e, c + e * 2};
      inst.metadata = {{"figure", "fig3-top"},
                       {"eps", format_rational(e)},
                       {"gap", format_rational(c)}};
      return inst;
    }
    case FigureId::Fig3Bottom: {
      require_positive(params.delta, "delta");
      if (params.delta >= params.mid) throw input_error("spread must stay below the center");
      inst.graph = fig3_graph();
      const Rational& m = params.mid;
      const Rational& d = params.delta;
      inst.values = {0, m - d, m, m + d, m * 2};
      inst.metadata = {{"figure", "fig3-bottom"},
                       {"center", format_rational(m)},
                       {"spread", format_rational(d)}};
      return inst;
    }
    case FigureId::Fig4: {
      require_positive(params.cluster_eps, "cluster width");
      if (params.cluster_eps >= Rational(1, 4))
        throw input_error("cluster width must stay below 1/4");
      inst.graph = Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
      const Rational& w = params.cluster_eps;
      inst.values = {0, w, w * 2, Rational(1, 2), 1 - w * 2, 1 - w, 1};
      inst.metadata = {{"figure", "fig4"}, {"cluster_width", format_rational(w * 2)}};
      return inst;
    }
    case FigureId::Fig5: {
      const auto& s = params.star_sizes;
      for (int x : s)
        if (x < 1) throw input_error("every star needs at least one leaf");
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (std::abs(s[i] - s[j]) < 3)
            throw input_error("star sizes must differ pairwise by at least 3");
      int max_size = *std::max_element(s.begin(), s.end());
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (!(s[i] + s[j] > max_size + 2))
            throw input_error("every pair of star sizes must exceed the largest plus 2");
      require_positive(params.cluster_eps, "cluster width");
      if (params.cluster_eps >= Rational(1, 10))
        throw input_error("cluster width must stay below 1/10");

      // Component A joins stars 1 and 3, component B joins stars 2 and 4.
      std::vector<std::pair<int, int>> edges;
      int at = 0;
      std::array<int, 4> center{};
      for (int half = 0; half < 2; ++half) {
        int c1 = at;
        center[half] = c1;
        at += 1 + s[half];
        int c2 = at;
        center[half + 2] = c2;
        at += 1 + s[half + 2];
        edges.emplace_back(c1, c2);
        for (int l = 1; l <= s[half]; ++l) edges.emplace_back(c1, c1 + l);
        for (int l = 1; l <= s[half + 2]; ++l) edges.emplace_back(c2, c2 + l);
      }
      inst.graph = Graph(at, std::move(edges));

      // Cluster i feeds star i+1: s_i + 1 values near i/3.
      Rational step = params.cluster_eps / (max_size + 1);
      for (int i = 0; i < 4; ++i) {
        Rational base = Rational(i, 3);
        for (int j = 0; j <= s[i]; ++j) inst.values.push_back(base + step * j);
      }
      inst.metadata = {{"figure", "fig5"},
                       {"star_sizes", std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                                          std::to_string(s[2]) + "," + std::to_string(s[3])},
                       {"cluster_step", format_rational(step)}};
      return inst;
    }
  }
  throw input_error("unknown figure id");
}

namespace {

// Center gets the lower median of the block, leaves the rest ascending.
void place_star_block(int center, const std::vector<int>& leaves, int start, int size,
                      Allocation& alloc) {
  int mid = start + (size + 1) / 2 - 1;
  alloc[center] = mid;
  int rank = start;
  for (int leaf : leaves) {
    if (rank == mid) ++rank;
    alloc[leaf] = rank++;
  }
}

struct DoubleStar {
  int c1, c2;
  std::vector<int> leaves1, leaves2;
};

DoubleStar double_star_shape(const Component& comp) {
  DoubleStar d{-1, -1, {}, {}};
  for (int v = 0; v < comp.graph.n; ++v)
    if (comp.graph.degree(v) >= 2) (d.c1 == -1 ? d.c1 : d.c2) = v;
  if (d.c1 == -1 || d.c2 == -1 || !comp.graph.has_edge(d.c1, d.c2))
    throw input_error("component is not a double star");
  for (int w : comp.graph.adj[d.c1])
    if (w != d.c2) d.leaves1.push_back(w);
  for (int w : comp.graph.adj[d.c2])
    if (w != d.c1) d.leaves2.push_back(w);
  return d;
}

// Best of the two prefix/suffix sub-star layouts of one contiguous block.
Rational double_star_heuristic(const ValueProfile& p, const Component& comp, int start,
                               Allocation& global) {
  DoubleStar d = double_star_shape(comp);
  int a = static_cast<int>(d.leaves1.size()) + 1;
  int b = static_cast<int>(d.leaves2.size()) + 1;
  Rational best;
  Allocation best_local;
  for (int flip = 0; flip < 2; ++flip) {
    Allocation local(comp.graph.n);
    if (flip == 0) {
      place_star_block(d.c1, d.leaves1, 0, a, local);
      place_star_block(d.c2, d.leaves2, a, b, local);
    } else {
      place_star_block(d.c2, d.leaves2, 0, b, local);
      place_star_block(d.c1, d.leaves1, b, a, local);
    }
    std::vector<Rational> block(p.values.begin() + start,
                                p.values.begin() + start + comp.graph.n);
    Rational envy = total_envy(comp.graph, ValueProfile::from_sorted(block), local);
    if (flip == 0 || envy < best) {
      best = envy;
      best_local = local;
    }
  }
  for (int v = 0; v < comp.graph.n; ++v) global[comp.vertices[v]] = start + best_local[v];
  return best;
}

}  // namespace

Fig5Check check_fig5_structure(const FigureParams& params) {
  Instance inst = make_figure_instance(FigureId::Fig5, params);
  ValueProfile p = inst.profile();
  const auto& s = params.star_sizes;

  // Canonical interleaved allocation: star i takes cluster i whole.
  Allocation interleaved(inst.graph.n);
  {
    int vertex = 0;
    for (int half = 0; half < 2; ++half) {
      for (int star : {half, half + 2}) {
        int start = 0;
        for (int i = 0; i < star; ++i) start += s[i] + 1;
        int center = vertex++;
        std::vector<int> leaves;
        for (int l = 0; l < s[star]; ++l) leaves.push_back(vertex++);
        place_star_block(center, leaves, start, s[star] + 1, interleaved);
      }
    }
  }
  Fig5Check out;
  out.interleaved = total_envy(inst.graph, p, interleaved);

  auto comps = connected_components(inst.graph);
  bool first = true;
  for (int order = 0; order < 2; ++order) {
    Allocation alloc(inst.graph.n);
    Rational envy = 0;
    int start = 0;
    for (int pick : {order, 1 - order}) {
      envy += double_star_heuristic(p, comps[pick], start, alloc);
      start += comps[pick].graph.n;
    }
    if (first || envy < out.best_contiguous) out.best_contiguous = envy;
    first = false;
  }
  out.interleaved_wins = out.interleaved < out.best_contiguous;
  return out;
}

}  // namespace envymin
