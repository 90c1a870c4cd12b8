#include "envymin/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace envymin {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n(n) {
  if (n < 1) throw input_error("graph needs at least one vertex");
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error("edge endpoint out of range");
    if (u == v) throw input_error("self loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  edges = std::move(edge_list);
  adj.assign(n, {});
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw input_error("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph star_graph(int spokes) {
  if (spokes < 1) throw input_error("star needs at least 1 spoke");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= spokes; ++i) e.emplace_back(0, i);
  return Graph(spokes + 1, std::move(e));
}

Graph clique_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(int r, int s) {
  if (r < 1 || s < 1) throw input_error("both sides need at least one vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) e.emplace_back(i, r + j);
  return Graph(r + s, std::move(e));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  if (parts.empty()) throw input_error("union of zero graphs");
  int n = 0;
  std::vector<std::pair<int, int>> e;
  for (const auto& g : parts) {
    for (auto [u, v] : g.edges) e.emplace_back(n + u, n + v);
    n += g.n;
  }
  return Graph(n, std::move(e));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n) throw input_error("relabel permutation size mismatch");
  std::vector<std::pair<int, int>> e;
  e.reserve(g.edges.size());
  for (auto [u, v] : g.edges) e.emplace_back(perm[u], perm[v]);
  return Graph(g.n, std::move(e));
}

std::vector<Component> connected_components(const Graph& g) {
  std::vector<int> comp(g.n, -1);
  int count = 0;
  for (int start = 0; start < g.n; ++start) {
    if (comp[start] != -1) continue;
    std::queue<int> q;
    q.push(start);
    comp[start] = count;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.adj[v])
        if (comp[w] == -1) {
          comp[w] = count;
          q.push(w);
        }
    }
    ++count;
  }
  std::vector<Component> out(count);
  std::vector<int> local(g.n);
  for (int v = 0; v < g.n; ++v) {
    local[v] = static_cast<int>(out[comp[v]].vertices.size());
    out[comp[v]].vertices.push_back(v);
  }
  std::vector<std::vector<std::pair<int, int>>> edge_lists(count);
  for (auto [u, v] : g.edges) edge_lists[comp[u]].emplace_back(local[u], local[v]);
  for (int c = 0; c < count; ++c)
    out[c].graph = Graph(static_cast<int>(out[c].vertices.size()), std::move(edge_lists[c]));
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

namespace {

std::vector<int> degree_histogram(const Graph& g) {
  std::vector<int> h(g.n, 0);
  for (int v = 0; v < g.n; ++v) ++h[g.degree(v)];
  return h;
}

// 2-colors a connected graph; empty result when an odd cycle shows up.
std::optional<std::vector<int>> two_color(const Graph& g) {
  std::vector<int> color(g.n, -1);
  std::queue<int> q;
  color[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.adj[v]) {
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        q.push(w);
      } else if (color[w] == color[v]) {
        return std::nullopt;
      }
    }
  }
  return color;
}

}  // namespace

bool is_path(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.n == 1) return g.m() == 0;
  if (g.m() != g.n - 1) return false;
  auto h = degree_histogram(g);
  return h[1] == 2 && (g.n == 2 || h[2] == g.n - 2);
}

bool is_cycle(const Graph& g) {
  if (g.n < 3 || g.m() != g.n || !is_connected(g)) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_star(const Graph& g) {
  if (g.n < 2 || g.m() != g.n - 1 || !is_connected(g)) return false;
  auto h = degree_histogram(g);
  if (g.n == 2) return h[1] == 2;
  return h[1] == g.n - 1 && h[g.n - 1] == 1;
}

bool is_clique(const Graph& g) { return g.m() == g.n * (g.n - 1) / 2; }

bool is_complete_bipartite(const Graph& g, int* r, int* s) {
  if (g.n < 2 || !is_connected(g)) return false;
  auto color = two_color(g);
  if (!color) return false;
  int a = static_cast<int>(std::count(color->begin(), color->end(), 0));
  int b = g.n - a;
  if (g.m() != a * b) return false;
  if (r) *r = std::max(a, b);
  if (s) *s = std::min(a, b);
  return true;
}

bool is_tree(const Graph& g) { return g.m() == g.n - 1 && is_connected(g); }

ComponentClass classify_component(const Graph& g, std::optional<int> root) {
  if (!is_connected(g)) throw input_error("classify_component expects a connected graph");
  if (is_path(g)) return {ComponentKind::Path, g.n};
  if (is_cycle(g)) return {ComponentKind::Cycle, g.n};
  if (is_star(g)) return {ComponentKind::Star, g.n - 1};
  if (is_clique(g)) return {ComponentKind::Clique, g.n};
  int r = 0, s = 0;
  if (is_complete_bipartite(g, &r, &s)) return {ComponentKind::CompleteBipartite, r, s};
  if (root && is_tree(g)) {
    RootedTree t(g, *root);
    if (validate_binary_tree(t)) return {ComponentKind::BinaryTree, g.n};
  }
  return {ComponentKind::Generic, g.n};
}

std::string to_string(const ComponentClass& c) {
  switch (c.kind) {
    case ComponentKind::Path: return "path(" + std::to_string(c.a) + ")";
    case ComponentKind::Cycle: return "cycle(" + std::to_string(c.a) + ")";
    case ComponentKind::Star: return "star(" + std::to_string(c.a) + ")";
    case ComponentKind::Clique: return "clique(" + std::to_string(c.a) + ")";
    case ComponentKind::CompleteBipartite:
      return "complete_bipartite(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
    case ComponentKind::BinaryTree: return "binary_tree(" + std::to_string(c.a) + ")";
    case ComponentKind::Generic: return "generic(" + std::to_string(c.a) + ")";
  }
  return "?";
}

std::vector<int> path_order(const Graph& g) {
  if (!is_path(g)) throw input_error("path_order expects a path");
  if (g.n == 1) return {0};
  int start = 0;
  while (g.degree(start) != 1) ++start;
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < g.n) {
    for (int w : g.adj[cur])
      if (w != prev) {
        order.push_back(w);
        prev = cur;
        cur = w;
        break;
      }
  }
  return order;
}

std::vector<int> cycle_order(const Graph& g) {
  if (!is_cycle(g)) throw input_error("cycle_order expects a cycle");
  std::vector<int> order{0};
  int prev = 0, cur = g.adj[0][0];
  while (cur != 0) {
    order.push_back(cur);
    int next = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
    prev = cur;
    cur = next;
  }
  return order;
}

int star_center(const Graph& g) {
  if (!is_star(g)) throw input_error("star_center expects a star");
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == g.n - 1) return v;
  return 0;
}

std::pair<std::vector<int>, std::vector<int>> bipartite_sides(const Graph& g) {
  int r = 0, s = 0;
  if (!is_complete_bipartite(g, &r, &s))
    throw input_error("bipartite_sides expects a complete bipartite graph");
  auto color = *two_color(g);
  std::vector<int> side0, side1;
  for (int v = 0; v < g.n; ++v) (color[v] == 0 ? side0 : side1).push_back(v);
  if (side1.size() > side0.size()) std::swap(side0, side1);
  return {side0, side1};
}

RootedTree::RootedTree(Graph g, int root) : graph(std::move(g)), root(root) {
  if (!is_tree(graph)) throw input_error("rooted tree requires a tree");
  if (root < 0 || root >= graph.n) throw input_error("root out of range");
  parent.assign(graph.n, -1);
  children.assign(graph.n, {});
  depth.assign(graph.n, 0);
  std::queue<int> q;
  q.push(root);
  std::vector<bool> seen(graph.n, false);
  seen[root] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : graph.adj[v])
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        children[v].push_back(w);
        q.push(w);
      }
  }
}

std::vector<int> RootedTree::subtree(int v) const {
  std::vector<int> out, stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (auto it = children[x].rbegin(); it != children[x].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

bool validate_binary_tree(const RootedTree& t) {
  for (const auto& c : t.children)
    if (c.size() != 0 && c.size() != 2) return false;
  return true;
}

}  // namespace envymin
