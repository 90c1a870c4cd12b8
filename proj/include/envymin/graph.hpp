#pragma once

#include "envymin/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace envymin {

// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
// (u < v, sorted, deduplicated); adjacency lists are kept in step.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int spokes);                  // vertex 0 is the center
Graph clique_graph(int n);
Graph complete_bipartite_graph(int r, int s);  // vertices 0..r-1 vs r..r+s-1
Graph disjoint_union(const std::vector<Graph>& parts);
Graph relabel(const Graph& g, const std::vector<int>& perm);  // new id = perm[old id]

// One connected component: the induced subgraph plus the original vertex ids
// (vertices[local id] = original id, ascending).
struct Component {
  Graph graph;
  std::vector<int> vertices;
};

// Components ordered by smallest original vertex.
std::vector<Component> connected_components(const Graph& g);

bool is_connected(const Graph& g);

enum class ComponentKind { Path, Cycle, Star, Clique, CompleteBipartite, BinaryTree, Generic };

// Kind plus its parameters: Path/Cycle/Clique/BinaryTree use a = vertex count,
// Star uses a = spoke count, CompleteBipartite uses a = r >= b = s.
struct ComponentClass {
  ComponentKind kind;
  int a = 0;
  int b = 0;
};

std::string to_string(const ComponentClass& c);

// Classifies a connected graph with fixed precedence: Path before Cycle before
// Star before Clique before CompleteBipartite before BinaryTree before
// Generic, so P_3 is a Path even though it is also a star, and C_3 is a Cycle
// even though it is also K_3. BinaryTree requires the explicit root: the
// undirected tree alone does not carry rooted semantics.
ComponentClass classify_component(const Graph& g, std::optional<int> root = std::nullopt);

// Shape predicates, independent of the precedence above.
bool is_path(const Graph& g);
bool is_cycle(const Graph& g);
bool is_star(const Graph& g);
bool is_clique(const Graph& g);
bool is_complete_bipartite(const Graph& g, int* r = nullptr, int* s = nullptr);
bool is_tree(const Graph& g);

// Vertices in path order, lower-id endpoint first. Requires is_path.
std::vector<int> path_order(const Graph& g);
// Vertices in cycle order starting at vertex 0, toward its lower-id neighbor.
std::vector<int> cycle_order(const Graph& g);
// The unique max-degree vertex of a star with >= 2 spokes; lower id wins on K_2.
int star_center(const Graph& g);
// Bipartition with the larger side first (side containing vertex 0 first on a
// tie). Requires is_complete_bipartite.
std::pair<std::vector<int>, std::vector<int>> bipartite_sides(const Graph& g);

// Tree with an explicit root; children ordered by vertex id.
struct RootedTree {
  Graph graph;
  int root = 0;
  std::vector<int> parent;               // -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> depth;

  RootedTree() = default;
  RootedTree(Graph g, int root);

  // Vertices of the subtree rooted at v, preorder.
  std::vector<int> subtree(int v) const;
};

// Every vertex has zero or two children.
bool validate_binary_tree(const RootedTree& t);

}  // namespace envymin
