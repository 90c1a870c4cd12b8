#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "envymin/graph.hpp"
#include "envymin/profile.hpp"

namespace envymin {

// Deterministic across platforms: raw mt19937_64 draws mapped by explicit
// rejection sampling. std::uniform_int_distribution is implementation
// defined, so it never appears here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);       // uniform in [0, bound)
  long long between(long long lo, long long hi);  // uniform in [lo, hi]
  bool chance(int num, int den);                  // true with probability num/den

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Uniformly relabels vertices; root tracks the permutation when given.
Graph shuffle_labels(Rng& rng, const Graph& g);
std::pair<Graph, int> shuffle_labels_rooted(Rng& rng, const Graph& g, int root);

// Each vertex pair is an edge with probability num/den.
Graph random_graph(Rng& rng, int n, int num, int den);
// Resamples random_graph until it is disconnected (n >= 2).
Graph random_disconnected_graph(Rng& rng, int n, int num, int den);
// Uniform random attachment tree with shuffled labels.
Graph random_tree(Rng& rng, int n);
// Full binary tree (every node has 0 or 2 children), n odd, shuffled labels.
std::pair<Graph, int> random_binary_tree(Rng& rng, int n);

// Strictly increasing values built from positive rational increments.
ValueProfile random_profile(Rng& rng, int n);

}  // namespace envymin
