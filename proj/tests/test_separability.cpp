#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "envymin/random.hpp"
#include "envymin/separability.hpp"
#include "envymin/unions.hpp"

#include <algorithm>
#include <vector>

using namespace envymin;

namespace {

// Lays the given ranks out on vertices 0..n-1 so rank patterns are easy to
// state: vertex i holds rank ranks[i].
Allocation lay(std::initializer_list<int> ranks) { return Allocation(ranks); }

}  // namespace

TEST_CASE("splits on rank patterns") {
  // Disjoint ranges split each other both ways.
  auto a = lay({0, 1, 2, 3, 4});
  CHECK(splits(a, {0, 1}, {2, 3, 4}));
  CHECK(splits(a, {2, 3, 4}, {0, 1}));

  // Nested: the inner block splits the outer, not vice versa.
  auto b = lay({0, 4, 1, 2, 3});  // comp {0,1} holds the extremes
  CHECK_FALSE(splits(b, {0, 1}, {2, 3, 4}));
  CHECK(splits(b, {2, 3, 4}, {0, 1}));

  // Crossing: neither splits the other.
  auto c = lay({0, 2, 1, 3});
  CHECK_FALSE(splits(c, {0, 1}, {2, 3}));
  CHECK_FALSE(splits(c, {2, 3}, {0, 1}));

  // Singletons split everything.
  CHECK(splits(c, {0}, {1}));
  CHECK(splits(c, {1}, {0, 2, 3}));

  CHECK_THROWS_AS(splits(c, {}, {0}), input_error);
  CHECK_THROWS_AS(splits(c, {0, 1}, {1, 2}), input_error);
}

TEST_CASE("mutual splitting means disjoint intervals") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Allocation alloc(6);
    for (int i = 0; i < 6; ++i) alloc[i] = i;
    rng.shuffle(alloc);
    std::vector<int> left{0, 1, 2}, right{3, 4, 5};
    int lmin = 6, lmax = -1, rmin = 6, rmax = -1;
    for (int v : left) {
      lmin = std::min(lmin, alloc[v]);
      lmax = std::max(lmax, alloc[v]);
    }
    for (int v : right) {
      rmin = std::min(rmin, alloc[v]);
      rmax = std::max(rmax, alloc[v]);
    }
    bool disjoint = lmax < rmin || rmax < lmin;
    CHECK((splits(alloc, left, right) && splits(alloc, right, left)) == disjoint);
  }
}

TEST_CASE("a union of two paths is strongly separable") {
  Graph g = disjoint_union({path_graph(2), path_graph(3)});
  auto p = ValueProfile::from_input(
      {Rational(0), Rational(1), Rational(10), Rational(11), Rational(12)});
  auto rep = classify_separability_empirical(g, p);
  CHECK(rep.envy == Rational(3));
  CHECK(rep.strongly_separable);
  CHECK(rep.separable);
  REQUIRE(rep.strong_witness.has_value());
  CHECK(total_envy(g, p, *rep.strong_witness) == rep.envy);
  CHECK_FALSE(rep.interleaving.has_value());
}

TEST_CASE("strongly separable families always yield a contiguous optimum") {
  Rng rng(5);
  for (int which = 0; which < 4; ++which) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Graph> parts;
      int total = 0;
      while (total < 6) {
        switch (which) {
          case 0: parts.push_back(path_graph(1 + static_cast<int>(rng.below(3)))); break;
          case 1: parts.push_back(cycle_graph(3)); break;
          case 2: parts.push_back(star_graph(1 + static_cast<int>(rng.below(3)))); break;
          default: parts.push_back(clique_graph(2)); break;
        }
        total += parts.back().n;
      }
      Graph g = disjoint_union(parts);
      if (g.n > 8) continue;
      auto p = random_profile(rng, g.n);
      auto rep = classify_separability_empirical(g, p);
      CHECK(rep.strongly_separable);
      CHECK(rep.separable);
    }
  }
}

TEST_CASE("figure three, top profile: contiguous blocks win") {
  Instance inst = make_figure_instance(FigureId::Fig3Top);
  CHECK(inst.values == std::vector<Rational>{Rational(0), Rational(1, 100), Rational(100),
                                             Rational(100) + Rational(1, 100),
                                             Rational(100) + Rational(2, 100)});
  auto rep = classify_separability_empirical(inst.graph, inst.profile());
  CHECK(rep.strongly_separable);
  CHECK(rep.separable);
}

TEST_CASE("figure three, bottom profile: the edge takes the extremes") {
  Instance inst = make_figure_instance(FigureId::Fig3Bottom);
  CHECK(inst.values == std::vector<Rational>{Rational(0), Rational(49), Rational(50),
                                             Rational(51), Rational(100)});
  auto rep = classify_separability_empirical(inst.graph, inst.profile());
  CHECK(rep.envy == Rational(104));
  CHECK_FALSE(rep.strongly_separable);
  CHECK_FALSE(rep.strong_witness.has_value());
  // The triple sits inside the pair's span, so the nesting order still works.
  CHECK(rep.separable);
  REQUIRE(rep.separable_order.has_value());
  CHECK(*rep.separable_order == std::vector<int>{1, 0});
  CHECK_FALSE(rep.interleaving.has_value());

  auto opt = enumerate_optima(inst.graph, inst.profile());
  auto comps = connected_components(inst.graph);
  for (const auto& alloc : opt.optima) {
    bool edge_contiguous = splits(alloc, comps[0].vertices, comps[1].vertices);
    CHECK_FALSE(edge_contiguous);
  }
}

TEST_CASE("figure four: separable, never strongly") {
  Instance inst = make_figure_instance(FigureId::Fig4);
  REQUIRE(inst.graph.n == 7);
  auto rep = classify_separability_empirical(inst.graph, inst.profile());
  CHECK_FALSE(rep.strongly_separable);
  CHECK(rep.separable);
  REQUIRE(rep.separable_order.has_value());
  CHECK(rep.separable_order->front() == 1);  // the isolated vertex splits first

  // Every optimum hands both extreme clusters to the double star, wrapped
  // around the isolated vertex's midpoint value.
  auto opt = enumerate_optima(inst.graph, inst.profile());
  auto comps = connected_components(inst.graph);
  REQUIRE(comps.size() == 2);
  for (const auto& alloc : opt.optima) {
    CHECK(alloc[comps[1].vertices[0]] == 3);  // the midpoint rank
    CHECK_FALSE(splits(alloc, comps[0].vertices, comps[1].vertices));
  }
}

TEST_CASE("figure parameter validation") {
  FigureParams bad;
  bad.big = Rational(1, 100);
  CHECK_THROWS_AS(make_figure_instance(FigureId::Fig3Top, bad), input_error);

  FigureParams wide;
  wide.delta = 60;
  CHECK_THROWS_AS(make_figure_instance(FigureId::Fig3Bottom, wide), input_error);

  FigureParams fat;
  fat.cluster_eps = Rational(1, 2);
  CHECK_THROWS_AS(make_figure_instance(FigureId::Fig4, fat), input_error);
  CHECK_THROWS_AS(make_figure_instance(FigureId::Fig5, fat), input_error);

  FigureParams close;
  close.star_sizes = {9, 10, 15, 18};  // sizes 9 and 10 differ by under 3
  CHECK_THROWS_AS(make_figure_instance(FigureId::Fig5, close), input_error);

  FigureParams lopsided;
  lopsided.star_sizes = {3, 6, 9, 18};  // 3 + 6 fails to top 18 + 2
  CHECK_THROWS_AS(make_figure_instance(FigureId::Fig5, lopsided), input_error);
}

TEST_CASE("the worked five-vertex figure") {
  Instance inst = make_figure_instance(FigureId::Fig1);
  CHECK(inst.graph.n == 5);
  CHECK(inst.values == std::vector<Rational>{Rational(1), Rational(2), Rational(4),
                                             Rational(5), Rational(6)});
  CHECK(inst.metadata.at("allocation") == "1 4 2 5 3");
  CHECK(total_envy(inst.graph, inst.profile(), {0, 3, 1, 4, 2}) == Rational(15));
}

TEST_CASE("figure five structure") {
  Instance inst = make_figure_instance(FigureId::Fig5);
  CHECK(inst.graph.n == 58);  // 10 + 13 + 16 + 19 leaves-plus-centers
  auto comps = connected_components(inst.graph);
  CHECK(comps.size() == 2);

  auto check = check_fig5_structure();
  CHECK(check.interleaved_wins);
  CHECK(check.interleaved < check.best_contiguous);
  CHECK(check.interleaved > Rational(0));
}

TEST_CASE("contiguity check under evenly spaced values") {
  auto p5 = evenly_spaced_profile(5, Rational(1), Rational(1));
  CHECK(check_mla_contiguity(disjoint_union({clique_graph(2), clique_graph(3)}), p5));
  CHECK(check_mla_contiguity(cycle_graph(5), p5));

  auto p7 = evenly_spaced_profile(7, Rational(1), Rational(1));
  Instance fig4 = make_figure_instance(FigureId::Fig4);
  CHECK(check_mla_contiguity(fig4.graph, p7));

  auto uneven = ValueProfile::from_input({Rational(0), Rational(1), Rational(3)});
  CHECK_THROWS_AS(check_mla_contiguity(path_graph(3), uneven), input_error);
  auto flat = ValueProfile::from_input({Rational(2), Rational(2), Rational(2)});
  CHECK_THROWS_AS(check_mla_contiguity(path_graph(3), flat), input_error);
}

TEST_CASE("contiguity holds on random disconnected graphs") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 4 + static_cast<int>(rng.below(5));
    Graph g = random_disconnected_graph(rng, n, 1, 2);
    auto p = evenly_spaced_profile(n, Rational(1), Rational(1));
    CHECK(check_mla_contiguity(g, p));
  }
}

TEST_CASE("classification respects the oracle budget") {
  Graph g = disjoint_union({path_graph(3), path_graph(3)});
  auto p = evenly_spaced_profile(6, Rational(0), Rational(1));
  CHECK_THROWS_AS(classify_separability_empirical(g, p, 10), budget_error);
  CHECK_THROWS_AS(check_mla_contiguity(g, p, 10), budget_error);
}
