#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "envymin/connected.hpp"
#include "envymin/oracle.hpp"
#include "envymin/random.hpp"

#include <algorithm>
#include <vector>

using namespace envymin;

namespace {

ValueProfile rats(std::initializer_list<long long> xs) {
  std::vector<Rational> vals;
  for (long long x : xs) vals.emplace_back(x);
  return ValueProfile::from_input(vals);
}

}  // namespace

TEST_CASE("path solver lays values in sorted order") {
  auto p = rats({1, 2, 4, 5, 6});
  auto r = solve_path(p);
  CHECK(r.envy == Rational(5));
  CHECK(r.solver == "path");
  CHECK(r.assignment == Allocation{0, 1, 2, 3, 4});
  CHECK(total_envy(path_graph(5), p, r.assignment) == r.envy);
  CHECK(r.envy == brute_force(path_graph(5), p).envy);
  CHECK(solve_path(rats({7})).envy == Rational(0));
}

TEST_CASE("cycle solver pays the spread twice") {
  auto p = rats({1, 2, 4, 5, 6});
  auto r = solve_cycle(p);
  CHECK(r.envy == Rational(10));
  CHECK(r.solver == "cycle");
  CHECK(total_envy(cycle_graph(5), p, r.assignment) == r.envy);
  CHECK(r.envy == brute_force(cycle_graph(5), p).envy);
  CHECK_THROWS_AS(solve_cycle(rats({1, 2})), input_error);
}

TEST_CASE("star solver centers the lower median") {
  SUBCASE("four spokes") {
    auto p = rats({1, 2, 4, 5, 6});
    auto r = solve_star(p);
    CHECK(r.envy == Rational(8));
    CHECK(r.solver == "star");
    CHECK(p.values[r.assignment[0]] == Rational(4));
    CHECK(total_envy(star_graph(4), p, r.assignment) == r.envy);
    CHECK(r.envy == brute_force(star_graph(4), p).envy);
  }

  SUBCASE("even order: the two medians tie") {
    auto p = rats({1, 2, 3, 10});
    auto r = solve_star(p);
    CHECK(r.envy == Rational(10));
    CHECK(p.values[r.assignment[0]] == Rational(2));  // lower median
    Allocation upper{2, 0, 1, 3};                     // upper median at the center
    CHECK(total_envy(star_graph(3), p, upper) == Rational(10));
    CHECK(r.envy == brute_force(star_graph(3), p).envy);
  }

  SUBCASE("median balance invariant") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 2 + static_cast<int>(rng.below(8));
      auto p = random_profile(rng, n);
      auto r = solve_star(p);
      int below = r.assignment[0];
      int above = n - 1 - below;
      CHECK(below <= above);
      CHECK(above - below <= 1);
      CHECK(r.envy == brute_force(star_graph(n - 1), p).envy);
    }
  }

  CHECK_THROWS_AS(solve_star(rats({1})), input_error);
}

TEST_CASE("clique solver: every allocation costs the same") {
  auto p = rats({49, 50, 51});
  auto r = solve_clique(p);
  CHECK(r.envy == Rational(4));
  CHECK(r.solver == "clique");
  CHECK(clique_envy_sorted(p.values) == Rational(4));
  Allocation alloc{0, 1, 2};
  do {
    CHECK(total_envy(clique_graph(3), p, alloc) == Rational(4));
  } while (std::next_permutation(alloc.begin(), alloc.end()));

  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));
    auto q = random_profile(rng, n);
    CHECK(solve_clique(q).envy == brute_force(clique_graph(n), q).envy);
  }
}

TEST_CASE("complete bipartite solver") {
  SUBCASE("balanced worked example") {
    auto p = rats({1, 2, 3, 4, 5, 6});
    auto r = solve_complete_bipartite(3, 3, p);
    CHECK(r.envy == Rational(19));
    CHECK(r.solver == "complete_bipartite");
    CHECK(total_envy(complete_bipartite_graph(3, 3), p, r.assignment) == r.envy);
    CHECK(r.envy == brute_force(complete_bipartite_graph(3, 3), p).envy);
  }

  SUBCASE("single small side lines up with the star solver") {
    auto p = rats({1, 2, 3, 10});
    auto r = solve_complete_bipartite(3, 1, p);
    auto s = solve_star(p);
    CHECK(r.envy == s.envy);
    CHECK(r.assignment[3] == s.assignment[0]);  // the lone vertex is the center
  }

  SUBCASE("matches the oracle across shapes") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      int s = 1 + static_cast<int>(rng.below(3));
      int r = s + static_cast<int>(rng.below(4));
      if (r + s > 8) continue;
      auto p = random_profile(rng, r + s);
      auto res = solve_complete_bipartite(r, s, p);
      CHECK(total_envy(complete_bipartite_graph(r, s), p, res.assignment) == res.envy);
      CHECK(res.envy == brute_force(complete_bipartite_graph(r, s), p).envy);
    }
  }

  CHECK_THROWS_AS(solve_complete_bipartite(1, 2, rats({1, 2, 3})), input_error);
  CHECK_THROWS_AS(solve_complete_bipartite(2, 2, rats({1, 2, 3})), input_error);
}

TEST_CASE("bipartite optima counts") {
  CHECK(count_optima_bipartite(3, 3) == BigInt(8));
  CHECK(count_optima_bipartite(4, 3) == BigInt(1));
  CHECK(count_optima_bipartite(2, 2) == BigInt(4));
  CHECK(count_optima_bipartite(30, 30) == (BigInt(1) << 30));
  CHECK_THROWS_AS(count_optima_bipartite(2, 3), input_error);

  // Empirically: side-canonical classes of all optima.
  for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {3, 2}, {4, 2}}) {
    auto p = evenly_spaced_profile(r + s, Rational(1), Rational(1));
    auto opt = enumerate_optima(complete_bipartite_graph(r, s), p);
    REQUIRE_FALSE(opt.truncated);
    auto classes = canonical_classes(opt.optima, Symmetry::bipartite_sides(r, s));
    CHECK(BigInt(classes.size()) == count_optima_bipartite(r, s));
  }
}

TEST_CASE("complete graphs with general valuations") {
  SUBCASE("cross matrix prefers the diagonal") {
    auto m = ValueMatrix::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    auto r = solve_complete_general(m);
    CHECK(r.envy == Rational(0));
    CHECK(r.solver == "complete_general");
    CHECK(r.assignment == Allocation{0, 1});
  }

  SUBCASE("matches exhaustive search") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 2 + static_cast<int>(rng.below(3));
      std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
      for (auto& row : rows)
        for (auto& x : row) x = Rational(rng.between(0, 9), 1 + static_cast<long long>(rng.below(3)));
      auto m = ValueMatrix::from_rows(rows);
      Graph g = clique_graph(n);
      Allocation alloc(n);
      for (int i = 0; i < n; ++i) alloc[i] = i;
      Rational best = total_envy_general(g, m, alloc);
      do {
        best = std::min(best, total_envy_general(g, m, alloc));
      } while (std::next_permutation(alloc.begin(), alloc.end()));
      auto r = solve_complete_general(m);
      CHECK(r.envy == best);
      CHECK(total_envy_general(g, m, r.assignment) == r.envy);
    }
  }

  SUBCASE("identical rows collapse to the clique formula") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 2 + static_cast<int>(rng.below(4));
      auto p = random_profile(rng, n);
      std::vector<std::vector<Rational>> rows(n, p.values);
      auto r = solve_complete_general(ValueMatrix::from_rows(rows));
      CHECK(r.envy == clique_envy_sorted(p.values));
    }
  }
}

TEST_CASE("classified solving maps through arbitrary labels") {
  Rng rng(17);
  std::vector<Graph> gallery = {path_graph(6), cycle_graph(6), star_graph(5),
                                clique_graph(5), complete_bipartite_graph(3, 2),
                                complete_bipartite_graph(4, 2)};
  for (const auto& base : gallery) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(base.n);
      for (int i = 0; i < base.n; ++i) perm[i] = i;
      rng.shuffle(perm);
      Graph g = relabel(base, perm);
      auto p = random_profile(rng, g.n);
      auto cls = classify_component(g);
      auto r = solve_classified(g, cls, p);
      CHECK(total_envy(g, p, r.assignment) == r.envy);
      CHECK(r.envy == brute_force(g, p).envy);
    }
  }

  Graph binary(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  auto p7 = evenly_spaced_profile(7, Rational(0), Rational(1));
  CHECK_THROWS_AS(solve_classified(binary, classify_component(binary, 0), p7), input_error);
  CHECK_THROWS_AS(solve_classified(binary, classify_component(binary), p7), input_error);
  CHECK_THROWS_AS(solve_classified(path_graph(3), {ComponentKind::Path, 3},
                                   rats({1, 2, 3, 4})),
                  input_error);
}
