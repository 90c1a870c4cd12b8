#pragma once

#include "envymin/instance.hpp"
#include "envymin/oracle.hpp"

#include <array>

namespace envymin {

// Whether comp_a's values sit contiguously inside the merged values of both
// components, i.e. comp_a splits comp_b. House ranks double as value order.
bool splits(const Allocation& alloc, const std::vector<int>& comp_a,
            const std::vector<int>& comp_b);

struct SeparabilityReport {
  Rational envy;
  std::size_t optima_count = 0;
  bool truncated = false;
  // Some optimum gives every component a globally contiguous block.
  bool strongly_separable = false;
  std::optional<Allocation> strong_witness;
  // Some optimum admits a component ordering where every earlier component
  // splits every later one.
  bool separable = false;
  std::optional<Allocation> separable_witness;
  std::optional<std::vector<int>> separable_order;
  // When every optimum has a crossing pair: ranks u < v < u' < v' with u, u'
  // in one component and v, v' in another, from the first optimum.
  std::optional<std::array<int, 4>> interleaving;
};

// Enumerates all optima and reports how separable the instance turned out.
SeparabilityReport classify_separability_empirical(const Graph& g, const ValueProfile& p,
                                                   long long budget = kDefaultBudget);

// True when some optimum assigns a contiguous block to every component.
// Demands an evenly spaced profile, the regime the statement lives in.
bool check_mla_contiguity(const Graph& g, const ValueProfile& p,
                          long long budget = kDefaultBudget);

enum class FigureId { Fig1, Fig3Top, Fig3Bottom, Fig4, Fig5 };

struct FigureParams {
  Rational eps = Rational(1, 100);      // fig3 top: cluster spacing
  Rational big = 100;                   // fig3 top: cluster gap
  Rational mid = 50;                    // fig3 bottom: center value
  Rational delta = 1;                   // fig3 bottom: spread around the center
  Rational cluster_eps = Rational(1, 1000);  // fig4/fig5: cluster width
  std::array<int, 4> star_sizes = {9, 12, 15, 18};  // fig5 leaf counts
};

// Fixed instances:
//   Fig1       the worked 5-vertex example; metadata carries the depicted
//              allocation (envy 15).
//   Fig3Top    K_2 + K_3, low pair + high triple: the edge takes the low pair.
//   Fig3Bottom K_2 + K_3, extremes + tight middle triple: the edge takes the
//              extremes, so no optimum is contiguous.
//   Fig4       double star + isolated vertex, end clusters + midpoint:
//              separable but not strongly so.
//   Fig5       two double stars, four spread clusters: inseparable.
Instance make_figure_instance(FigureId id, const FigureParams& params = {});

struct Fig5Check {
  Rational interleaved;
  Rational best_contiguous;
  bool interleaved_wins = false;
};

// Structural evidence on the Fig5 forest (too big to brute force): the
// canonical cluster-interleaved allocation must strictly beat every
// contiguous two-block split whose blocks are solved by the double-star
// heuristic (each block split into two sub-stars around their medians).
Fig5Check check_fig5_structure(const FigureParams& params = {});

}  // namespace envymin
