#pragma once

#include <string>

#include "envymin/envy.hpp"
#include "envymin/graph.hpp"
#include "envymin/profile.hpp"

namespace envymin {

// Plain-text picture of an allocation on the valuation interval: one row per
// vertex marking its house value, one row per edge spanning its endpoint
// values (the bar length is the edge's envy). Deterministic output; houses
// are reported by their 1-based position in the input value list.
std::string render_allocation(const Graph& g, const ValueProfile& p, const Allocation& alloc,
                              int width = 57);

}  // namespace envymin
