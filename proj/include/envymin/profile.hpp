#pragma once

#include "envymin/rational.hpp"

#include <vector>

namespace envymin {

// House values sorted ascending. Ties keep input order (stable sort), so house
// ranks are well defined even before any perturbation. values[k] is the value
// of house k (0-based rank); input_index[k] is where it sat in the input list.
struct ValueProfile {
  std::vector<Rational> values;
  std::vector<int> input_index;

  static ValueProfile from_input(const std::vector<Rational>& input);
  static ValueProfile from_sorted(std::vector<Rational> sorted);

  int size() const { return static_cast<int>(values.size()); }
  bool strictly_increasing() const;
  std::vector<Rational> in_input_order() const;
  // rank_of_input()[i] = rank of the house that appeared at input position i.
  std::vector<int> rank_of_input() const;
};

// Per-agent valuations, input order preserved. v[agent][house].
struct ValueMatrix {
  std::vector<std::vector<Rational>> v;

  int size() const { return static_cast<int>(v.size()); }
  static ValueMatrix from_rows(std::vector<std::vector<Rational>> rows);
};

// Adds eps/(n^2 2^k) to house k (1-based), re-sorts. Halves eps and retries on
// the rare collision, so the result is strictly increasing. Any allocation's
// total envy moves by less than the original eps.
ValueProfile perturb_distinct(const ValueProfile& p, const Rational& eps);

// Reflects values about the maximum: x -> max - x, re-sorted ascending.
// House k of the result carries the old house n+1-k, so per-edge envies are
// preserved under the reversing relabeling.
ValueProfile invert_profile(const ValueProfile& p);

// n values start, start+step, ..., equally spaced. step > 0.
ValueProfile evenly_spaced_profile(int n, const Rational& start, const Rational& step);

}  // namespace envymin
