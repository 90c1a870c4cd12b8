#include "envymin/profile.hpp"

#include <algorithm>
#include <numeric>

namespace envymin {

ValueProfile ValueProfile::from_input(const std::vector<Rational>& input) {
  if (input.empty()) throw input_error("value profile must be non-empty");
  std::vector<int> order(input.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return input[a] < input[b]; });
  ValueProfile p;
  p.values.reserve(input.size());
  p.input_index = order;
  for (int i : order) p.values.push_back(input[i]);
  return p;
}

ValueProfile ValueProfile::from_sorted(std::vector<Rational> sorted) {
  if (sorted.empty()) throw input_error("value profile must be non-empty");
  if (!std::is_sorted(sorted.begin(), sorted.end()))
    throw input_error("from_sorted requires ascending values");
  ValueProfile p;
  p.values = std::move(sorted);
  p.input_index.resize(p.values.size());
  std::iota(p.input_index.begin(), p.input_index.end(), 0);
  return p;
}

bool ValueProfile::strictly_increasing() const {
  for (std::size_t k = 1; k < values.size(); ++k)
    if (!(values[k - 1] < values[k])) return false;
  return true;
}

std::vector<Rational> ValueProfile::in_input_order() const {
  std::vector<Rational> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out[input_index[k]] = values[k];
  return out;
}

std::vector<int> ValueProfile::rank_of_input() const {
  std::vector<int> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out[input_index[k]] = static_cast<int>(k);
  return out;
}

ValueMatrix ValueMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) throw input_error("value matrix must be non-empty");
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw input_error("value matrix must be square");
  return ValueMatrix{std::move(rows)};
}

ValueProfile perturb_distinct(const ValueProfile& p, const Rational& eps) {
  if (eps <= 0) throw input_error("perturbation epsilon must be positive");
  const int n = p.size();
  Rational e = eps;
  for (;;) {
    std::vector<Rational> shifted(n);
    Rational denom = Rational(n) * n * 2;
    for (int k = 0; k < n; ++k) {
      shifted[k] = p.values[k] + e / denom;
      denom *= 2;
    }
    // Sorting after the shift keeps every position within max-delta of the
    // original, which is what the envy bound rides on.
    std::sort(shifted.begin(), shifted.end());
    bool strict = true;
    for (int k = 1; k < n; ++k)
      if (!(shifted[k - 1] < shifted[k])) strict = false;
    if (strict) return ValueProfile::from_sorted(std::move(shifted));
    e /= 2;
  }
}

ValueProfile invert_profile(const ValueProfile& p) {
  const Rational& top = p.values.back();
  std::vector<Rational> flipped(p.size());
  for (int k = 0; k < p.size(); ++k)
    flipped[p.size() - 1 - k] = top - p.values[k];
  ValueProfile out;
  out.values = std::move(flipped);
  // House k of the result is old house n-1-k; expose that through input_index
  // so callers can trace identities across the flip.
  out.input_index.resize(p.size());
  for (int k = 0; k < p.size(); ++k) out.input_index[k] = p.size() - 1 - k;
  return out;
}

ValueProfile evenly_spaced_profile(int n, const Rational& start, const Rational& step) {
  if (n < 1) throw input_error("profile size must be at least 1");
  if (step <= 0) throw input_error("spacing must be positive");
  std::vector<Rational> vals(n);
  for (int k = 0; k < n; ++k) vals[k] = start + step * k;
  return ValueProfile::from_sorted(std::move(vals));
}

}  // namespace envymin
