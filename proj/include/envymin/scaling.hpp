#pragma once

#include "envymin/profile.hpp"

namespace envymin {


// Runs fn on integer-scaled values: int64 when the overflow bound allows,
// BigInt otherwise. Envy ratios are preserved, so argmins carry over exactly.
template <typename Fn>
auto with_scaled(const ValueProfile& p, Fn&& fn) {
  if (auto fast = scale_to_int64(p.values)) return fn(*fast);
  return fn(scale_to_bigint(p.values));
}

}  // namespace envymin
