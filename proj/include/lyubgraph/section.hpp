#pragma once

#include <cstddef>
#include <vector>

#include "lyubgraph/arrangement.hpp"
#include "lyubgraph/lyubeznik.hpp"

namespace lyubgraph {

/// A/(x) for a generic linear form x, modeled on a linear-subspace
/// arrangement: every component stays irreducible, so s is unchanged, and
/// each positive pairwise dimension drops by one. Sums that are already
/// primary to the maximal ideal stay so (0 stays 0). Requires d >= 3.
AbstractArrangement generic_section(const AbstractArrangement& arr);

/// k successive generic sections. Each step requires the current d >= 3.
AbstractArrangement iterate_section(const AbstractArrangement& arr, int k);

struct SectionProfileCheck {
  /// (#Gamma_t(A), #Gamma_t(A/(x))) for t = 1..d-2.
  std::vector<std::pair<std::size_t, std::size_t>> per_t;
  Check check;
};

/// #Gamma_t is unchanged by a generic section for 1 <= t <= d-2.
SectionProfileCheck section_profile_check(const AbstractArrangement& arr);

/// c(A/(x)) >= c(A) - 1, with equality when 1 <= c(A) <= d-2.
/// Requires d >= 3 and s > 1.
Check section_conn_check(const AbstractArrangement& arr);

}  // namespace lyubgraph
