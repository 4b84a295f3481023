#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lyubgraph/arrangement.hpp"
#include "lyubgraph/connectedness.hpp"

namespace lyubgraph {

/// Outcome of one theorem-level consistency check.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// lambda_{0,1} = #Gamma_{d-1} - 1. Requires d >= 2.
int lambda01(const AbstractArrangement& arr);

/// lambda_{1,2}: 0 when d <= 2, otherwise #Gamma_{d-2} - #Gamma_{d-1}.
int lambda12(const AbstractArrangement& arr);

/// Lower bounds for lambda_{i,i+1}, i = 1..d-2: element i-1 holds
/// #Gamma_{d-i-1} - #Gamma_{d-i}. Only the i = 1 entry is an exact value.
/// Requires d >= 3.
std::vector<int> superdiag_lower_bounds(const AbstractArrangement& arr);

/// lambda_{d,d} = #Gamma_1. Requires d >= 2.
int lambda_top(const AbstractArrangement& arr);

/// c >= 2 iff lambda_{0,1} = lambda_{1,2} = 0. Requires d >= 3.
Check check_c2(const AbstractArrangement& arr);

struct VanishingBound {
  /// i* + 1, where i* is the largest index with #Gamma_{d-1} = ... =
  /// #Gamma_{d-i*-1} = 1; 0 when #Gamma_{d-1} > 1.
  int bound = 0;
  int c = 0;
  bool passed = false;
};

/// Lower bound on c forced by a vanishing prefix of the superdiagonal.
VanishingBound conn_lower_bound_from_vanishing(const AbstractArrangement& arr);

struct CountBound {
  int t = 0;
  std::size_t max_components = 0;
  /// 1 + lambda_{0,1} + sum_{i=1}^{t} (#Gamma_{d-i-1} - #Gamma_{d-i}).
  std::size_t telescoped = 0;
  /// True for t <= 1, where the telescoped sum is the actual
  /// 1 + sum lambda_{i,i+1}. For t >= 2 it only bounds that sum from below.
  bool lambda_sum_exact = false;
  bool passed = false;
};

/// Compares the maximal number of components after removing a closed set of
/// dimension <= t against the superdiagonal sum. Requires 0 <= t <= d-2.
CountBound count_bound(const AbstractArrangement& arr, int t);

/// One cell of a Lyubeznik table: a value, or a named unknown.
struct TableEntry {
  std::optional<int> value;
  std::string unknown;
};

using LyubeznikTable3 = std::array<std::array<TableEntry, 4>, 4>;

/// Lyubeznik table of a dimension-3 ring. lambda_{0,2} = lambda_{1,3} is not
/// determined by the graphs and appears as the unknown "u". Requires d = 3.
LyubeznikTable3 dim3_table(const AbstractArrangement& arr);

/// Values the caller asserts about A; they are not computed here.
struct UserAsserts {
  std::optional<int> depth;
  std::optional<int> cd;
  /// Dimension n of the regular ring R, needed with cd.
  std::optional<int> ambient;
};

/// c >= depth - 1 and c >= n - cd - 1. Throws InputError when cd is given
/// without the ambient dimension.
std::vector<Check> check_depth_cd(const AbstractArrangement& arr,
                                  const UserAsserts& asserts);

struct InvariantReport {
  int d = 0;
  std::size_t s = 0;
  std::vector<std::size_t> gamma_profile;
  std::optional<int> c_graph;
  std::optional<ConnResult> c_oracle;
  std::optional<int> lambda01;
  std::optional<int> lambda12;
  std::optional<int> lambda_top;
  /// Entry k is the bound for lambda_{k+1,k+2}.
  std::vector<int> superdiag_lower_bounds;
  /// Entry e is max_components(arr, e).
  std::vector<std::size_t> max_components;
  std::optional<LyubeznikTable3> dim3_table;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool all_checks_passed() const;
};

struct AnalyzeOptions {
  bool run_oracle = true;
  std::size_t bruteforce_cap = kDefaultBruteforceCap;
  UserAsserts asserts;
};

InvariantReport analyze(const AbstractArrangement& arr,
                        const AnalyzeOptions& options = {});

}  // namespace lyubgraph
