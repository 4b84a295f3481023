#include "lyubgraph/lyubeznik.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lyubgraph/error.hpp"
#include "lyubgraph/gamma.hpp"

namespace lyubgraph {
namespace {

void require_dim(const AbstractArrangement& arr, int min_d, const char* what) {
  if (arr.dim() < min_d) {
    throw DomainError(std::string(what) + " requires dim >= " + std::to_string(min_d) +
                      " (dim = " + std::to_string(arr.dim()) + ")");
  }
}

int count(const AbstractArrangement& arr, int t) {
  return static_cast<int>(gamma(arr, t).component_count());
}

int graph_c(const AbstractArrangement& arr) {
  return arr.dim() >= 2 ? conn_dim(arr).c : conn_dim_bruteforce(arr).c;
}

}  // namespace

int lambda01(const AbstractArrangement& arr) {
  require_dim(arr, 2, "lambda_{0,1}");
  return count(arr, arr.dim() - 1) - 1;
}

int lambda12(const AbstractArrangement& arr) {
  require_dim(arr, 2, "lambda_{1,2}");
  const int d = arr.dim();
  if (d <= 2) return 0;
  return count(arr, d - 2) - count(arr, d - 1);
}

std::vector<int> superdiag_lower_bounds(const AbstractArrangement& arr) {
  require_dim(arr, 3, "superdiagonal bounds");
  const int d = arr.dim();
  const auto profile = gamma_profile(arr);  // profile[t-1] = #Gamma_t
  std::vector<int> out;
  for (int i = 1; i <= d - 2; ++i) {
    out.push_back(static_cast<int>(profile[d - i - 2]) -
                  static_cast<int>(profile[d - i - 1]));
  }
  return out;
}

int lambda_top(const AbstractArrangement& arr) {
  require_dim(arr, 2, "lambda_{d,d}");
  return count(arr, 1);
}

Check check_c2(const AbstractArrangement& arr) {
  require_dim(arr, 3, "the c >= 2 characterization");
  const int c = conn_dim(arr).c;
  const int l01 = lambda01(arr);
  const int l12 = lambda12(arr);
  const bool lhs = c >= 2;
  const bool rhs = l01 == 0 && l12 == 0;
  std::ostringstream detail;
  detail << "c = " << c << ", lambda01 = " << l01 << ", lambda12 = " << l12;
  return {"lambda12_final", lhs == rhs, detail.str()};
}

VanishingBound conn_lower_bound_from_vanishing(const AbstractArrangement& arr) {
  require_dim(arr, 2, "the vanishing bound");
  const int d = arr.dim();
  VanishingBound out;
  // i runs over 0..d-2; #Gamma_{d-i-1} must stay at 1.
  for (int i = 0; i <= d - 2; ++i) {
    if (count(arr, d - i - 1) != 1) break;
    out.bound = i + 1;
  }
  out.c = conn_dim(arr).c;
  out.passed = out.c >= out.bound;
  return out;
}

CountBound count_bound(const AbstractArrangement& arr, int t) {
  const int d = arr.dim();
  if (d < 2 || t < 0 || t > d - 2) {
    throw DomainError("t = " + std::to_string(t) + " outside [0, dim-2] for dim " +
                      std::to_string(d));
  }
  CountBound out;
  out.t = t;
  out.max_components = max_components(arr, t);
  const auto profile = gamma_profile(arr);  // profile[k-1] = #Gamma_k
  const auto at = [&profile](int k) { return static_cast<long>(profile[k - 1]); };
  long sum = at(d - 1);  // 1 + lambda_{0,1}
  for (int i = 1; i <= t; ++i) sum += at(d - i - 1) - at(d - i);
  out.telescoped = static_cast<std::size_t>(sum);
  out.lambda_sum_exact = t <= 1;
  out.passed = out.max_components == out.telescoped;
  return out;
}

LyubeznikTable3 dim3_table(const AbstractArrangement& arr) {
  if (arr.dim() != 3) {
    throw DomainError("dimension-3 table requires dim = 3 (dim = " +
                      std::to_string(arr.dim()) + ")");
  }
  LyubeznikTable3 table;
  for (auto& row : table)
    for (auto& cell : row) cell.value = 0;
  const int l01 = lambda01(arr);
  const int l12 = lambda12(arr);
  table[0][1].value = l01;
  table[1][2].value = l12;
  table[3][3].value = l01 + l12 + 1;
  table[0][2] = {std::nullopt, "u"};
  table[1][3] = {std::nullopt, "u"};
  return table;
}

std::vector<Check> check_depth_cd(const AbstractArrangement& arr,
                                  const UserAsserts& asserts) {
  if (asserts.cd && !asserts.ambient) {
    throw InputError("cd requires the ambient dimension n");
  }
  std::vector<Check> out;
  if (!asserts.depth && !asserts.cd) return out;
  const int c = graph_c(arr);
  if (asserts.depth) {
    std::ostringstream detail;
    detail << "c = " << c << " >= depth - 1 = " << *asserts.depth - 1;
    out.push_back({"depth_bound", c >= *asserts.depth - 1, detail.str()});
  }
  if (asserts.cd) {
    const int rhs = *asserts.ambient - *asserts.cd - 1;
    std::ostringstream detail;
    detail << "c = " << c << " >= n - cd - 1 = " << rhs;
    out.push_back({"cd_bound", c >= rhs, detail.str()});
  }
  return out;
}

bool InvariantReport::all_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

InvariantReport analyze(const AbstractArrangement& arr, const AnalyzeOptions& options) {
  InvariantReport r;
  r.d = arr.dim();
  r.s = arr.size();

  if (options.run_oracle) {
    if (arr.size() <= options.bruteforce_cap) {
      r.c_oracle = conn_dim_bruteforce(arr, options.bruteforce_cap);
    } else {
      r.notes.push_back("brute-force oracle skipped: " + std::to_string(arr.size()) +
                        " primes exceed cap " + std::to_string(options.bruteforce_cap));
    }
  }

  if (r.d < 2) {
    r.notes.push_back("dim <= 1: the graphs Gamma_t are empty; only the "
                      "brute-force connectedness dimension is reported");
    if (!r.c_oracle && arr.size() <= 20) r.c_oracle = conn_dim_bruteforce(arr, 20);
    for (auto& c : check_depth_cd(arr, options.asserts)) r.checks.push_back(std::move(c));
    return r;
  }

  r.gamma_profile = gamma_profile(arr);
  r.c_graph = conn_dim(arr).c;
  r.lambda01 = lambda01(arr);
  r.lambda12 = lambda12(arr);
  r.lambda_top = lambda_top(arr);
  if (r.d >= 3) r.superdiag_lower_bounds = superdiag_lower_bounds(arr);
  for (int e = 0; e <= r.d - 2; ++e) r.max_components.push_back(max_components(arr, e));
  if (r.d == 3) r.dim3_table = dim3_table(arr);

  if (r.d >= 3) r.checks.push_back(check_c2(arr));
  {
    const auto vb = conn_lower_bound_from_vanishing(arr);
    std::ostringstream detail;
    detail << "c = " << vb.c << " >= " << vb.bound;
    r.checks.push_back({"vanishing_conn_bound", vb.passed, detail.str()});
  }
  for (int t = 0; t <= r.d - 2; ++t) {
    const auto cb = count_bound(arr, t);
    std::ostringstream detail;
    detail << "max components " << cb.max_components << " = telescoped sum "
           << cb.telescoped
           << (cb.lambda_sum_exact ? " (equals 1 + sum of lambda_{i,i+1})"
                                   : " (lower bound for 1 + sum of lambda_{i,i+1})");
    r.checks.push_back({"count_bound[t=" + std::to_string(t) + "]", cb.passed, detail.str()});
  }
  {
    const int sum = 1 + *r.lambda01 +
                    std::accumulate(r.superdiag_lower_bounds.begin(),
                                    r.superdiag_lower_bounds.end(), 0);
    std::ostringstream detail;
    detail << "1 + lambda01 + sum of bounds = " << sum << ", #Gamma_1 = "
           << r.gamma_profile.front() << ", lambda_top = " << *r.lambda_top;
    const bool ok = sum == static_cast<int>(r.gamma_profile.front()) &&
                    sum == *r.lambda_top;
    r.checks.push_back({"telescoping", ok, detail.str()});
  }
  {
    const bool flat = std::all_of(r.gamma_profile.begin(), r.gamma_profile.end(),
                                  [](std::size_t n) { return n == 1; });
    const bool ok = !flat || *r.lambda_top == 1;
    r.checks.push_back({"top_from_connected_profile", ok,
                        flat ? "profile all ones, lambda_top = " + std::to_string(*r.lambda_top)
                             : "profile not all ones (vacuous)"});
  }
  if (r.c_oracle) {
    const bool ok = r.c_oracle->c == *r.c_graph;
    r.checks.push_back({"conn_oracle_agreement", ok,
                        "graph c = " + std::to_string(*r.c_graph) +
                            ", cover search c = " + std::to_string(r.c_oracle->c)});
  }
  for (auto& c : check_depth_cd(arr, options.asserts)) r.checks.push_back(std::move(c));
  return r;
}

}  // namespace lyubgraph
