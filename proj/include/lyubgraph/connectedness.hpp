#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lyubgraph/arrangement.hpp"

namespace lyubgraph {

inline constexpr std::size_t kDefaultBruteforceCap = 16;

/// A cover S U T = [s] of the minimal primes, both sides nonempty.
/// Indices are 0-based.
struct Cover {
  std::vector<std::size_t> s_side;
  std::vector<std::size_t> t_side;

  friend bool operator==(const Cover&, const Cover&) = default;
};

struct ConnResult {
  enum class Method { graph, bruteforce };

  int c = 0;
  Method method = Method::graph;
  /// Minimizing cover (brute force only).
  std::optional<Cover> cover;
  /// Smallest t with Gamma_t disconnected, i.e. d - c - 1 (graph only, s > 1).
  std::optional<int> separating_threshold;
};

/// Connectedness dimension from the graph family: c = d when s = 1, else the
/// largest i >= 1 with Gamma_{d-i} connected, or 0 if Gamma_{d-1} is
/// disconnected. Throws DomainError when d <= 1.
ConnResult conn_dim(const AbstractArrangement& arr);

/// Connectedness dimension as the minimum, over covers S U T = [s] with S, T
/// nonempty, of the largest pairdim between a prime in S and one in T.
/// The witness is the lexicographically least minimizing cover.
/// Throws CapExceeded when s > cap.
ConnResult conn_dim_bruteforce(const AbstractArrangement& arr,
                               std::size_t cap = kDefaultBruteforceCap);

/// Maximum number of connected components of Spec(A) minus a closed set of
/// dimension <= e; equals #Gamma_{d-e-1}. Requires 0 <= e <= d-2.
std::size_t max_components(const AbstractArrangement& arr, int e);

/// Same quantity by searching set partitions of the primes whose cross-block
/// pairs all have pairdim <= e. Does not touch the graph code.
std::size_t max_components_bruteforce(const AbstractArrangement& arr, int e,
                                      std::size_t cap = kDefaultBruteforceCap);

}  // namespace lyubgraph
