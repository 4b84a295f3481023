#include "lyubgraph/connectedness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "lyubgraph/error.hpp"
#include "lyubgraph/gamma.hpp"

namespace lyubgraph {
namespace {

using Mask = std::uint32_t;

std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

// Lexicographic order of the sorted member lists.
bool lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const Mask la = a & (~a + 1);
    const Mask lb = b & (~b + 1);
    if (la != lb) return la < lb;
    a ^= la;
    b ^= lb;
  }
  return a == 0 && b != 0;
}

void check_cap(const AbstractArrangement& arr, std::size_t cap) {
  const std::size_t hard_limit = 20;
  if (arr.size() > cap || arr.size() > hard_limit) {
    throw CapExceeded("brute force over " + std::to_string(arr.size()) +
                      " primes exceeds cap " + std::to_string(std::min(cap, hard_limit)));
  }
}

}  // namespace

ConnResult conn_dim(const AbstractArrangement& arr) {
  const int d = arr.dim();
  if (d <= 1) {
    throw DomainError("graph connectedness dimension is undefined for dim <= 1; "
                      "use the brute-force cover search");
  }
  ConnResult res;
  res.method = ConnResult::Method::graph;
  if (arr.size() == 1) {
    res.c = d;
    return res;
  }
  res.c = 0;
  for (int i = d - 1; i >= 1; --i) {
    if (gamma(arr, d - i).connected()) {
      res.c = i;
      break;
    }
  }
  res.separating_threshold = d - res.c - 1;
  return res;
}

ConnResult conn_dim_bruteforce(const AbstractArrangement& arr, std::size_t cap) {
  check_cap(arr, cap);
  const auto s = arr.size();
  ConnResult res;
  res.method = ConnResult::Method::bruteforce;
  if (s == 1) {
    res.c = arr.dim();
    res.cover = Cover{{0}, {0}};
    return res;
  }

  // row_max[S * s + j] = max over i in S of pairdim(i, j), built from S minus
  // its lowest member.
  const Mask full = (Mask{1} << s) - 1;
  std::vector<int> row_max((std::size_t{full} + 1) * s, std::numeric_limits<int>::min());
  for (Mask set = 1; set <= full; ++set) {
    const Mask low = set & (~set + 1);
    const auto i = static_cast<std::size_t>(std::countr_zero(low));
    const Mask rest = set ^ low;
    for (std::size_t j = 0; j < s; ++j) {
      row_max[set * s + j] = std::max(row_max[rest * s + j], arr.pairdim(i, j));
    }
  }

  // Each prime goes to S only, T only, or both. Swapping S and T preserves
  // the value, so prime 0 is pinned into S.
  int best = std::numeric_limits<int>::max();
  Mask best_s = 0, best_t = 0;
  for (Mask s_set = 1; s_set <= full; s_set += 2) {
    const Mask forced_t = full & ~s_set;
    // T ranges over forced_t plus any subset of S.
    for (Mask extra = s_set;; extra = (extra - 1) & s_set) {
      const Mask t_set = forced_t | extra;
      if (t_set != 0) {
        int value = std::numeric_limits<int>::min();
        for (Mask rest = t_set; rest != 0; rest &= rest - 1) {
          const auto j = static_cast<std::size_t>(std::countr_zero(rest));
          value = std::max(value, row_max[s_set * s + j]);
        }
        const bool better =
            value < best ||
            (value == best && (lex_less(s_set, best_s) ||
                               (s_set == best_s && lex_less(t_set, best_t))));
        if (better) {
          best = value;
          best_s = s_set;
          best_t = t_set;
        }
      }
      if (extra == 0) break;
    }
  }
  res.c = best;
  res.cover = Cover{members(best_s), members(best_t)};
  return res;
}

std::size_t max_components(const AbstractArrangement& arr, int e) {
  const int d = arr.dim();
  if (d < 2 || e < 0 || e > d - 2) {
    throw DomainError("dimension bound e = " + std::to_string(e) +
                      " outside [0, dim-2] for dim " + std::to_string(d));
  }
  return gamma(arr, d - e - 1).component_count();
}

namespace {

struct PartitionSearch {
  const AbstractArrangement& arr;
  int bound;
  std::vector<std::size_t> block_of;
  std::size_t blocks = 0;
  std::size_t best = 0;

  // A vertex may join block b only if every already-placed vertex outside b
  // is within the bound.
  bool admissible(std::size_t v, std::size_t b) const {
    for (std::size_t u = 0; u < v; ++u)
      if (block_of[u] != b && arr.pairdim(u, v) > bound) return false;
    return true;
  }

  void place(std::size_t v) {
    const auto s = arr.size();
    if (v == s) {
      best = std::max(best, blocks);
      return;
    }
    if (blocks + (s - v) <= best) return;
    // Opening a new block first finds large partitions early.
    if (admissible(v, blocks)) {
      block_of[v] = blocks++;
      place(v + 1);
      --blocks;
    }
    for (std::size_t b = 0; b < blocks; ++b) {
      if (!admissible(v, b)) continue;
      block_of[v] = b;
      place(v + 1);
    }
  }
};

}  // namespace

std::size_t max_components_bruteforce(const AbstractArrangement& arr, int e,
                                      std::size_t cap) {
  check_cap(arr, cap);
  const int d = arr.dim();
  if (e < 0 || e > d - 2) {
    throw DomainError("dimension bound e = " + std::to_string(e) +
                      " outside [0, dim-2] for dim " + std::to_string(d));
  }
  PartitionSearch search{arr, e, std::vector<std::size_t>(arr.size(), 0)};
  search.place(0);
  return search.best;
}

}  // namespace lyubgraph
