#include "lyubgraph/sweep.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>

#include "lyubgraph/error.hpp"
#include "lyubgraph/gamma.hpp"
#include "lyubgraph/io.hpp"
#include "lyubgraph/lyubeznik.hpp"
#include "lyubgraph/section.hpp"

namespace lyubgraph {
namespace {

using Mask = std::uint64_t;

CoordinateArrangement from_masks(int n, const std::vector<Mask>& masks) {
  std::vector<VariableSet> primes;
  primes.reserve(masks.size());
  for (auto m : masks) {
    VariableSet p(static_cast<std::size_t>(n));
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      p.insert(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    primes.push_back(std::move(p));
  }
  return CoordinateArrangement(static_cast<std::size_t>(n), std::move(primes));
}

// All h-subsets of {0..n-1} in increasing numeric order (Gosper's hack).
std::vector<Mask> subsets_of_size(int n, int h) {
  std::vector<Mask> out;
  const Mask limit = Mask{1} << n;
  for (Mask m = (Mask{1} << h) - 1; m < limit;) {
    out.push_back(m);
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

class Recorder {
 public:
  Recorder(const CoordinateArrangement& arr, const SweepConfig& config, SweepSummary& summary)
      : arr_(arr), config_(config), summary_(summary), instance_(summary.instances) {}

  void record(const std::string& check, bool passed, const std::string& detail = {}) {
    auto& tally = summary_.tallies[check];
    ++tally.run;
    if (passed) return;
    ++tally.failed;
    SweepFailure failure{check, instance_, detail, std::nullopt};
    if (config_.repro_dir) {
      std::filesystem::create_directories(*config_.repro_dir);
      const auto file = *config_.repro_dir /
                        ("repro_" + std::to_string(instance_) + "_" + sanitize(check) + ".json");
      std::ofstream out(file, std::ios::binary);
      out << to_json(arr_).dump(2) << "\n";
      failure.repro_file = file;
    }
    summary_.failures.push_back(std::move(failure));
  }

 private:
  static std::string sanitize(std::string s) {
    for (auto& ch : s)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') ch = '_';
    return s;
  }

  const CoordinateArrangement& arr_;
  const SweepConfig& config_;
  SweepSummary& summary_;
  std::size_t instance_;
};

std::string pair_text(long a, long b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace

void for_each_equidimensional(int max_n, int max_s,
                              const std::function<void(const CoordinateArrangement&)>& visit) {
  for (int n = 2; n <= max_n; ++n) {
    for (int h = 1; h < n; ++h) {
      const auto pool = subsets_of_size(n, h);
      const int top = std::min<int>(max_s, static_cast<int>(pool.size()));
      for (int s = 1; s <= top; ++s) {
        // Index combinations of the pool in lexicographic order.
        std::vector<std::size_t> pick(s);
        for (int k = 0; k < s; ++k) pick[k] = k;
        std::vector<Mask> masks(s);
        while (true) {
          for (int k = 0; k < s; ++k) masks[k] = pool[pick[k]];
          visit(from_masks(n, masks));
          int k = s - 1;
          while (k >= 0 && pick[k] == pool.size() - s + k) --k;
          if (k < 0) break;
          ++pick[k];
          for (int m = k + 1; m < s; ++m) pick[m] = pick[m - 1] + 1;
        }
      }
    }
  }
}

RandomArrangementGenerator::RandomArrangementGenerator(std::uint64_t seed, int max_n, int max_s)
    : rng_(seed), max_n_(max_n), max_s_(max_s) {
  if (max_n < 2 || max_n > kSweepMaxVariables) {
    throw CapExceeded("max_n must lie in [2, " + std::to_string(kSweepMaxVariables) + "]");
  }
  if (max_s < 1) throw CapExceeded("max_s must be at least 1");
}

std::uint64_t RandomArrangementGenerator::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased and independent of the standard
  // library's distribution implementation.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = rng_();
  } while (v >= limit);
  return v % bound;
}

CoordinateArrangement RandomArrangementGenerator::next() {
  const int n = 2 + static_cast<int>(below(static_cast<std::uint64_t>(max_n_ - 1)));
  const int h = 1 + static_cast<int>(below(static_cast<std::uint64_t>(n - 1)));
  // C(n, h) without overflow for n <= 63 once it passes max_s.
  std::uint64_t available = 1;
  for (int k = 1; k <= h && available < static_cast<std::uint64_t>(max_s_); ++k) {
    available = available * static_cast<std::uint64_t>(n - h + k) / static_cast<std::uint64_t>(k);
  }
  const int s_top = static_cast<int>(std::min<std::uint64_t>(available, max_s_));
  const int s = 1 + static_cast<int>(below(static_cast<std::uint64_t>(s_top)));

  std::vector<Mask> masks;
  while (static_cast<int>(masks.size()) < s) {
    std::vector<int> vars(n);
    for (int v = 0; v < n; ++v) vars[v] = v;
    Mask m = 0;
    for (int k = 0; k < h; ++k) {
      const auto pick = k + static_cast<int>(below(static_cast<std::uint64_t>(n - k)));
      std::swap(vars[k], vars[pick]);
      m |= Mask{1} << vars[k];
    }
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
  }
  return from_masks(n, masks);
}

void check_instance(const CoordinateArrangement& coord, const SweepConfig& config,
                    SweepSummary& summary) {
  Recorder rec(coord, config, summary);
  const auto arr = to_abstract(coord);
  const auto oracle_arr = config.oracle_mutation ? config.oracle_mutation(arr) : arr;
  const int d = arr.dim();
  const auto s = arr.size();

  const auto brute = conn_dim_bruteforce(oracle_arr, config.bruteforce_cap);
  rec.record("conn_extremes", (brute.c == d) == (s == 1),
             "c = " + std::to_string(brute.c) + ", d = " + std::to_string(d));
  if (d < 2) return;

  const auto graph = conn_dim(arr);
  rec.record("conn_oracle", graph.c == brute.c, pair_text(graph.c, brute.c));
  for (int e = 0; e <= d - 2; ++e) {
    const auto a = max_components(arr, e);
    const auto b = max_components_bruteforce(oracle_arr, e, config.bruteforce_cap);
    rec.record("max_components_oracle", a == b,
               "e = " + std::to_string(e) + ": " + pair_text(static_cast<long>(a), static_cast<long>(b)));
  }

  const auto profile = gamma_profile(arr);
  for (std::size_t t = 1; t < profile.size(); ++t) {
    rec.record("profile_monotone", profile[t] <= profile[t - 1]);
  }

  const int l01 = lambda01(arr);
  const int l12 = lambda12(arr);
  const int top = lambda_top(arr);
  {
    long sum = 1 + l01;
    if (d >= 3) {
      for (int b : superdiag_lower_bounds(arr)) {
        rec.record("bounds_nonnegative", b >= 0);
        sum += b;
      }
    }
    rec.record("telescoping", sum == static_cast<long>(profile.front()) && sum == top,
               "sum = " + std::to_string(sum) + ", lambda_top = " + std::to_string(top));
    bool flat = true;
    for (auto c : profile) flat = flat && c == 1;
    if (flat) rec.record("top_from_connected_profile", top == 1);
  }

  rec.record("count_conn_comp_t0", max_components(arr, 0) == static_cast<std::size_t>(1 + l01));
  if (d >= 3) {
    rec.record("count_conn_comp_t1",
               max_components(arr, 1) == static_cast<std::size_t>(1 + l01 + l12));
    const auto c2 = check_c2(arr);
    rec.record("lambda12_final", c2.passed, c2.detail);
    for (int t = 0; t <= d - 2; ++t) rec.record("count_bound_telescoped", count_bound(arr, t).passed);
  }

  const auto vb = conn_lower_bound_from_vanishing(arr);
  rec.record("vanishing_conn_bound", vb.passed);

  // c >= i and #Gamma_{d-i-1} = 1 imply c >= i + 1, using the cover-search c.
  for (int i = 0; i <= d - 2; ++i) {
    if (brute.c >= i && profile[d - i - 2] == 1) {
      rec.record("conn_dim_up", brute.c >= i + 1, "i = " + std::to_string(i));
    }
  }

  if (d >= 3) {
    const auto sp = section_profile_check(arr);
    rec.record("section_profile", sp.check.passed, sp.check.detail);
    if (s > 1) {
      const auto sc = section_conn_check(arr);
      rec.record("section_conn", sc.passed, sc.detail);
    }
    const auto cut = generic_section(arr);
    rec.record("section_equidimensional",
               cut.dim() == d - 1 && cut.size() == s);
  }
}

SweepSummary sweep(const SweepConfig& config) {
  if (config.max_s < 1 || static_cast<std::size_t>(config.max_s) > config.bruteforce_cap) {
    throw CapExceeded("max_s = " + std::to_string(config.max_s) +
                      " must lie in [1, brute-force cap " +
                      std::to_string(config.bruteforce_cap) + "]");
  }
  SweepSummary summary;
  const auto run_one = [&](const CoordinateArrangement& arr) {
    check_instance(arr, config, summary);
    ++summary.instances;
  };
  if (config.exhaustive) {
    if (config.max_n < 2 || config.max_n > kSweepMaxExhaustiveVariables) {
      throw CapExceeded("exhaustive sweeps support 2 <= max_n <= " +
                        std::to_string(kSweepMaxExhaustiveVariables));
    }
    for_each_equidimensional(config.max_n, config.max_s, run_one);
  } else {
    RandomArrangementGenerator gen(config.seed, config.max_n, config.max_s);
    for (std::size_t k = 0; k < config.count; ++k) run_one(gen.next());
  }
  return summary;
}

}  // namespace lyubgraph
