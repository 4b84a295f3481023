#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lyubgraph/arrangement.hpp"
#include "lyubgraph/connectedness.hpp"

namespace lyubgraph {

/// Limits on generated instances. Masks are 64-bit, and exhaustive runs grow
/// roughly like C(C(n, n/2), s).
inline constexpr int kSweepMaxVariables = 63;
inline constexpr int kSweepMaxExhaustiveVariables = 10;

struct SweepConfig {
  int max_n = 8;
  int max_s = 4;
  /// Every equidimensional arrangement with n <= max_n, s <= max_s, instead
  /// of `count` random ones.
  bool exhaustive = false;
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t bruteforce_cap = kDefaultBruteforceCap;
  /// Failing instances are written here as JSON when set.
  std::optional<std::filesystem::path> repro_dir;
  /// Test hook applied to the arrangement handed to the brute-force side of
  /// each oracle comparison.
  std::function<AbstractArrangement(const AbstractArrangement&)> oracle_mutation;
};

struct CheckTally {
  std::size_t run = 0;
  std::size_t failed = 0;
};

struct SweepFailure {
  std::string check;
  std::size_t instance = 0;
  std::string detail;
  std::optional<std::filesystem::path> repro_file;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::map<std::string, CheckTally> tallies;
  std::vector<SweepFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Calls `visit` on every equidimensional coordinate arrangement with
/// 2 <= n <= max_n and 1 <= s <= max_s (primes of equal size h, 1 <= h < n),
/// in a fixed order.
void for_each_equidimensional(int max_n, int max_s,
                              const std::function<void(const CoordinateArrangement&)>& visit);

/// Seeded stream of equidimensional arrangements: n, h, s are drawn
/// uniformly, then s distinct h-subsets by rejection. Same seed, same stream.
class RandomArrangementGenerator {
 public:
  RandomArrangementGenerator(std::uint64_t seed, int max_n, int max_s);
  CoordinateArrangement next();

 private:
  std::uint64_t below(std::uint64_t bound);

  std::mt19937_64 rng_;
  int max_n_;
  int max_s_;
};

/// Runs every invariant check on one instance and records results in
/// `summary`.
void check_instance(const CoordinateArrangement& arr, const SweepConfig& config,
                    SweepSummary& summary);

/// Throws CapExceeded when the parameters are outside the supported range.
SweepSummary sweep(const SweepConfig& config);

}  // namespace lyubgraph
