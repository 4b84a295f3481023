#include "lyubgraph/section.hpp"

#include <algorithm>
#include <sstream>

#include "lyubgraph/connectedness.hpp"
#include "lyubgraph/error.hpp"
#include "lyubgraph/gamma.hpp"

namespace lyubgraph {
namespace {

void require_sectionable(const AbstractArrangement& arr) {
  if (arr.dim() < 3) {
    throw DomainError("generic sections are only modeled for dim >= 3 (dim = " +
                      std::to_string(arr.dim()) + ")");
  }
}

}  // namespace

AbstractArrangement generic_section(const AbstractArrangement& arr) {
  require_sectionable(arr);
  auto m = arr.matrix();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = std::max(m[i][j] - 1, 0);
  return AbstractArrangement(arr.dim() - 1, std::move(m));
}

AbstractArrangement iterate_section(const AbstractArrangement& arr, int k) {
  if (k < 0) throw DomainError("section count must be non-negative");
  AbstractArrangement out = arr;
  for (int step = 0; step < k; ++step) out = generic_section(out);
  return out;
}

SectionProfileCheck section_profile_check(const AbstractArrangement& arr) {
  require_sectionable(arr);
  const auto cut = generic_section(arr);
  SectionProfileCheck out;
  out.check.name = "section_profile";
  out.check.passed = true;
  std::ostringstream detail;
  for (int t = 1; t <= arr.dim() - 2; ++t) {
    const auto before = gamma(arr, t).component_count();
    const auto after = gamma(cut, t).component_count();
    out.per_t.emplace_back(before, after);
    if (before != after) out.check.passed = false;
    detail << (t > 1 ? ", " : "") << "t=" << t << ": " << before << " -> " << after;
  }
  out.check.detail = detail.str();
  return out;
}

Check section_conn_check(const AbstractArrangement& arr) {
  require_sectionable(arr);
  if (arr.size() < 2) {
    throw DomainError("section connectedness check requires at least two primes");
  }
  const int d = arr.dim();
  const int c = conn_dim(arr).c;
  const int c_cut = conn_dim(generic_section(arr)).c;
  const bool exact_branch = c >= 1 && c <= d - 2;
  const bool ok = c_cut >= c - 1 && (!exact_branch || c_cut == c - 1);
  std::ostringstream detail;
  detail << "c = " << c << ", c after section = " << c_cut
         << (exact_branch ? " (expected exactly c - 1)" : " (expected >= c - 1)");
  return {"section_conn", ok, detail.str()};
}

}  // namespace lyubgraph
