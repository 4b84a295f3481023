#include "lyubgraph/projective.hpp"

#include <algorithm>

#include "lyubgraph/error.hpp"

namespace lyubgraph {

ProjectiveVariety::ProjectiveVariety(int d, std::vector<std::vector<int>> inter_dim,
                                     std::vector<std::string> labels)
    : d_(d), inter_dim_(std::move(inter_dim)), labels_(std::move(labels)) {
  const auto s = inter_dim_.size();
  if (d_ < 0) throw InputError("projective dimension must be non-negative");
  if (s == 0) throw InputError("variety has no components");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < s; ++i) labels_.push_back("Z" + std::to_string(i + 1));
  } else if (labels_.size() != s) {
    throw InputError("expected " + std::to_string(s) + " component labels, got " +
                     std::to_string(labels_.size()));
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (inter_dim_[i].size() != s) {
      throw InputError("inter_dim row " + std::to_string(i + 1) + " has the wrong length");
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (inter_dim_[i][i] != d_) {
      throw InputError("inter_dim diagonal must equal dim (non-equidimensional input)");
    }
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      const auto v = inter_dim_[i][j];
      const auto where = "inter_dim[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
      if (v != inter_dim_[j][i]) throw InputError(where + " breaks symmetry");
      if (v < -1 || v > d_ - 1) throw InputError(where + " outside [-1, dim-1]");
    }
  }
}

GammaGraph gamma_proj(const ProjectiveVariety& x, int t) {
  const int d = x.dim();
  if (d < 1 || t < 1 || t > d) {
    throw DomainError("threshold t = " + std::to_string(t) + " outside [1, " +
                      std::to_string(d) + "]");
  }
  return GammaGraph(t, x.size(), [&x, need = d - t](std::size_t i, std::size_t j) {
    return x.inter_dim(i, j) >= need;
  });
}

std::vector<std::size_t> gamma_profile_proj(const ProjectiveVariety& x) {
  std::vector<std::size_t> out;
  for (int t = 1; t <= x.dim(); ++t) out.push_back(gamma_proj(x, t).component_count());
  return out;
}

AbstractArrangement cone(const ProjectiveVariety& x) {
  auto m = x.inter_dims();
  for (auto& row : m)
    for (auto& v : row) v += 1;
  return AbstractArrangement(x.dim() + 1, std::move(m));
}

int lambda12_proj(const ProjectiveVariety& x) {
  const int d = x.dim();
  if (d < 2) throw DomainError("lambda_{1,2} of a projective variety requires dim >= 2");
  return static_cast<int>(gamma_proj(x, d - 1).component_count()) -
         static_cast<int>(gamma_proj(x, d).component_count());
}

std::vector<int> superdiag_lower_bounds_proj(const ProjectiveVariety& x) {
  const int d = x.dim();
  if (d < 3) throw DomainError("projective superdiagonal bounds require dim >= 3");
  std::vector<int> out;
  for (int i = 2; i <= d - 1; ++i) {
    out.push_back(static_cast<int>(gamma_proj(x, d - i).component_count()) -
                  static_cast<int>(gamma_proj(x, d - i + 1).component_count()));
  }
  return out;
}

bool ProjectiveReport::all_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

ProjectiveReport analyze_projective(const ProjectiveVariety& x) {
  ProjectiveReport r;
  r.d = x.dim();
  r.s = x.size();
  if (r.d < 1) return r;
  const auto a = cone(x);
  r.gamma_profile = gamma_profile_proj(x);
  r.cone_profile = gamma_profile(a);
  r.checks.push_back({"cone_graphs", r.gamma_profile == r.cone_profile,
                      "#Gamma_t(X) against #Gamma_t(cone(X)) for t = 1..d"});
  if (r.d >= 2) {
    r.lambda12 = lambda12_proj(x);
    const int on_cone = lambda12(a);
    r.checks.push_back({"cone_lambda12", *r.lambda12 == on_cone,
                        "lambda12(X) = " + std::to_string(*r.lambda12) +
                            ", lambda12(cone) = " + std::to_string(on_cone)});
  }
  if (r.d >= 3) {
    r.superdiag_lower_bounds = superdiag_lower_bounds_proj(x);
    const auto on_cone = superdiag_lower_bounds(a);
    const bool ok = std::equal(r.superdiag_lower_bounds.begin(),
                               r.superdiag_lower_bounds.end(), on_cone.begin() + 1);
    r.checks.push_back({"cone_superdiag_bounds", ok,
                        "bounds for i = 2..d-1 against the cone"});
  }
  return r;
}

}  // namespace lyubgraph
