#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lyubgraph/arrangement.hpp"
#include "lyubgraph/gamma.hpp"
#include "lyubgraph/lyubeznik.hpp"

namespace lyubgraph {

/// An equidimensional projective variety X of dimension d, given by its
/// irreducible components over the algebraic closure and the dimensions of
/// their pairwise intersections. An empty intersection is encoded as -1.
///
/// No ambient projective space appears anywhere in this data, so every
/// quantity derived from it is independent of the embedding.
class ProjectiveVariety {
 public:
  /// Throws InputError unless inter_dim is square and symmetric with diagonal
  /// d and off-diagonal entries in [-1, d-1]. Empty `labels` become Z1..Zs.
  ProjectiveVariety(int d, std::vector<std::vector<int>> inter_dim,
                    std::vector<std::string> labels = {});

  int dim() const { return d_; }
  std::size_t size() const { return inter_dim_.size(); }
  int inter_dim(std::size_t i, std::size_t j) const { return inter_dim_[i][j]; }
  const std::vector<std::vector<int>>& inter_dims() const { return inter_dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int d_;
  std::vector<std::vector<int>> inter_dim_;
  std::vector<std::string> labels_;
};

/// Gamma_t(X): Z_i ~ Z_j when dim(Z_i cap Z_j) >= d - t. Requires
/// 1 <= t <= d.
GammaGraph gamma_proj(const ProjectiveVariety& x, int t);

/// [#Gamma_1(X), ..., #Gamma_d(X)].
std::vector<std::size_t> gamma_profile_proj(const ProjectiveVariety& x);

/// The local ring at the vertex of the affine cone: dimension d + 1 and
/// pairdim = inter_dim + 1, so disjoint components meet only at the vertex.
AbstractArrangement cone(const ProjectiveVariety& x);

/// lambda_{1,2} of the cone, #Gamma_{d-1}(X) - #Gamma_d(X). Requires d >= 2.
int lambda12_proj(const ProjectiveVariety& x);

/// Lower bounds for lambda_{i,i+1} of the cone, i = 2..d-1; element i-2
/// holds #Gamma_{d-i}(X) - #Gamma_{d-i+1}(X). Requires d >= 3.
std::vector<int> superdiag_lower_bounds_proj(const ProjectiveVariety& x);

struct ProjectiveReport {
  int d = 0;
  std::size_t s = 0;
  /// #Gamma_t(X) for t = 1..d.
  std::vector<std::size_t> gamma_profile;
  /// #Gamma_t(cone(X)) for t = 1..d.
  std::vector<std::size_t> cone_profile;
  std::optional<int> lambda12;
  /// Entry k bounds lambda_{k+2,k+3} of the cone.
  std::vector<int> superdiag_lower_bounds;
  std::vector<Check> checks;

  bool all_checks_passed() const;
};

/// Everything computable from X, plus cross-checks against its cone.
ProjectiveReport analyze_projective(const ProjectiveVariety& x);

}  // namespace lyubgraph
