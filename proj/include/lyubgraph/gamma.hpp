#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lyubgraph/arrangement.hpp"

namespace lyubgraph {

/// The graph Gamma_t on the minimal primes: i ~ j when ht(p_i + p_j) <= t,
/// i.e. when pairdim(i, j) >= d - t.
///
/// Components are labeled canonically by their smallest vertex, and the
/// component list is ordered by that label.
class GammaGraph {
 public:
  using EdgeRule = std::function<bool(std::size_t, std::size_t)>;

  /// Builds the graph on `vertices` vertices whose edges are the pairs i < j
  /// accepted by `edge`. Components come from union-find.
  GammaGraph(int threshold, std::size_t vertices, const EdgeRule& edge);

  int threshold() const { return threshold_; }
  std::size_t vertex_count() const { return n_; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return i != j && adjacency_[i * n_ + j];
  }
  std::size_t edge_count() const;

  std::size_t component_count() const { return component_count_; }
  /// Smallest vertex of the component containing `v`.
  std::size_t component_label(std::size_t v) const { return label_[v]; }
  /// Vertex classes, each sorted, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  bool connected() const { return component_count_ == 1; }

 private:
  int threshold_;
  std::size_t n_;
  std::vector<char> adjacency_;
  std::vector<std::size_t> label_;
  std::size_t component_count_ = 0;
};

/// Gamma_t(A) for 1 <= t <= d-1. Throws DomainError when d < 2 or t is out
/// of range.
GammaGraph gamma(const AbstractArrangement& arr, int t);

std::size_t component_count(const GammaGraph& g);

/// [#Gamma_1, ..., #Gamma_{d-1}]. Non-increasing. Requires d >= 2.
std::vector<std::size_t> gamma_profile(const AbstractArrangement& arr);

}  // namespace lyubgraph
