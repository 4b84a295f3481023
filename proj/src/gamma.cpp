#include "lyubgraph/gamma.hpp"

#include "lyubgraph/error.hpp"

namespace lyubgraph {

GammaGraph::GammaGraph(int threshold, std::size_t vertices, const EdgeRule& edge)
    : threshold_(threshold), n_(vertices), adjacency_(vertices * vertices, 0), label_(vertices) {
  // Union-find with path halving. label_ doubles as the parent array; the
  // smaller root always wins, so every root is the least vertex of its class.
  for (std::size_t v = 0; v < n_; ++v) label_[v] = v;
  const auto find = [this](std::size_t v) {
    while (label_[v] != v) {
      label_[v] = label_[label_[v]];
      v = label_[v];
    }
    return v;
  };
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!edge(i, j)) continue;
      adjacency_[i * n_ + j] = adjacency_[j * n_ + i] = 1;
      const auto a = find(i);
      const auto b = find(j);
      if (a < b) {
        label_[b] = a;
      } else if (b < a) {
        label_[a] = b;
      }
    }
  }
  for (std::size_t v = 0; v < n_; ++v) {
    label_[v] = find(v);
    if (label_[v] == v) ++component_count_;
  }
}

std::size_t GammaGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) count += adjacency_[i * n_ + j];
  return count;
}

std::vector<std::vector<std::size_t>> GammaGraph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n_, 0);
  for (std::size_t v = 0; v < n_; ++v) {
    if (label_[v] == v) {
      slot[v] = out.size();
      out.push_back({});
    }
    out[slot[label_[v]]].push_back(v);
  }
  return out;
}

GammaGraph gamma(const AbstractArrangement& arr, int t) {
  const int d = arr.dim();
  if (d < 2) {
    throw DomainError("Gamma_t is defined only for dim >= 2 (dim = " +
                      std::to_string(d) + ")");
  }
  if (t < 1 || t > d - 1) {
    throw DomainError("threshold t = " + std::to_string(t) + " outside [1, " +
                      std::to_string(d - 1) + "]");
  }
  return GammaGraph(t, arr.size(), [&arr, need = d - t](std::size_t i, std::size_t j) {
    return arr.pairdim(i, j) >= need;
  });
}

std::size_t component_count(const GammaGraph& g) { return g.component_count(); }

std::vector<std::size_t> gamma_profile(const AbstractArrangement& arr) {
  if (arr.dim() < 2) {
    throw DomainError("gamma profile requires dim >= 2");
  }
  std::vector<std::size_t> out;
  out.reserve(arr.dim() - 1);
  for (int t = 1; t <= arr.dim() - 1; ++t) out.push_back(gamma(arr, t).component_count());
  return out;
}

}  // namespace lyubgraph
