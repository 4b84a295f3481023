#include "lyubgraph/arrangement.hpp"

#include <algorithm>

#include "lyubgraph/error.hpp"

namespace lyubgraph {

VariableSet::VariableSet(std::size_t universe,
                         std::initializer_list<std::size_t> members)
    : bits_(universe) {
  for (auto m : members) insert(m);
}

VariableSet VariableSet::from_indices(std::size_t universe,
                                      const std::vector<std::size_t>& members) {
  VariableSet out(universe);
  for (auto m : members) out.insert(m);
  return out;
}

VariableSet& VariableSet::insert(std::size_t var) {
  if (var >= bits_.size()) {
    throw InputError("variable index " + std::to_string(var) +
                     " outside universe of size " +
                     std::to_string(bits_.size()));
  }
  bits_.set(var);
  return *this;
}

VariableSet VariableSet::operator|(const VariableSet& other) const {
  return VariableSet(bits_ | other.bits_);
}

std::size_t VariableSet::union_cardinality(const VariableSet& other) const {
  return (bits_ | other.bits_).count();
}

std::vector<std::size_t> VariableSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
       i = bits_.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

std::vector<VariableSet> minimalize(const std::vector<VariableSet>& primes) {
  std::vector<VariableSet> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto& p = primes[i];
    bool keep = true;
    for (std::size_t j = 0; j < primes.size() && keep; ++j) {
      if (i == j) continue;
      const auto& q = primes[j];
      // A strictly smaller member, or an equal member seen earlier.
      if (q.is_subset_of(p) && (!(q == p) || j < i)) keep = false;
    }
    if (keep) out.push_back(p);
  }
  return out;
}

CoordinateArrangement::CoordinateArrangement(std::size_t n,
                                             std::vector<VariableSet> primes,
                                             std::vector<std::string> labels)
    : n_(n), primes_(std::move(primes)), labels_(std::move(labels)) {
  if (primes_.empty()) throw InputError("arrangement has no primes");
  if (labels_.empty()) {
    for (std::size_t v = 0; v < n_; ++v) labels_.push_back("x" + std::to_string(v + 1));
  } else if (labels_.size() != n_) {
    throw InputError("expected " + std::to_string(n_) + " variable labels, got " +
                     std::to_string(labels_.size()));
  }
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const auto& p = primes_[i];
    const auto where = "prime " + std::to_string(i + 1);
    if (p.universe() != n_) throw InputError(where + " has the wrong variable universe");
    if (p.empty()) throw InputError(where + " is empty");
    if (p.full()) throw InputError(where + " is the maximal ideal");
    for (std::size_t j = 0; j < i; ++j) {
      if (primes_[j].is_subset_of(p) || p.is_subset_of(primes_[j])) {
        throw InputError("primes " + std::to_string(j + 1) + " and " +
                         std::to_string(i + 1) + " are not an antichain");
      }
    }
  }
}

bool CoordinateArrangement::is_equidimensional() const {
  const auto h = primes_.front().cardinality();
  return std::all_of(primes_.begin(), primes_.end(),
                     [h](const VariableSet& p) { return p.cardinality() == h; });
}

std::size_t CoordinateArrangement::height() const {
  if (!is_equidimensional()) {
    throw DomainError("arrangement is not equidimensional");
  }
  return primes_.front().cardinality();
}

AbstractArrangement::AbstractArrangement(int d, std::vector<std::vector<int>> pairdim)
    : d_(d), s_(pairdim.size()) {
  if (d_ < 0) throw InputError("dimension must be non-negative");
  if (s_ == 0) throw InputError("arrangement has no components");
  cells_.reserve(s_ * s_);
  for (std::size_t i = 0; i < s_; ++i) {
    if (pairdim[i].size() != s_) {
      throw InputError("pairdim row " + std::to_string(i + 1) + " has length " +
                       std::to_string(pairdim[i].size()) + ", expected " +
                       std::to_string(s_));
    }
    cells_.insert(cells_.end(), pairdim[i].begin(), pairdim[i].end());
  }
  for (std::size_t i = 0; i < s_; ++i) {
    if (pairdim[i][i] != d_) {
      throw InputError("pairdim[" + std::to_string(i + 1) + "][" +
                       std::to_string(i + 1) + "] must equal dim " +
                       std::to_string(d_));
    }
    for (std::size_t j = 0; j < s_; ++j) {
      if (i == j) continue;
      const auto v = pairdim[i][j];
      const auto where = "pairdim[" + std::to_string(i + 1) + "][" +
                         std::to_string(j + 1) + "]";
      if (v != pairdim[j][i]) throw InputError(where + " breaks symmetry");
      if (v < 0 || v > d_ - 1) {
        throw InputError(where + " = " + std::to_string(v) +
                         " outside [0, dim-1]");
      }
    }
  }
}

std::vector<std::vector<int>> AbstractArrangement::matrix() const {
  std::vector<std::vector<int>> out(s_, std::vector<int>(s_));
  for (std::size_t i = 0; i < s_; ++i)
    for (std::size_t j = 0; j < s_; ++j) out[i][j] = pairdim(i, j);
  return out;
}

int dimension(const CoordinateArrangement& arr) {
  return static_cast<int>(arr.variable_count() - arr.height());
}

int pair_dim(const CoordinateArrangement& arr, std::size_t i, std::size_t j) {
  const auto& p = arr.prime(i);
  const auto& q = arr.prime(j);
  return static_cast<int>(arr.variable_count() - p.union_cardinality(q));
}

XiSet xi_set(const CoordinateArrangement& arr) {
  XiSet out;
  for (std::size_t i = 0; i < arr.prime_count(); ++i)
    for (std::size_t j = i; j < arr.prime_count(); ++j)
      if (pair_dim(arr, i, j) >= 1) out.emplace_back(i, j);
  return out;
}

XiSet xi_set(const AbstractArrangement& arr) {
  XiSet out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i; j < arr.size(); ++j)
      if (arr.pairdim(i, j) >= 1) out.emplace_back(i, j);
  return out;
}

AbstractArrangement to_abstract(const CoordinateArrangement& arr) {
  const int d = dimension(arr);
  const auto s = arr.prime_count();
  std::vector<std::vector<int>> m(s, std::vector<int>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) m[i][j] = pair_dim(arr, i, j);
  return AbstractArrangement(d, std::move(m));
}

}  // namespace lyubgraph
