#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace lyubgraph {

/// A subset of the ambient variables {0..n-1}. Used as a coordinate prime:
/// the monomial prime generated by the variables in the set.
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::size_t universe) : bits_(universe) {}
  VariableSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static VariableSet from_indices(std::size_t universe,
                                  const std::vector<std::size_t>& members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t cardinality() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool full() const { return bits_.all(); }
  bool contains(std::size_t var) const { return bits_.test(var); }

  VariableSet& insert(std::size_t var);

  bool is_subset_of(const VariableSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  VariableSet operator|(const VariableSet& other) const;
  std::size_t union_cardinality(const VariableSet& other) const;

  std::vector<std::size_t> indices() const;

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  explicit VariableSet(boost::dynamic_bitset<> bits) : bits_(std::move(bits)) {}

  boost::dynamic_bitset<> bits_;
};

/// Inclusion-minimal members of `primes`, in first-occurrence order, with
/// duplicates removed.
std::vector<VariableSet> minimalize(const std::vector<VariableSet>& primes);

/// The minimal primes of a squarefree monomial ideal in n variables. The
/// primes form a nonempty antichain of nonempty proper subsets of {0..n-1}.
class CoordinateArrangement {
 public:
  /// Throws InputError when the invariants above do not hold. `labels` may be
  /// empty, in which case variables are named x1..xn.
  CoordinateArrangement(std::size_t n, std::vector<VariableSet> primes,
                        std::vector<std::string> labels = {});

  std::size_t variable_count() const { return n_; }
  std::size_t prime_count() const { return primes_.size(); }
  const std::vector<VariableSet>& primes() const { return primes_; }
  const VariableSet& prime(std::size_t i) const { return primes_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_equidimensional() const;
  /// Common cardinality of the primes. Throws DomainError when the
  /// arrangement is not equidimensional.
  std::size_t height() const;

 private:
  std::size_t n_;
  std::vector<VariableSet> primes_;
  std::vector<std::string> labels_;
};

/// The data every invariant is computed from: the dimension d of A, and for
/// each pair of minimal primes the dimension of A/(p_i + p_j).
///
/// Equivalently ht(p_i + p_j) = d - pairdim(i, j). A value of 0 means the two
/// components meet only at the closed point.
class AbstractArrangement {
 public:
  /// Validates: square symmetric matrix, diagonal equal to d, off-diagonal in
  /// [0, d-1]. Throws InputError otherwise.
  AbstractArrangement(int d, std::vector<std::vector<int>> pairdim);

  int dim() const { return d_; }
  std::size_t size() const { return s_; }
  int pairdim(std::size_t i, std::size_t j) const { return cells_[i * s_ + j]; }
  int height_of_sum(std::size_t i, std::size_t j) const {
    return d_ - pairdim(i, j);
  }
  std::vector<std::vector<int>> matrix() const;

  friend bool operator==(const AbstractArrangement&,
                         const AbstractArrangement&) = default;

 private:
  int d_;
  std::size_t s_;
  std::vector<int> cells_;
};

/// Index pairs (i, j), i <= j, whose prime sum is not primary to the maximal
/// ideal.
using XiSet = std::vector<std::pair<std::size_t, std::size_t>>;

/// d = n - h. Throws DomainError for non-equidimensional input.
int dimension(const CoordinateArrangement& arr);

/// n - |p_i U p_j|, the dimension of A/(p_i + p_j).
int pair_dim(const CoordinateArrangement& arr, std::size_t i, std::size_t j);

XiSet xi_set(const CoordinateArrangement& arr);
XiSet xi_set(const AbstractArrangement& arr);

AbstractArrangement to_abstract(const CoordinateArrangement& arr);

}  // namespace lyubgraph
