#pragma once

// The finite ordinal category: monotone operators [m] -> [n], cofaces,
// codegeneracies, and the monotone-times-bijection factorization of set maps.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace csx {

/// A nondecreasing map {0..source_size-1} -> {0..target_size-1}.
/// An operator [m] -> [n] has source_size m+1 and target_size n+1.
class MonotoneOperator {
 public:
  MonotoneOperator(int target_size, std::vector<int> values);

  static MonotoneOperator identity(int size);

  int source_size() const noexcept { return static_cast<int>(values_.size()); }
  int target_size() const noexcept { return target_size_; }
  const std::vector<int>& values() const noexcept { return values_; }
  int operator()(int j) const { return values_.at(static_cast<std::size_t>(j)); }

  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const MonotoneOperator&, const MonotoneOperator&) = default;
  friend auto operator<=>(const MonotoneOperator& a, const MonotoneOperator& b) {
    if (auto c = a.target_size_ <=> b.target_size_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  int target_size_;
  std::vector<int> values_;
};

/// An arbitrary map {0..source_size-1} -> {0..target_size-1}.
class SetMap {
 public:
  SetMap(int target_size, std::vector<int> values);

  int source_size() const noexcept { return static_cast<int>(values_.size()); }
  int target_size() const noexcept { return target_size_; }
  const std::vector<int>& values() const noexcept { return values_; }

  friend bool operator==(const SetMap&, const SetMap&) = default;

 private:
  int target_size_;
  std::vector<int> values_;
};

/// delta_i : [n-1] -> [n], the injection missing i.
MonotoneOperator coface(int n, int i);

/// sigma_i : [n+1] -> [n], the surjection hitting i twice.
MonotoneOperator codegeneracy(int n, int i);

/// outer o inner, evaluated pointwise.
MonotoneOperator compose(const MonotoneOperator& outer, const MonotoneOperator& inner);

struct SortFactorization {
  MonotoneOperator monotone;
  std::vector<int> bijection;  // position permutation g with phi = monotone o g
};

/// Writes phi = xi o g with g the stable-sort permutation of phi's values.
/// This is the unique pair with xi monotone and g order-preserving on every
/// fiber of phi.
SortFactorization sort_factorization(const SetMap& phi);

/// Epi-mono split alpha = mono o epi.
struct EpiMono {
  MonotoneOperator epi;
  MonotoneOperator mono;
};
EpiMono epi_mono(const MonotoneOperator& alpha);

/// All monotone operators [m] -> [n] in lexicographic order of values.
std::vector<MonotoneOperator> all_operators(int m, int n);

}  // namespace csx
