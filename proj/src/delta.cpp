#include "csx/delta.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "csx/error.hpp"

namespace csx {

MonotoneOperator::MonotoneOperator(int target_size, std::vector<int> values)
    : target_size_(target_size), values_(std::move(values)) {
  require(target_size_ >= 0, "operator target size must be nonnegative");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    require(values_[j] >= 0 && values_[j] < target_size_, "operator value out of range");
    require(j == 0 || values_[j - 1] <= values_[j], "operator values must be nondecreasing");
  }
}

MonotoneOperator MonotoneOperator::identity(int size) {
  std::vector<int> v(static_cast<std::size_t>(size));
  std::iota(v.begin(), v.end(), 0);
  return MonotoneOperator(size, std::move(v));
}

bool MonotoneOperator::is_injective() const {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool MonotoneOperator::is_surjective() const {
  if (values_.empty()) return target_size_ == 0;
  if (values_.front() != 0 || values_.back() != target_size_ - 1) return false;
  for (std::size_t j = 1; j < values_.size(); ++j)
    if (values_[j] - values_[j - 1] > 1) return false;
  return true;
}

SetMap::SetMap(int target_size, std::vector<int> values)
    : target_size_(target_size), values_(std::move(values)) {
  for (int v : values_) require(v >= 0 && v < target_size_, "set map value out of range");
}

MonotoneOperator coface(int n, int i) {
  require(n >= 1 && i >= 0 && i <= n, "coface index out of range: n=" + std::to_string(n) +
                                            " i=" + std::to_string(i));
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v.push_back(j < i ? j : j + 1);
  return MonotoneOperator(n + 1, std::move(v));
}

MonotoneOperator codegeneracy(int n, int i) {
  require(n >= 0 && i >= 0 && i <= n, "codegeneracy index out of range: n=" + std::to_string(n) +
                                          " i=" + std::to_string(i));
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n + 2));
  for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
  return MonotoneOperator(n + 1, std::move(v));
}

MonotoneOperator compose(const MonotoneOperator& outer, const MonotoneOperator& inner) {
  require(inner.target_size() == outer.source_size(), "operator composition size mismatch");
  std::vector<int> v;
  v.reserve(inner.values().size());
  for (int x : inner.values()) v.push_back(outer(x));
  return MonotoneOperator(outer.target_size(), std::move(v));
}

SortFactorization sort_factorization(const SetMap& phi) {
  const auto& w = phi.values();
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });

  std::vector<int> g(w.size());
  std::vector<int> sorted(w.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    g[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank);
    sorted[rank] = w[static_cast<std::size_t>(order[rank])];
  }
  return {MonotoneOperator(phi.target_size(), std::move(sorted)), std::move(g)};
}

EpiMono epi_mono(const MonotoneOperator& alpha) {
  std::vector<int> image;
  std::vector<int> epi;
  for (int v : alpha.values()) {
    if (image.empty() || image.back() != v) image.push_back(v);
    epi.push_back(static_cast<int>(image.size()) - 1);
  }
  const int k = static_cast<int>(image.size());
  return {MonotoneOperator(k, std::move(epi)), MonotoneOperator(alpha.target_size(), std::move(image))};
}

std::vector<MonotoneOperator> all_operators(int m, int n) {
  std::vector<MonotoneOperator> out;
  if (m < 0 || n < 0) return out;
  std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
  while (true) {
    out.emplace_back(n + 1, v);
    int j = m;
    while (j >= 0 && v[static_cast<std::size_t>(j)] == n) --j;
    if (j < 0) break;
    const int next = v[static_cast<std::size_t>(j)] + 1;
    for (int t = j; t <= m; ++t) v[static_cast<std::size_t>(t)] = next;
  }
  return out;
}

}  // namespace csx
