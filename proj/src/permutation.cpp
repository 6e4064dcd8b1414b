#include "csx/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "csx/error.hpp"

namespace csx {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  require(!word_.empty(), "permutation word must be nonempty");
  std::vector<bool> seen(word_.size(), false);
  for (int v : word_) {
    require(v >= 0 && static_cast<std::size_t>(v) < word_.size() && !seen[static_cast<std::size_t>(v)],
            "word is not a bijection of {0..n}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  require(degree >= 0, "negative degree");
  std::vector<int> w(static_cast<std::size_t>(degree + 1));
  std::iota(w.begin(), w.end(), 0);
  return Permutation(std::move(w));
}

int Permutation::position_of(int v) const {
  require(v >= 0 && v < size(), "value out of range: " + std::to_string(v));
  return static_cast<int>(std::find(word_.begin(), word_.end(), v) - word_.begin());
}

bool Permutation::is_identity() const {
  for (int j = 0; j < size(); ++j)
    if (word_[static_cast<std::size_t>(j)] != j) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < word_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(word_[j]);
  }
  return s;
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    require(!item.empty(), "empty entry in permutation word '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "bad permutation word '" + text + "'");
    }
    require(used == item.size(), "bad permutation word '" + text + "'");
    w.push_back(v);
  }
  return Permutation(std::move(w));
}

Permutation CyclicElement::as_permutation() const {
  require(degree >= 0 && power >= 0 && power <= degree, "cyclic element out of range");
  const int m = degree + 1;
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) w[static_cast<std::size_t>(j)] = ((j - power) % m + m) % m;
  return Permutation(std::move(w));
}

Permutation multiply(const Permutation& f, const Permutation& h) {
  require(f.size() == h.size(), "degree mismatch in multiply");
  std::vector<int> w(static_cast<std::size_t>(f.size()));
  for (int j = 0; j < f.size(); ++j) w[static_cast<std::size_t>(j)] = f(h(j));
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& f) {
  std::vector<int> w(static_cast<std::size_t>(f.size()));
  for (int j = 0; j < f.size(); ++j) w[static_cast<std::size_t>(f(j))] = j;
  return Permutation(std::move(w));
}

Permutation tau(int n) { return CyclicElement{n, 1 % (n + 1)}.as_permutation(); }

Permutation face_perm(int i, const Permutation& f) {
  const int n = f.degree();
  require(n >= 1 && i >= 0 && i <= n, "face index out of range");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int v : f.word())
    if (v != i) w.push_back(v > i ? v - 1 : v);
  return Permutation(std::move(w));
}

Permutation degeneracy_perm(int i, const Permutation& f) {
  const int n = f.degree();
  require(i >= 0 && i <= n, "degeneracy index out of range");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n + 2));
  for (int v : f.word()) {
    w.push_back(v > i ? v + 1 : v);
    if (v == i) w.push_back(i + 1);
  }
  return Permutation(std::move(w));
}

int pulled_index(const Permutation& f, int i) { return f.position_of(i); }

bool is_degenerate_perm(const Permutation& f) {
  const auto& w = f.word();
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j + 1] == w[j] + 1) return true;
  return false;
}

bool is_cyclic(const Permutation& f) {
  const int m = f.size();
  const int shift = f(0);
  for (int j = 0; j < m; ++j)
    if (f(j) != (j + shift) % m) return false;
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(static_cast<std::size_t>(n + 1));
  std::iota(w.begin(), w.end(), 0);
  out.reserve(factorial(n + 1));
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::uint64_t lex_rank(std::span<const int> word) {
  const std::size_t m = word.size();
  std::uint64_t rank = 0;
  for (std::size_t j = 0; j < m; ++j) {
    std::uint64_t smaller_after = 0;
    for (std::size_t t = j + 1; t < m; ++t)
      if (word[t] < word[j]) ++smaller_after;
    rank += smaller_after * factorial(static_cast<int>(m - j - 1));
  }
  return rank;
}

std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int t = 2; t <= k; ++t) r *= static_cast<std::uint64_t>(t);
  return r;
}

}  // namespace csx
