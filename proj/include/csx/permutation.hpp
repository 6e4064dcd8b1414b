#pragma once

// The symmetric groups S_n acting on {0..n} and their cyclic subgroups C_n,
// with the crossed simplicial structure and the inversion involution.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace csx {

/// A bijection of {0..n}, stored as its word (f(0), ..., f(n)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int degree);

  /// n for an element of S_n (the word has n+1 letters).
  int degree() const noexcept { return static_cast<int>(word_.size()) - 1; }
  int size() const noexcept { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const noexcept { return word_; }
  int operator()(int j) const { return word_.at(static_cast<std::size_t>(j)); }

  /// Position of value v, i.e. f^{-1}(v).
  int position_of(int v) const;

  bool is_identity() const;
  std::string to_string() const;  // "2,0,1"
  static Permutation parse(const std::string& text);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// tau_n^power, an element of C_n.
struct CyclicElement {
  int degree = 0;
  int power = 0;

  Permutation as_permutation() const;
  friend bool operator==(const CyclicElement&, const CyclicElement&) = default;
};

/// j -> f(h(j)).
Permutation multiply(const Permutation& f, const Permutation& h);
Permutation inverse(const Permutation& f);

/// (n, 0, 1, ..., n-1).
Permutation tau(int n);

/// Delete the value i from the word, then renumber values above i.
Permutation face_perm(int i, const Permutation& f);

/// Renumber values above i, then insert i+1 right after the value i.
Permutation degeneracy_perm(int i, const Permutation& f);

/// f^{-1}(i): the index a face or degeneracy is pulled back to through f.
int pulled_index(const Permutation& f, int i);

/// True iff some value i+1 sits immediately right of the value i.
bool is_degenerate_perm(const Permutation& f);

/// True iff f is a power of tau_n.
bool is_cyclic(const Permutation& f);

/// All (n+1)! elements of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Lexicographic rank among the elements of S_n; inverse of all_permutations indexing.
std::uint64_t lex_rank(std::span<const int> word);

std::uint64_t factorial(int k);

}  // namespace csx
