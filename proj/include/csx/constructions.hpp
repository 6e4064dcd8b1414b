#pragma once

// Concrete truncated simplicial sets: standard simplices, S*, C*, the
// circular-permutation quotient SC*, twisted products, pullbacks, Yoneda
// simplices and order reorientation.

#include <string>
#include <vector>

#include "csx/permutation.hpp"
#include "csx/simplicial_set.hpp"

namespace csx {

/// Default truncation used across the library.
inline constexpr int kDefaultMaxDim = 8;

/// The right C_n-orbit of a permutation word, represented by the rotation
/// that starts with the value 0.
class CircularPermutation {
 public:
  /// Canonicalizes any bijection word of {0..n}.
  explicit CircularPermutation(std::vector<int> word);

  int degree() const noexcept { return static_cast<int>(word_.size()) - 1; }
  const std::vector<int>& word() const noexcept { return word_; }

  /// "circ:0,2,1"
  std::string to_string() const;
  /// Accepts "circ:..." or a bare comma-separated word.
  static CircularPermutation parse(const std::string& text);

  friend bool operator==(const CircularPermutation&, const CircularPermutation&) = default;
  friend auto operator<=>(const CircularPermutation&, const CircularPermutation&) = default;

 private:
  std::vector<int> word_;
};

CircularPermutation quotient_circ(const Permutation& f);
CircularPermutation face_circ(int i, const CircularPermutation& c);
CircularPermutation degeneracy_circ(int i, const CircularPermutation& c);
/// True iff some bead i+1 (i < n) sits circularly right after bead i.
bool is_degenerate_circ(const CircularPermutation& c);
std::vector<CircularPermutation> all_circular(int n);

/// Payload of an operator simplex of a standard simplex: "op:0,1,1".
std::string operator_payload(const MonotoneOperator& alpha);
MonotoneOperator parse_operator_payload(const std::string& text, int target_size);

SimplicialSetPtr build_delta(int n, int max_dim);
SimplicialSetPtr build_S(int max_dim);
SimplicialSetPtr build_C(int max_dim);
SimplicialSetPtr build_SC(int max_dim);

/// Levelwise quotient S -> SC.
SimplicialMap quotient_map(const SimplicialSetPtr& s, const SimplicialSetPtr& sc);
SimplicialMap quotient_map(int max_dim);

enum class GroupKind { Symmetric, Cyclic };

/// Elements of G_n in lexicographic order of their words.
std::vector<Permutation> group_elements(GroupKind group, int n);

struct TwistedProduct {
  SimplicialSetPtr total;
  SimplicialSetPtr base;
  /// Per dimension and id: the group component and the base simplex id.
  std::vector<std::vector<Permutation>> group_component;
  std::vector<std::vector<int>> base_component;
};

/// Pairs (h, x) with d_i(h,x) = (d_i h, d_{h^-1(i)} x) and
/// s_i(h,x) = (s_i h, s_{h^-1(i)} x). Payloads are "(h|x)".
TwistedProduct twisted_product(GroupKind group, const SimplicialSetPtr& x);

struct Pullback {
  SimplicialSetPtr total;
  SimplicialMap first;   // total -> p.source
  SimplicialMap second;  // total -> q.source
};

/// Levelwise fiber product of p : A -> Z and q : B -> Z.
Pullback pullback(const SimplicialMap& p, const SimplicialMap& q);

/// The map Delta[n] -> X sending the identity operator to the n-simplex id.
/// The standard simplex is truncated at x's max_dim.
SimplicialMap yoneda(const SimplicialSetPtr& x, int n, int id);

/// The permutation words carried by a set whose payloads are words (S*, C*).
std::vector<std::vector<Permutation>> decode_permutations(const SimplicialSet& s);

/// Same simplices as decor.source; the face d_i of x becomes the old face
/// d_{a(i)} with a = decor(x), and likewise for degeneracies. With this
/// structure x -> decor(x)^{-1} is simplicial into S*.
SimplicialSetPtr reorient_upsilon(const SimplicialMap& decor);

/// The map x -> decor(x)^{-1} on the reoriented set, landing in decor.target.
SimplicialMap reoriented_decoration(const SimplicialSetPtr& reoriented, const SimplicialMap& decor);

}  // namespace csx
