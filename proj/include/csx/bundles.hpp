#pragma once

// Circle bundles classified by the quotient S* -> SC*: right cyclic orbits
// E(g) over standard simplices, total spaces of decorated bases, the 0/1
// Chern cochain and decoration extension.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "csx/constructions.hpp"

namespace csx {

/// A simplicial map base -> SC* given simplexwise. Bases may be
/// semi-simplicial (faces only).
struct Decoration {
  SimplicialSetPtr base;
  std::vector<std::vector<CircularPermutation>> assignment;  // [dim][id]
};

/// First simplex whose decoration disagrees with a face (or degeneracy), or nullopt.
std::optional<std::string> check_decoration(const Decoration& d);

struct BundleTotalSpace {
  SimplicialSetPtr total;
  SimplicialSetPtr base;      // the base the projection lands in
  SimplicialMap projection;   // total -> base (or its degeneracy completion)
  SimplicialMap classifying;  // total -> S*
};

/// Right crossed C*-orbit of g in S_n: pairs (alpha, alpha_* g . h) with
/// alpha : [m] -> [n] and h in C_m, faces and degeneracies componentwise.
BundleTotalSpace E_of(const Permutation& g, int max_dim);

/// Action of an operator alpha : [m] -> [n] on S_n, computed by word surgery.
Permutation act_perm(const MonotoneOperator& alpha, const Permutation& g);

/// E_of(g) against the generic pullback of the quotient along the Yoneda
/// simplex of the orbit of g. Returns the first discrepancy, or nullopt.
std::optional<std::string> pullback_coincidence(const Permutation& g, int max_dim);

/// E_of(g^{-1}) against the reorientation of C* x_t Delta[n] along the
/// cyclic Yoneda map (h, alpha) -> h . alpha_* g. Returns the first
/// discrepancy, or nullopt.
std::optional<std::string> upsilon_discrepancy(const Permutation& g, int max_dim);
bool upsilon_comparison(const Permutation& g, int max_dim);

/// Free simplicial set on a semi-simplicial set: simplices are pairs
/// (surjection [m] -> [k], k-simplex). Nondegenerate simplices are exactly
/// the original ones.
struct CompletedBase {
  SimplicialSetPtr set;
  std::vector<std::vector<MonotoneOperator>> collapse;  // the surjection of each simplex
  std::vector<std::vector<int>> origin;                 // the base simplex it degenerates
};
CompletedBase degeneracy_completion(const SimplicialSetPtr& semi, int max_dim);

/// A simplicial base viewed as its own completion.
CompletedBase trivial_completion(const SimplicialSetPtr& simplicial);

/// The decoration as a simplicial map into SC*, on the completed base.
SimplicialMap decoration_map(const Decoration& d, const CompletedBase& completed, const SimplicialSetPtr& sc);

/// Pullback of the quotient S* -> SC* along the decoration. Semi-simplicial
/// bases are completed with free degeneracies first.
BundleTotalSpace total_space(const Decoration& d, int max_dim);

/// Re-checks a total space of d: both legs simplicial, the square with the
/// quotient commutes, and every base m-simplex has m+1 simplices over it.
std::optional<std::string> verify_bundle(const Decoration& d, const BundleTotalSpace& b);

struct TwoCochain {
  std::vector<int> values;  // one 0/1 value per base 2-simplex

  int sum() const;
  friend bool operator==(const TwoCochain&, const TwoCochain&) = default;
};

/// 1 on triangles decorated by the nondegenerate circle (0,2,1), else 0.
TwoCochain chern_cochain(const Decoration& d);

/// Vertices -> (0), edges -> (0,1), triangles -> (0,2,1) where c = 1 and
/// (0,1,2) otherwise. The base must have no simplices above dimension 2.
Decoration decorate_from_cochain(const SimplicialSetPtr& base, const TwoCochain& c);

struct PartialDecoration {
  SimplicialSetPtr base;
  std::vector<std::vector<std::optional<CircularPermutation>>> assignment;
};

struct Obstruction {
  int dim = 0;
  int id = 0;
};

/// Fills undecorated simplices dimension by dimension with the first element
/// of SC_n (in id order) whose faces match; stops at the first simplex
/// without a match.
std::variant<Decoration, Obstruction> extend_decoration(const PartialDecoration& partial);

/// Semi-simplicial standard simplex and its boundary; payloads "v:0,1,2".
SimplicialSetPtr semi_simplex(int n);
SimplicialSetPtr semi_boundary(int n);

}  // namespace csx
