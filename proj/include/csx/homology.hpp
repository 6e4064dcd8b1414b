#pragma once

// Integer homology of truncated simplicial sets through normalized chains.

#include <optional>
#include <string>
#include <vector>

#include "csx/simplicial_set.hpp"
#include "csx/smith.hpp"

namespace csx {

struct ChainComplex {
  /// Per dimension: ids of the nondegenerate simplices, in id order.
  std::vector<std::vector<int>> basis;
  /// boundary[n] : C_n -> C_{n-1}; boundary[0] is the 0 x |C_0| matrix.
  std::vector<SparseMatrix> boundary;

  int max_dim() const noexcept { return static_cast<int>(basis.size()) - 1; }
};

/// Boundary sum_i (-1)^i d_i on nondegenerate simplices, degenerate faces
/// dropped. Throws Error(NotSimplicial) if the input fails its identity audit.
ChainComplex normalized_complex(const SimplicialSet& x);

/// First n with boundary[n-1] * boundary[n] != 0, or nullopt.
std::optional<int> find_nonzero_square(const ChainComplex& cc);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyReport {
  std::vector<HomologyGroup> groups;  // H_0 .. H_max_dim
  /// The top group lacks incoming boundaries from the missing dimension.
  bool unreliable_top = true;
  /// rank of boundary[n], for bookkeeping checks.
  std::vector<std::size_t> boundary_ranks;
};

/// SNF of each boundary matrix (independent matrices are reduced concurrently).
HomologyReport homology_report(const ChainComplex& cc, OverflowPolicy policy = OverflowPolicy::BigInt);

HomologyReport homology(const SimplicialSet& x, OverflowPolicy policy = OverflowPolicy::BigInt);

/// "Z^2 + Z/2" style rendering of one group; "0" for the trivial group.
std::string describe(const HomologyGroup& g);

}  // namespace csx
