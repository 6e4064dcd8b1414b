#pragma once

// Finite truncations of simplicial sets as explicit face/degeneracy tables.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "csx/delta.hpp"

namespace csx {

/// One dimension of a truncated simplicial set. Tables are flat with stride
/// dim+1: faces[id*(dim+1)+i] is the id of d_i(id) in dim-1 and
/// degeneracies[id*(dim+1)+i] the id of s_i(id) in dim+1.
struct Level {
  std::vector<std::string> payloads;
  std::vector<std::int32_t> faces;
  std::vector<std::int32_t> degeneracies;
};

/// Simplices in dimensions 0..max_dim with stable dense ids per dimension.
/// A set without degeneracy tables is semi-simplicial: every simplex counts
/// as nondegenerate.
class SimplicialSet {
 public:
  SimplicialSet(int max_dim, bool has_degeneracies);

  int max_dim() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  bool has_degeneracies() const noexcept { return has_degeneracies_; }

  std::size_t count(int dim) const { return levels_.at(static_cast<std::size_t>(dim)).payloads.size(); }
  int face(int dim, int id, int i) const;
  /// Requires dim < max_dim.
  int degeneracy(int dim, int id, int i) const;
  const std::string& payload(int dim, int id) const;

  Level& level(int dim) { return levels_.at(static_cast<std::size_t>(dim)); }
  const Level& level(int dim) const { return levels_.at(static_cast<std::size_t>(dim)); }

  /// Table sizes and index ranges; throws on malformed tables.
  void validate_shape() const;

  /// Degenerate flags for dimension dim (all false for semi-simplicial sets).
  std::vector<bool> degenerate_flags(int dim) const;

 private:
  bool has_degeneracies_;
  std::vector<Level> levels_;
};

using SimplicialSetPtr = std::shared_ptr<const SimplicialSet>;

/// payload -> id for one dimension.
std::unordered_map<std::string, int> payload_index(const SimplicialSet& x, int dim);

/// First violated simplicial identity, or nullopt when every identity holds
/// wherever both sides exist within the truncation.
std::optional<std::string> audit_identities(const SimplicialSet& x);

/// Ids of the simplices in dim n not in the image of any degeneracy.
std::vector<int> nondegenerate_list(const SimplicialSet& x, int n);

/// Action X(alpha) : X_n -> X_m of an operator alpha : [m] -> [n] on a simplex.
int act(const SimplicialSet& x, const MonotoneOperator& alpha, int id);

/// A dimensionwise assignment source -> target.
struct SimplicialMap {
  SimplicialSetPtr source;
  SimplicialSetPtr target;
  std::vector<std::vector<int>> assignment;

  int operator()(int dim, int id) const {
    return assignment.at(static_cast<std::size_t>(dim)).at(static_cast<std::size_t>(id));
  }
};

/// First face or degeneracy the map fails to commute with, or nullopt.
std::optional<std::string> audit_map(const SimplicialMap& f);

/// Simplicial and bijective in every dimension of the source truncation.
bool is_isomorphism(const SimplicialMap& f);

/// g o f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

}  // namespace csx
