#include "csx/simplicial_set.hpp"

#include <string>

#include "csx/error.hpp"

namespace csx {

namespace {

std::string at(int dim, int id) { return "dim " + std::to_string(dim) + " id " + std::to_string(id); }

}  // namespace

SimplicialSet::SimplicialSet(int max_dim, bool has_degeneracies)
    : has_degeneracies_(has_degeneracies), levels_(static_cast<std::size_t>(max_dim + 1)) {
  require(max_dim >= 0, "max_dim must be nonnegative");
}

int SimplicialSet::face(int dim, int id, int i) const {
  const auto& lv = level(dim);
  return lv.faces[static_cast<std::size_t>(id) * static_cast<std::size_t>(dim + 1) + static_cast<std::size_t>(i)];
}

int SimplicialSet::degeneracy(int dim, int id, int i) const {
  const auto& lv = level(dim);
  return lv.degeneracies[static_cast<std::size_t>(id) * static_cast<std::size_t>(dim + 1) +
                         static_cast<std::size_t>(i)];
}

const std::string& SimplicialSet::payload(int dim, int id) const {
  return level(dim).payloads.at(static_cast<std::size_t>(id));
}

void SimplicialSet::validate_shape() const {
  for (int n = 0; n <= max_dim(); ++n) {
    const auto& lv = level(n);
    const std::size_t stride = static_cast<std::size_t>(n + 1);
    const std::size_t count = lv.payloads.size();
    if (n == 0) {
      require(lv.faces.empty(), "dimension 0 has no faces");
    } else {
      require(lv.faces.size() == count * stride, "face table size mismatch in dim " + std::to_string(n));
      for (auto f : lv.faces)
        require(f >= 0 && static_cast<std::size_t>(f) < this->count(n - 1),
                "face id out of range in dim " + std::to_string(n));
    }
    if (has_degeneracies_ && n < max_dim()) {
      require(lv.degeneracies.size() == count * stride,
              "degeneracy table size mismatch in dim " + std::to_string(n));
      for (auto s : lv.degeneracies)
        require(s >= 0 && static_cast<std::size_t>(s) < this->count(n + 1),
                "degeneracy id out of range in dim " + std::to_string(n));
    } else {
      require(lv.degeneracies.empty(), "unexpected degeneracy table in dim " + std::to_string(n));
    }
  }
}

std::vector<bool> SimplicialSet::degenerate_flags(int dim) const {
  std::vector<bool> flags(count(dim), false);
  if (!has_degeneracies_ || dim == 0) return flags;
  for (auto s : level(dim - 1).degeneracies) flags[static_cast<std::size_t>(s)] = true;
  return flags;
}

std::unordered_map<std::string, int> payload_index(const SimplicialSet& x, int dim) {
  std::unordered_map<std::string, int> index;
  const auto& p = x.level(dim).payloads;
  index.reserve(p.size());
  for (std::size_t id = 0; id < p.size(); ++id) index.emplace(p[id], static_cast<int>(id));
  return index;
}

std::optional<std::string> audit_identities(const SimplicialSet& x) {
  x.validate_shape();
  const int top = x.max_dim();
  for (int n = 0; n <= top; ++n) {
    const int count = static_cast<int>(x.count(n));
    for (int id = 0; id < count; ++id) {
      // d_i d_j = d_{j-1} d_i, i < j
      if (n >= 2) {
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (x.face(n - 1, x.face(n, id, j), i) != x.face(n - 1, x.face(n, id, i), j - 1))
              return "d" + std::to_string(i) + "d" + std::to_string(j) + " != d" + std::to_string(j - 1) +
                     "d" + std::to_string(i) + " at " + at(n, id);
      }
      if (!x.has_degeneracies() || n >= top) continue;
      // s_i s_j = s_{j+1} s_i, i <= j
      if (n + 2 <= top) {
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (x.degeneracy(n + 1, x.degeneracy(n, id, j), i) !=
                x.degeneracy(n + 1, x.degeneracy(n, id, i), j + 1))
              return "s" + std::to_string(i) + "s" + std::to_string(j) + " != s" + std::to_string(j + 1) +
                     "s" + std::to_string(i) + " at " + at(n, id);
      }
      // mixed identities on s_j x in dim n+1
      for (int j = 0; j <= n; ++j) {
        const int sj = x.degeneracy(n, id, j);
        for (int i = 0; i <= n + 1; ++i) {
          const int lhs = x.face(n + 1, sj, i);
          int rhs = 0;
          if (i == j || i == j + 1) {
            rhs = id;
          } else if (i < j) {
            rhs = x.degeneracy(n - 1, x.face(n, id, i), j - 1);
          } else {
            rhs = x.degeneracy(n - 1, x.face(n, id, i - 1), j);
          }
          if (lhs != rhs)
            return "d" + std::to_string(i) + "s" + std::to_string(j) + " identity fails at " + at(n, id);
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<int> nondegenerate_list(const SimplicialSet& x, int n) {
  require(n >= 0 && n <= x.max_dim(), "dimension out of range");
  const auto flags = x.degenerate_flags(n);
  std::vector<int> out;
  for (std::size_t id = 0; id < flags.size(); ++id)
    if (!flags[id]) out.push_back(static_cast<int>(id));
  return out;
}

int act(const SimplicialSet& x, const MonotoneOperator& alpha, int id) {
  const int n = alpha.target_size() - 1;
  const int m = alpha.source_size() - 1;
  require(n >= 0 && n <= x.max_dim() && m >= 0 && m <= x.max_dim(), "operator outside truncation");
  const auto [epi, mono] = epi_mono(alpha);

  // Faces deleting the vertices missed by the mono part, largest first.
  int dim = n;
  std::vector<bool> hit(static_cast<std::size_t>(n + 1), false);
  for (int v : mono.values()) hit[static_cast<std::size_t>(v)] = true;
  for (int v = n; v >= 0; --v) {
    if (hit[static_cast<std::size_t>(v)]) continue;
    id = x.face(dim, id, v);
    --dim;
  }
  // Degeneracies repeating the vertices doubled by the epi part, left to right.
  const auto& e = epi.values();
  for (int t = 0; t < m; ++t) {
    if (e[static_cast<std::size_t>(t)] != e[static_cast<std::size_t>(t + 1)]) continue;
    require(x.has_degeneracies(), "degenerate operator acting on a semi-simplicial set");
    id = x.degeneracy(dim, id, t);
    ++dim;
  }
  return id;
}

std::optional<std::string> audit_map(const SimplicialMap& f) {
  const auto& src = *f.source;
  const auto& dst = *f.target;
  const int top = src.max_dim();
  if (dst.max_dim() < top || f.assignment.size() != static_cast<std::size_t>(top + 1))
    return std::string("map truncation does not match its source");
  for (int n = 0; n <= top; ++n) {
    if (f.assignment[static_cast<std::size_t>(n)].size() != src.count(n))
      return "assignment size mismatch in dim " + std::to_string(n);
    for (int id = 0; id < static_cast<int>(src.count(n)); ++id) {
      const int y = f(n, id);
      if (y < 0 || static_cast<std::size_t>(y) >= dst.count(n)) return "image out of range at " + at(n, id);
      for (int i = 0; n > 0 && i <= n; ++i)
        if (f(n - 1, src.face(n, id, i)) != dst.face(n, y, i))
          return "map does not commute with d" + std::to_string(i) + " at " + at(n, id);
      if (src.has_degeneracies() && dst.has_degeneracies() && n < top)
        for (int i = 0; i <= n; ++i)
          if (f(n + 1, src.degeneracy(n, id, i)) != dst.degeneracy(n, y, i))
            return "map does not commute with s" + std::to_string(i) + " at " + at(n, id);
    }
  }
  return std::nullopt;
}

bool is_isomorphism(const SimplicialMap& f) {
  if (audit_map(f)) return false;
  for (int n = 0; n <= f.source->max_dim(); ++n) {
    if (f.source->count(n) != f.target->count(n)) return false;
    std::vector<bool> seen(f.target->count(n), false);
    for (int y : f.assignment[static_cast<std::size_t>(n)]) {
      if (seen[static_cast<std::size_t>(y)]) return false;
      seen[static_cast<std::size_t>(y)] = true;
    }
  }
  return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  require(f.target == g.source, "composition requires matching target and source");
  SimplicialMap out{f.source, g.target, {}};
  out.assignment.resize(f.assignment.size());
  for (std::size_t n = 0; n < f.assignment.size(); ++n)
    for (int y : f.assignment[n]) out.assignment[n].push_back(g.assignment.at(n).at(static_cast<std::size_t>(y)));
  return out;
}

}  // namespace csx
