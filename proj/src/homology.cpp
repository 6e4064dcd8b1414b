#include "csx/homology.hpp"

#include <future>
#include <map>

#include "csx/error.hpp"

namespace csx {

ChainComplex normalized_complex(const SimplicialSet& x) {
  if (auto bad = audit_identities(x)) fail(ErrorKind::NotSimplicial, "simplicial identity audit failed: " + *bad);

  ChainComplex cc;
  const int top = x.max_dim();
  std::vector<std::vector<int>> position(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    cc.basis.push_back(nondegenerate_list(x, n));
    auto& pos = position[static_cast<std::size_t>(n)];
    pos.assign(x.count(n), -1);
    for (std::size_t k = 0; k < cc.basis.back().size(); ++k) pos[static_cast<std::size_t>(cc.basis.back()[k])] = static_cast<int>(k);
  }

  for (int n = 0; n <= top; ++n) {
    SparseMatrix m;
    m.cols = cc.basis[static_cast<std::size_t>(n)].size();
    m.rows = n == 0 ? 0 : cc.basis[static_cast<std::size_t>(n - 1)].size();
    if (n > 0) {
      const auto& below = position[static_cast<std::size_t>(n - 1)];
      for (std::size_t col = 0; col < m.cols; ++col) {
        const int id = cc.basis[static_cast<std::size_t>(n)][col];
        for (int i = 0; i <= n; ++i) {
          const int row = below[static_cast<std::size_t>(x.face(n, id, i))];
          if (row < 0) continue;
          m.entries.push_back({static_cast<std::size_t>(row), col, i % 2 == 0 ? 1 : -1});
        }
      }
      m.normalize();
    }
    cc.boundary.push_back(std::move(m));
  }
  return cc;
}

std::optional<int> find_nonzero_square(const ChainComplex& cc) {
  for (int n = 2; n <= cc.max_dim(); ++n) {
    const auto& outer = cc.boundary[static_cast<std::size_t>(n - 1)];
    const auto& inner = cc.boundary[static_cast<std::size_t>(n)];
    // rows of outer indexed by their entries
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> by_col(outer.cols);
    for (const auto& e : outer.entries) by_col[e.col].emplace_back(e.row, e.value);
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> product;
    for (const auto& e : inner.entries)
      for (const auto& [row, v] : by_col[e.row]) product[{row, e.col}] += v * e.value;
    for (const auto& [key, v] : product)
      if (v != 0) return n;
  }
  return std::nullopt;
}

HomologyReport homology_report(const ChainComplex& cc, OverflowPolicy policy) {
  const int top = cc.max_dim();
  std::vector<std::future<SmithForm>> jobs;
  for (int n = 0; n <= top; ++n)
    jobs.push_back(std::async(std::launch::async, [&cc, n, policy] {
      return smith_normal_form(cc.boundary[static_cast<std::size_t>(n)], policy);
    }));
  std::vector<SmithForm> forms;
  for (auto& j : jobs) forms.push_back(j.get());

  HomologyReport report;
  for (const auto& f : forms) report.boundary_ranks.push_back(f.rank());
  for (int n = 0; n <= top; ++n) {
    const std::size_t dim = cc.basis[static_cast<std::size_t>(n)].size();
    const std::size_t out_rank = forms[static_cast<std::size_t>(n)].rank();
    const std::size_t in_rank = n < top ? forms[static_cast<std::size_t>(n + 1)].rank() : 0;
    require(dim >= out_rank + in_rank, "rank bookkeeping failed; boundary does not square to zero");
    HomologyGroup g;
    g.betti = dim - out_rank - in_rank;
    if (n < top)
      for (const auto& d : forms[static_cast<std::size_t>(n + 1)].factors)
        if (d > 1) g.torsion.push_back(d);
    report.groups.push_back(std::move(g));
  }
  return report;
}

HomologyReport homology(const SimplicialSet& x, OverflowPolicy policy) {
  return homology_report(normalized_complex(x), policy);
}

std::string describe(const HomologyGroup& g) {
  std::string s;
  if (g.betti == 1) s = "Z";
  if (g.betti > 1) s = "Z^" + std::to_string(g.betti);
  for (const auto& t : g.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s.empty() ? "0" : s;
}

}  // namespace csx
