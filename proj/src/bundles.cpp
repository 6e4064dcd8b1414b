#include "csx/bundles.hpp"

#include <algorithm>
#include <map>

#include "csx/error.hpp"

namespace csx {

namespace {

std::string at(int dim, int id) { return "dim " + std::to_string(dim) + " id " + std::to_string(id); }

std::vector<std::map<MonotoneOperator, int>> operator_index(int n, int max_dim) {
  std::vector<std::map<MonotoneOperator, int>> index;
  for (int m = 0; m <= max_dim; ++m) {
    auto& row = index.emplace_back();
    int id = 0;
    for (auto& a : all_operators(m, n)) row.emplace(std::move(a), id++);
  }
  return index;
}

// Degeneracies repeating the vertices doubled by a surjection, left to right.
CircularPermutation degenerate_circ(const MonotoneOperator& epi, CircularPermutation c) {
  const auto& e = epi.values();
  for (std::size_t t = 0; t + 1 < e.size(); ++t)
    if (e[t] == e[t + 1]) c = degeneracy_circ(static_cast<int>(t), c);
  return c;
}

std::vector<std::vector<int>> subsets_by_size(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(static_cast<std::size_t>(n + 1), false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    std::vector<int> s;
    for (int v = 0; v <= n; ++v)
      if (pick[static_cast<std::size_t>(v)]) s.push_back(v);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialSetPtr semi_from_subsets(int n, int top) {
  auto out = std::make_shared<SimplicialSet>(top, false);
  std::vector<std::map<std::vector<int>, int>> index;
  for (int d = 0; d <= top; ++d) {
    auto& lv = out->level(d);
    auto& idx = index.emplace_back();
    for (const auto& s : subsets_by_size(n, d + 1)) {
      std::string p = "v:";
      for (std::size_t j = 0; j < s.size(); ++j) p += (j ? "," : "") + std::to_string(s[j]);
      idx.emplace(s, static_cast<int>(lv.payloads.size()));
      lv.payloads.push_back(std::move(p));
      for (int i = 0; d > 0 && i <= d; ++i) {
        auto f = s;
        f.erase(f.begin() + i);
        lv.faces.push_back(index[static_cast<std::size_t>(d - 1)].at(f));
      }
    }
  }
  return out;
}

}  // namespace

Permutation act_perm(const MonotoneOperator& alpha, const Permutation& g) {
  const int n = alpha.target_size() - 1;
  require(g.degree() == n, "operator target does not match the permutation degree");
  const auto [epi, mono] = epi_mono(alpha);
  std::vector<bool> hit(static_cast<std::size_t>(n + 1), false);
  for (int v : mono.values()) hit[static_cast<std::size_t>(v)] = true;
  Permutation p = g;
  for (int v = n; v >= 0; --v)
    if (!hit[static_cast<std::size_t>(v)]) p = face_perm(v, p);
  const auto& e = epi.values();
  for (std::size_t t = 0; t + 1 < e.size(); ++t)
    if (e[t] == e[t + 1]) p = degeneracy_perm(static_cast<int>(t), p);
  return p;
}

// ---------------------------------------------------------------------------
// Right cyclic orbits

BundleTotalSpace E_of(const Permutation& g, int max_dim) {
  const int n = g.degree();
  using Key = std::pair<MonotoneOperator, Permutation>;
  std::vector<std::map<Key, int>> index;
  std::vector<std::vector<Key>> keys;
  for (int m = 0; m <= max_dim; ++m) {
    auto& ks = keys.emplace_back();
    for (const auto& alpha : all_operators(m, n)) {
      const Permutation base = act_perm(alpha, g);
      for (int k = 0; k <= m; ++k) ks.emplace_back(alpha, multiply(base, CyclicElement{m, k}.as_permutation()));
    }
    std::sort(ks.begin(), ks.end());
    auto& idx = index.emplace_back();
    for (std::size_t id = 0; id < ks.size(); ++id) idx.emplace(ks[id], static_cast<int>(id));
  }
  const auto lookup = [&index](int m, const Key& k) {
    auto it = index[static_cast<std::size_t>(m)].find(k);
    require(it != index[static_cast<std::size_t>(m)].end(), "orbit is not closed under the structure maps");
    return it->second;
  };

  auto total = std::make_shared<SimplicialSet>(max_dim, true);
  auto delta = build_delta(n, max_dim);
  auto s = build_S(max_dim);
  const auto ops = operator_index(n, max_dim);
  BundleTotalSpace out{total, delta, {total, delta, {}}, {total, s, {}}};
  for (int m = 0; m <= max_dim; ++m) {
    auto& lv = total->level(m);
    auto& proj = out.projection.assignment.emplace_back();
    auto& cls = out.classifying.assignment.emplace_back();
    for (const auto& [alpha, p] : keys[static_cast<std::size_t>(m)]) {
      lv.payloads.push_back("(" + operator_payload(alpha) + "|" + p.to_string() + ")");
      proj.push_back(ops[static_cast<std::size_t>(m)].at(alpha));
      cls.push_back(static_cast<int>(lex_rank(p.word())));
      for (int i = 0; m > 0 && i <= m; ++i)
        lv.faces.push_back(lookup(m - 1, Key(compose(alpha, coface(m, i)), face_perm(i, p))));
      for (int i = 0; m < max_dim && i <= m; ++i)
        lv.degeneracies.push_back(lookup(m + 1, Key(compose(alpha, codegeneracy(m, i)), degeneracy_perm(i, p))));
    }
  }
  return out;
}

std::optional<std::string> pullback_coincidence(const Permutation& g, int max_dim) {
  const int n = g.degree();
  require(n <= max_dim, "truncation below the degree of g");
  auto s = build_S(max_dim);
  auto sc = build_SC(max_dim);
  const auto quot = quotient_map(s, sc);
  const int orbit = payload_index(*sc, n).at(quotient_circ(g).to_string());
  const auto y = yoneda(sc, n, orbit);
  const auto pb = pullback(quot, y);
  const auto e = E_of(g, max_dim);

  if (auto bad = audit_identities(*e.total)) return "E(" + g.to_string() + "): " + *bad;
  if (auto bad = audit_map(e.projection)) return "q1 not simplicial: " + *bad;
  if (auto bad = audit_map(e.classifying)) return "q2 not simplicial: " + *bad;

  SimplicialMap phi{e.total, pb.total, {}};
  for (int m = 0; m <= max_dim; ++m) {
    std::map<std::pair<int, int>, int> pairs;
    for (int id = 0; id < static_cast<int>(pb.total->count(m)); ++id) pairs.emplace(std::pair(pb.first(m, id), pb.second(m, id)), id);
    auto& row = phi.assignment.emplace_back();
    for (int id = 0; id < static_cast<int>(e.total->count(m)); ++id) {
      if (quot(m, e.classifying(m, id)) != y(m, e.projection(m, id)))
        return "pullback square does not commute at " + at(m, id);
      auto it = pairs.find({e.classifying(m, id), e.projection(m, id)});
      if (it == pairs.end()) return "orbit simplex missing from the pullback at " + at(m, id);
      row.push_back(it->second);
    }
  }
  if (!is_isomorphism(phi)) return std::string("comparison map to the pullback is not an isomorphism");
  return std::nullopt;
}

std::optional<std::string> upsilon_discrepancy(const Permutation& g, int max_dim) {
  const int n = g.degree();
  auto delta = build_delta(n, max_dim);
  const auto tw = twisted_product(GroupKind::Cyclic, delta);
  auto s = build_S(max_dim);

  std::vector<std::vector<MonotoneOperator>> ops;
  for (int m = 0; m <= max_dim; ++m) ops.push_back(all_operators(m, n));

  // Cyclic Yoneda map (h, alpha) -> h . alpha_* g.
  SimplicialMap decor{tw.total, s, {}};
  for (int m = 0; m <= max_dim; ++m) {
    auto& row = decor.assignment.emplace_back();
    for (int id = 0; id < static_cast<int>(tw.total->count(m)); ++id) {
      const auto& h = tw.group_component[static_cast<std::size_t>(m)][static_cast<std::size_t>(id)];
      const auto& alpha = ops[static_cast<std::size_t>(m)][static_cast<std::size_t>(tw.base_component[static_cast<std::size_t>(m)][static_cast<std::size_t>(id)])];
      row.push_back(static_cast<int>(lex_rank(multiply(h, act_perm(alpha, g)).word())));
    }
  }
  if (auto bad = audit_map(decor)) return "cyclic Yoneda map is not simplicial: " + *bad;

  const auto reoriented = reorient_upsilon(decor);
  if (auto bad = audit_identities(*reoriented)) return "reoriented set: " + *bad;
  const auto inverted = reoriented_decoration(reoriented, decor);
  if (auto bad = audit_map(inverted)) return "inverted decoration is not simplicial: " + *bad;

  const Permutation g_inv = inverse(g);
  const auto e = E_of(g_inv, max_dim);
  const auto op_ids = operator_index(n, max_dim);
  SimplicialMap phi{reoriented, e.total, {}};
  for (int m = 0; m <= max_dim; ++m) {
    std::map<std::pair<int, int>, int> pairs;
    for (int id = 0; id < static_cast<int>(e.total->count(m)); ++id) pairs.emplace(std::pair(e.projection(m, id), e.classifying(m, id)), id);
    auto& row = phi.assignment.emplace_back();
    for (int id = 0; id < static_cast<int>(reoriented->count(m)); ++id) {
      const auto& alpha = ops[static_cast<std::size_t>(m)][static_cast<std::size_t>(tw.base_component[static_cast<std::size_t>(m)][static_cast<std::size_t>(id)])];
      std::vector<int> word;
      for (int v : alpha.values()) word.push_back(g_inv(v));
      const auto beta = sort_factorization(SetMap(n + 1, std::move(word))).monotone;
      auto it = pairs.find({op_ids[static_cast<std::size_t>(m)].at(beta), inverted(m, id)});
      if (it == pairs.end()) return "reoriented simplex has no partner in E(g^-1) at " + at(m, id);
      row.push_back(it->second);
    }
  }
  if (!is_isomorphism(phi)) return std::string("reoriented twisted product is not isomorphic to E(g^-1)");
  return std::nullopt;
}

bool upsilon_comparison(const Permutation& g, int max_dim) { return !upsilon_discrepancy(g, max_dim); }

// ---------------------------------------------------------------------------
// Decorated bases

std::optional<std::string> check_decoration(const Decoration& d) {
  const auto& b = *d.base;
  if (d.assignment.size() != static_cast<std::size_t>(b.max_dim() + 1)) return std::string("assignment dimension count mismatch");
  for (int n = 0; n <= b.max_dim(); ++n) {
    const auto& row = d.assignment[static_cast<std::size_t>(n)];
    if (row.size() != b.count(n)) return "assignment size mismatch in dim " + std::to_string(n);
    for (int id = 0; id < static_cast<int>(row.size()); ++id) {
      const auto& c = row[static_cast<std::size_t>(id)];
      if (c.degree() != n) return "decoration of the wrong size at " + at(n, id);
      for (int i = 0; n > 0 && i <= n; ++i)
        if (face_circ(i, c) != d.assignment[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(b.face(n, id, i))])
          return "decoration is not compatible with d" + std::to_string(i) + " at " + at(n, id);
      if (b.has_degeneracies() && n < b.max_dim())
        for (int i = 0; i <= n; ++i)
          if (degeneracy_circ(i, c) != d.assignment[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(b.degeneracy(n, id, i))])
            return "decoration is not compatible with s" + std::to_string(i) + " at " + at(n, id);
    }
  }
  return std::nullopt;
}

CompletedBase degeneracy_completion(const SimplicialSetPtr& semi, int max_dim) {
  require(!semi->has_degeneracies(), "degeneracy completion expects a semi-simplicial set");
  const auto& b = *semi;
  using Key = std::pair<MonotoneOperator, int>;
  std::vector<std::vector<Key>> keys;
  std::vector<std::map<Key, int>> index;
  for (int m = 0; m <= max_dim; ++m) {
    auto& ks = keys.emplace_back();
    for (int k = 0; k <= std::min(m, b.max_dim()); ++k)
      for (const auto& eps : all_operators(m, k))
        if (eps.is_surjective())
          for (int x = 0; x < static_cast<int>(b.count(k)); ++x) ks.emplace_back(eps, x);
    std::sort(ks.begin(), ks.end());
    auto& idx = index.emplace_back();
    for (std::size_t id = 0; id < ks.size(); ++id) idx.emplace(ks[id], static_cast<int>(id));
  }

  auto out = std::make_shared<SimplicialSet>(max_dim, true);
  CompletedBase result{out, {}, {}};
  for (int m = 0; m <= max_dim; ++m) {
    auto& lv = out->level(m);
    auto& collapse = result.collapse.emplace_back();
    auto& origin = result.origin.emplace_back();
    for (const auto& [eps, x] : keys[static_cast<std::size_t>(m)]) {
      const int k = eps.target_size() - 1;
      collapse.push_back(eps);
      origin.push_back(x);
      if (k == m) {
        lv.payloads.push_back(b.payload(k, x));
      } else {
        std::string p = "deg:";
        for (std::size_t j = 0; j < eps.values().size(); ++j) p += (j ? "," : "") + std::to_string(eps.values()[j]);
        lv.payloads.push_back(p + "|" + b.payload(k, x));
      }
      for (int i = 0; m > 0 && i <= m; ++i) {
        const auto phi = compose(eps, coface(m, i));
        const auto face = [&]() -> Key {
          if (phi.is_surjective()) return Key(phi, x);
          // phi misses exactly one vertex; the face of x opposite to it carries the rest.
          const auto [epi, mono] = epi_mono(phi);
          int missing = 0;
          while (missing < static_cast<int>(mono.values().size()) && mono(missing) == missing) ++missing;
          return Key(epi, b.face(k, x, missing));
        }();
        lv.faces.push_back(index[static_cast<std::size_t>(m - 1)].at(face));
      }
      for (int i = 0; m < max_dim && i <= m; ++i)
        lv.degeneracies.push_back(index[static_cast<std::size_t>(m + 1)].at(Key(compose(eps, codegeneracy(m, i)), x)));
    }
  }
  return result;
}

CompletedBase trivial_completion(const SimplicialSetPtr& simplicial) {
  require(simplicial->has_degeneracies(), "expected a simplicial set with degeneracies");
  CompletedBase out{simplicial, {}, {}};
  for (int n = 0; n <= simplicial->max_dim(); ++n) {
    out.collapse.emplace_back(simplicial->count(n), MonotoneOperator::identity(n + 1));
    auto& origin = out.origin.emplace_back();
    for (int id = 0; id < static_cast<int>(simplicial->count(n)); ++id) origin.push_back(id);
  }
  return out;
}

SimplicialMap decoration_map(const Decoration& d, const CompletedBase& completed, const SimplicialSetPtr& sc) {
  SimplicialMap out{completed.set, sc, {}};
  for (int m = 0; m <= completed.set->max_dim(); ++m) {
    const auto index = payload_index(*sc, m);
    auto& row = out.assignment.emplace_back();
    for (std::size_t id = 0; id < completed.set->count(m); ++id) {
      const auto& eps = completed.collapse[static_cast<std::size_t>(m)][id];
      const int k = eps.target_size() - 1;
      const auto& c = d.assignment.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(completed.origin[static_cast<std::size_t>(m)][id]));
      row.push_back(index.at(degenerate_circ(eps, c).to_string()));
    }
  }
  return out;
}

BundleTotalSpace total_space(const Decoration& d, int max_dim) {
  if (auto bad = check_decoration(d)) fail(ErrorKind::InvalidArgument, "invalid decoration: " + *bad);
  const auto completed = d.base->has_degeneracies() ? trivial_completion(d.base) : degeneracy_completion(d.base, max_dim);
  const int top = completed.set->max_dim();
  auto s = build_S(top);
  auto sc = build_SC(top);
  const auto pb = pullback(quotient_map(s, sc), decoration_map(d, completed, sc));
  return {pb.total, completed.set, pb.second, pb.first};
}

std::optional<std::string> verify_bundle(const Decoration& d, const BundleTotalSpace& b) {
  if (auto bad = audit_map(b.projection)) return "projection: " + *bad;
  if (auto bad = audit_map(b.classifying)) return "classifying map: " + *bad;
  const auto completed = d.base->has_degeneracies() ? trivial_completion(d.base)
                                                    : degeneracy_completion(d.base, b.base->max_dim());
  const auto sc = build_SC(b.base->max_dim());
  const auto q = quotient_map(b.classifying.target, sc);
  const auto decor = decoration_map(d, completed, sc);
  for (int m = 0; m <= b.total->max_dim(); ++m) {
    std::vector<int> fiber(b.base->count(m), 0);
    for (int id = 0; id < static_cast<int>(b.total->count(m)); ++id) {
      const int down = b.projection(m, id);
      if (q(m, b.classifying(m, id)) != decor(m, down))
        return "square fails at dim " + std::to_string(m) + " id " + std::to_string(id);
      ++fiber[static_cast<std::size_t>(down)];
    }
    for (std::size_t id = 0; id < fiber.size(); ++id)
      if (fiber[id] != m + 1)
        return "fiber over dim " + std::to_string(m) + " id " + std::to_string(id) + " has " +
               std::to_string(fiber[id]) + " simplices";
  }
  return std::nullopt;
}

int TwoCochain::sum() const {
  int s = 0;
  for (int v : values) s += v;
  return s;
}

TwoCochain chern_cochain(const Decoration& d) {
  TwoCochain c;
  if (d.assignment.size() < 3) return c;
  const std::vector<int> marked{0, 2, 1};
  for (const auto& circ : d.assignment[2]) c.values.push_back(circ.word() == marked ? 1 : 0);
  return c;
}

Decoration decorate_from_cochain(const SimplicialSetPtr& base, const TwoCochain& c) {
  const auto& b = *base;
  for (int n = 3; n <= b.max_dim(); ++n)
    require(b.count(n) == 0, "cochain decorations need a base of dimension at most 2");
  const std::size_t triangles = b.max_dim() >= 2 ? b.count(2) : 0;
  require(c.values.size() == triangles, "cochain has " + std::to_string(c.values.size()) + " values for " +
                                            std::to_string(triangles) + " triangles");
  Decoration d{base, {}};
  for (int n = 0; n <= b.max_dim(); ++n) {
    auto& row = d.assignment.emplace_back();
    for (std::size_t id = 0; id < b.count(n); ++id) {
      if (n == 0) row.emplace_back(std::vector<int>{0});
      if (n == 1) row.emplace_back(std::vector<int>{0, 1});
      if (n == 2) {
        const int v = c.values[id];
        require(v == 0 || v == 1, "cochain values must be 0 or 1");
        row.emplace_back(v == 1 ? std::vector<int>{0, 2, 1} : std::vector<int>{0, 1, 2});
      }
    }
  }
  if (auto bad = check_decoration(d)) fail(ErrorKind::InvalidArgument, "cochain gives an invalid decoration: " + *bad);
  return d;
}

std::variant<Decoration, Obstruction> extend_decoration(const PartialDecoration& partial) {
  const auto& b = *partial.base;
  require(partial.assignment.size() == static_cast<std::size_t>(b.max_dim() + 1), "partial decoration dimension count mismatch");
  std::vector<std::vector<std::optional<CircularPermutation>>> work = partial.assignment;
  for (int n = 0; n <= b.max_dim(); ++n) {
    require(work[static_cast<std::size_t>(n)].size() == b.count(n), "partial decoration size mismatch");
    for (int id = 0; id < static_cast<int>(b.count(n)); ++id) {
      const auto& c = work[static_cast<std::size_t>(n)][static_cast<std::size_t>(id)];
      if (!c) continue;
      require(c->degree() == n, "partial decoration of the wrong size at " + at(n, id));
      for (int i = 0; n > 0 && i <= n; ++i) {
        const auto& f = work[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(b.face(n, id, i))];
        require(!f || *f == face_circ(i, *c), "partial decoration is not face compatible at " + at(n, id));
      }
    }
  }

  for (int n = 0; n <= b.max_dim(); ++n) {
    const auto candidates = all_circular(n);
    const auto degenerate = b.degenerate_flags(n);
    for (int id = 0; id < static_cast<int>(b.count(n)); ++id) {
      auto& slot = work[static_cast<std::size_t>(n)][static_cast<std::size_t>(id)];
      if (slot) continue;
      bool placed = false;
      for (const auto& c : candidates) {
        bool ok = true;
        for (int i = 0; ok && i <= n && n > 0; ++i)
          ok = *work[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(b.face(n, id, i))] == face_circ(i, c);
        if (ok && degenerate[static_cast<std::size_t>(id)]) {
          // A degenerate simplex must carry the degenerate decoration it comes from.
          for (int i = 0; ok && i < n; ++i)
            for (int y = 0; y < static_cast<int>(b.count(n - 1)); ++y)
              if (b.degeneracy(n - 1, y, i) == id) ok = ok && degeneracy_circ(i, *work[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(y)]) == c;
        }
        if (ok) {
          slot = c;
          placed = true;
          break;
        }
      }
      if (!placed) return Obstruction{n, id};
    }
  }

  Decoration d{partial.base, {}};
  for (auto& row : work) {
    auto& out = d.assignment.emplace_back();
    for (auto& c : row) out.push_back(*c);
  }
  return d;
}

SimplicialSetPtr semi_simplex(int n) {
  require(n >= 0, "negative simplex dimension");
  return semi_from_subsets(n, n);
}

SimplicialSetPtr semi_boundary(int n) {
  require(n >= 1, "boundary needs n >= 1");
  return semi_from_subsets(n, n - 1);
}

}  // namespace csx
