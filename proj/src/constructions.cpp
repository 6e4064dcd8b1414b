#include "csx/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "csx/error.hpp"

namespace csx {

namespace {

std::vector<int> canonical_rotation(std::vector<int> w) {
  const auto zero = std::find(w.begin(), w.end(), 0);
  std::rotate(w.begin(), zero, w.end());
  return w;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "bad word '" + text + "'");
    }
    require(used == item.size(), "bad word '" + text + "'");
    w.push_back(v);
  }
  return w;
}

std::string join(const std::vector<int>& w) {
  std::string s;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(w[j]);
  }
  return s;
}

// Fills face and degeneracy tables from key-level rules. keys[n] must be the
// sorted simplex keys of dimension n; lookup(n, key) returns the id of key.
template <class Key, class Lookup, class Face, class Degen, class Label>
std::shared_ptr<SimplicialSet> assemble(const std::vector<std::vector<Key>>& keys, bool with_degeneracies, Lookup lookup,
                          Face face, Degen degen, Label label) {
  const int top = static_cast<int>(keys.size()) - 1;
  auto out = std::make_shared<SimplicialSet>(top, with_degeneracies);
  for (int n = 0; n <= top; ++n) {
    auto& lv = out->level(n);
    const auto& ks = keys[static_cast<std::size_t>(n)];
    lv.payloads.reserve(ks.size());
    for (const auto& k : ks) lv.payloads.push_back(label(n, k));
    if (n > 0) {
      lv.faces.reserve(ks.size() * static_cast<std::size_t>(n + 1));
      for (const auto& k : ks)
        for (int i = 0; i <= n; ++i) lv.faces.push_back(lookup(n - 1, face(n, k, i)));
    }
    if (with_degeneracies && n < top) {
      lv.degeneracies.reserve(ks.size() * static_cast<std::size_t>(n + 1));
      for (const auto& k : ks)
        for (int i = 0; i <= n; ++i) lv.degeneracies.push_back(lookup(n + 1, degen(n, k, i)));
    }
  }
  return out;
}

template <class Key>
std::vector<std::map<Key, int>> key_index(const std::vector<std::vector<Key>>& keys) {
  std::vector<std::map<Key, int>> index(keys.size());
  for (std::size_t n = 0; n < keys.size(); ++n)
    for (std::size_t id = 0; id < keys[n].size(); ++id) index[n].emplace(keys[n][id], static_cast<int>(id));
  return index;
}

template <class Key>
auto map_lookup(const std::vector<std::map<Key, int>>& index) {
  return [&index](int n, const Key& k) {
    const auto& m = index.at(static_cast<std::size_t>(n));
    auto it = m.find(k);
    require(it != m.end(), "structure map leaves the simplex set in dim " + std::to_string(n));
    return it->second;
  };
}

}  // namespace

// ---------------------------------------------------------------------------
// Circular permutations

CircularPermutation::CircularPermutation(std::vector<int> word) {
  Permutation check(word);  // validates the bijection
  word_ = canonical_rotation(std::move(word));
}

std::string CircularPermutation::to_string() const { return "circ:" + join(word_); }

CircularPermutation CircularPermutation::parse(const std::string& text) {
  const std::string prefix = "circ:";
  const std::string body = text.rfind(prefix, 0) == 0 ? text.substr(prefix.size()) : text;
  return CircularPermutation(parse_word(body));
}

CircularPermutation quotient_circ(const Permutation& f) { return CircularPermutation(f.word()); }

CircularPermutation face_circ(int i, const CircularPermutation& c) {
  return quotient_circ(face_perm(i, Permutation(c.word())));
}

CircularPermutation degeneracy_circ(int i, const CircularPermutation& c) {
  return quotient_circ(degeneracy_perm(i, Permutation(c.word())));
}

bool is_degenerate_circ(const CircularPermutation& c) {
  const auto& w = c.word();
  const std::size_t m = w.size();
  for (std::size_t j = 0; j < m; ++j)
    if (w[(j + 1) % m] == w[j] + 1) return true;
  return false;
}

std::vector<CircularPermutation> all_circular(int n) {
  std::vector<CircularPermutation> out;
  std::vector<int> w(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) w[static_cast<std::size_t>(j)] = j;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin() + 1, w.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Standard simplices, S*, C*, SC*

std::string operator_payload(const MonotoneOperator& alpha) { return "op:" + join(alpha.values()); }

MonotoneOperator parse_operator_payload(const std::string& text, int target_size) {
  require(text.rfind("op:", 0) == 0, "operator payload must start with 'op:'");
  return MonotoneOperator(target_size, parse_word(text.substr(3)));
}

SimplicialSetPtr build_delta(int n, int max_dim) {
  require(n >= 0 && max_dim >= 0, "negative dimension");
  std::vector<std::vector<MonotoneOperator>> keys;
  for (int m = 0; m <= max_dim; ++m) keys.push_back(all_operators(m, n));
  const auto index = key_index(keys);
  return assemble(
      keys, true, map_lookup(index),
      [](int m, const MonotoneOperator& a, int i) { return compose(a, coface(m, i)); },
      [](int m, const MonotoneOperator& a, int i) { return compose(a, codegeneracy(m, i)); },
      [](int, const MonotoneOperator& a) { return operator_payload(a); });
}

SimplicialSetPtr build_S(int max_dim) {
  std::vector<std::vector<Permutation>> keys;
  for (int n = 0; n <= max_dim; ++n) keys.push_back(all_permutations(n));
  return assemble(
      keys, true, [](int, const Permutation& f) { return static_cast<int>(lex_rank(f.word())); },
      [](int, const Permutation& f, int i) { return face_perm(i, f); },
      [](int, const Permutation& f, int i) { return degeneracy_perm(i, f); },
      [](int, const Permutation& f) { return f.to_string(); });
}

std::vector<Permutation> group_elements(GroupKind group, int n) {
  if (group == GroupKind::Symmetric) return all_permutations(n);
  std::vector<Permutation> out;
  for (int k = 0; k <= n; ++k) out.push_back(CyclicElement{n, k}.as_permutation());
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialSetPtr build_C(int max_dim) {
  std::vector<std::vector<Permutation>> keys;
  for (int n = 0; n <= max_dim; ++n) keys.push_back(group_elements(GroupKind::Cyclic, n));
  // Sorted by word, the id of a power of tau is its first letter.
  const auto lookup = [](int, const Permutation& f) { return f(0); };
  return assemble(
      keys, true, lookup, [](int, const Permutation& f, int i) { return face_perm(i, f); },
      [](int, const Permutation& f, int i) { return degeneracy_perm(i, f); },
      [](int, const Permutation& f) { return f.to_string(); });
}

SimplicialSetPtr build_SC(int max_dim) {
  std::vector<std::vector<CircularPermutation>> keys;
  for (int n = 0; n <= max_dim; ++n) keys.push_back(all_circular(n));
  const auto lookup = [](int, const CircularPermutation& c) {
    const auto& w = c.word();
    return static_cast<int>(lex_rank(std::span<const int>(w).subspan(1)));
  };
  return assemble(
      keys, true, lookup, [](int, const CircularPermutation& c, int i) { return face_circ(i, c); },
      [](int, const CircularPermutation& c, int i) { return degeneracy_circ(i, c); },
      [](int, const CircularPermutation& c) { return c.to_string(); });
}

SimplicialMap quotient_map(const SimplicialSetPtr& s, const SimplicialSetPtr& sc) {
  require(sc->max_dim() >= s->max_dim(), "quotient target truncation too small");
  SimplicialMap out{s, sc, {}};
  for (int n = 0; n <= s->max_dim(); ++n) {
    const auto index = payload_index(*sc, n);
    auto& row = out.assignment.emplace_back();
    row.reserve(s->count(n));
    for (const auto& p : s->level(n).payloads) row.push_back(index.at(quotient_circ(Permutation::parse(p)).to_string()));
  }
  return out;
}

SimplicialMap quotient_map(int max_dim) { return quotient_map(build_S(max_dim), build_SC(max_dim)); }

// ---------------------------------------------------------------------------
// Twisted products

TwistedProduct twisted_product(GroupKind group, const SimplicialSetPtr& x) {
  require(x->has_degeneracies(), "twisted product needs a simplicial set with degeneracies");
  const int top = x->max_dim();
  using Key = std::pair<Permutation, int>;
  std::vector<std::vector<Key>> keys;
  for (int n = 0; n <= top; ++n) {
    auto& ks = keys.emplace_back();
    for (const auto& h : group_elements(group, n))
      for (int id = 0; id < static_cast<int>(x->count(n)); ++id) ks.emplace_back(h, id);
  }
  const auto index = key_index(keys);
  const auto& base = *x;
  auto total = assemble(
      keys, true, map_lookup(index),
      [&base](int n, const Key& k, int i) {
        return Key(face_perm(i, k.first), base.face(n, k.second, k.first.position_of(i)));
      },
      [&base](int n, const Key& k, int i) {
        return Key(degeneracy_perm(i, k.first), base.degeneracy(n, k.second, k.first.position_of(i)));
      },
      [&base](int n, const Key& k) {
        return "(" + k.first.to_string() + "|" + base.payload(n, k.second) + ")";
      });

  TwistedProduct out{total, x, {}, {}};
  for (const auto& ks : keys) {
    auto& g = out.group_component.emplace_back();
    auto& b = out.base_component.emplace_back();
    for (const auto& [h, id] : ks) {
      g.push_back(h);
      b.push_back(id);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pullbacks and Yoneda simplices

Pullback pullback(const SimplicialMap& p, const SimplicialMap& q) {
  require(p.target == q.target, "pullback requires a common target");
  const auto& a = *p.source;
  const auto& b = *q.source;
  const int top = std::min(a.max_dim(), b.max_dim());
  const bool degens = a.has_degeneracies() && b.has_degeneracies();

  using Key = std::pair<int, int>;
  std::vector<std::vector<Key>> keys;
  for (int n = 0; n <= top; ++n) {
    std::unordered_map<int, std::vector<int>> over;
    for (int y = 0; y < static_cast<int>(b.count(n)); ++y) over[q(n, y)].push_back(y);
    auto& ks = keys.emplace_back();
    for (int x = 0; x < static_cast<int>(a.count(n)); ++x) {
      auto it = over.find(p(n, x));
      if (it == over.end()) continue;
      for (int y : it->second) ks.emplace_back(x, y);
    }
  }
  const auto index = key_index(keys);
  auto total = assemble(
      keys, degens, map_lookup(index),
      [&](int n, const Key& k, int i) { return Key(a.face(n, k.first, i), b.face(n, k.second, i)); },
      [&](int n, const Key& k, int i) { return Key(a.degeneracy(n, k.first, i), b.degeneracy(n, k.second, i)); },
      [&](int n, const Key& k) { return "(" + a.payload(n, k.first) + "|" + b.payload(n, k.second) + ")"; });

  Pullback out{total, {total, p.source, {}}, {total, q.source, {}}};
  for (const auto& ks : keys) {
    auto& first = out.first.assignment.emplace_back();
    auto& second = out.second.assignment.emplace_back();
    for (const auto& [x, y] : ks) {
      first.push_back(x);
      second.push_back(y);
    }
  }
  return out;
}

SimplicialMap yoneda(const SimplicialSetPtr& x, int n, int id) {
  require(n >= 0 && n <= x->max_dim(), "yoneda simplex dimension exceeds truncation");
  require(id >= 0 && static_cast<std::size_t>(id) < x->count(n), "yoneda simplex id out of range");
  auto delta = build_delta(n, x->max_dim());
  SimplicialMap out{delta, x, {}};
  for (int m = 0; m <= x->max_dim(); ++m) {
    auto& row = out.assignment.emplace_back();
    for (const auto& alpha : all_operators(m, n)) row.push_back(act(*x, alpha, id));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Order reorientation

std::vector<std::vector<Permutation>> decode_permutations(const SimplicialSet& s) {
  std::vector<std::vector<Permutation>> out;
  for (int n = 0; n <= s.max_dim(); ++n) {
    auto& row = out.emplace_back();
    for (const auto& p : s.level(n).payloads) {
      auto f = Permutation::parse(p);
      require(f.degree() == n, "permutation payload has the wrong degree in dim " + std::to_string(n));
      row.push_back(std::move(f));
    }
  }
  return out;
}

SimplicialSetPtr reorient_upsilon(const SimplicialMap& decor) {
  if (auto bad = audit_map(decor)) fail(ErrorKind::NotSimplicial, "decoration is not simplicial: " + *bad);
  const auto perms = decode_permutations(*decor.target);
  const auto& src = *decor.source;
  auto out = std::make_shared<SimplicialSet>(src.max_dim(), src.has_degeneracies());
  for (int n = 0; n <= src.max_dim(); ++n) {
    auto& lv = out->level(n);
    lv.payloads = src.level(n).payloads;
    const bool degens = src.has_degeneracies() && n < src.max_dim();
    for (int id = 0; id < static_cast<int>(src.count(n)); ++id) {
      const auto& a = perms[static_cast<std::size_t>(n)][static_cast<std::size_t>(decor(n, id))];
      for (int i = 0; n > 0 && i <= n; ++i) lv.faces.push_back(src.face(n, id, a(i)));
      for (int i = 0; degens && i <= n; ++i) lv.degeneracies.push_back(src.degeneracy(n, id, a(i)));
    }
  }
  return out;
}

SimplicialMap reoriented_decoration(const SimplicialSetPtr& reoriented, const SimplicialMap& decor) {
  const auto perms = decode_permutations(*decor.target);
  SimplicialMap out{reoriented, decor.target, {}};
  for (int n = 0; n <= reoriented->max_dim(); ++n) {
    const auto index = payload_index(*decor.target, n);
    auto& row = out.assignment.emplace_back();
    for (int id = 0; id < static_cast<int>(reoriented->count(n)); ++id) {
      const auto& a = perms[static_cast<std::size_t>(n)][static_cast<std::size_t>(decor(n, id))];
      row.push_back(index.at(inverse(a).to_string()));
    }
  }
  return out;
}

}  // namespace csx
