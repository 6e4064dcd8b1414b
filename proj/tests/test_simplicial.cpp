#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "csx/bundles.hpp"
#include "csx/checks.hpp"
#include "csx/constructions.hpp"
#include "csx/error.hpp"

using namespace csx;

namespace {

long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

// Derangement numbers, which count circular words of n+1 beads without a
// succession i -> i+1.
long long derangements(int n) {
  long long a = 1, b = 0;  // D_0, D_1
  if (n == 0) return a;
  for (int k = 2; k <= n; ++k) {
    const long long c = (k - 1) * (a + b);
    a = b;
    b = c;
  }
  return b;
}

// Circular words starting at 0 with no circular succession, by brute force.
std::size_t nondegenerate_circular_brute(int n) {
  std::vector<int> tail(static_cast<std::size_t>(n));
  std::iota(tail.begin(), tail.end(), 1);
  std::size_t count = 0;
  do {
    std::vector<int> w{0};
    w.insert(w.end(), tail.begin(), tail.end());
    bool degenerate = false;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int next = w[(k + 1) % w.size()];
      if (w[k] < n && next == w[k] + 1) degenerate = true;
    }
    count += degenerate ? 0 : 1;
  } while (std::next_permutation(tail.begin(), tail.end()));
  return count;
}

SimplicialMap identity_map(const SimplicialSetPtr& x) {
  SimplicialMap f{x, x, {}};
  for (int n = 0; n <= x->max_dim(); ++n) {
    auto& row = f.assignment.emplace_back(x->count(n));
    std::iota(row.begin(), row.end(), 0);
  }
  return f;
}

}  // namespace

TEST_CASE("standard simplices") {
  const auto point = build_delta(0, 3);
  for (int m = 0; m <= 3; ++m) CHECK(point->count(m) == 1);
  CHECK(nondegenerate_list(*point, 2).empty());

  const auto d1 = build_delta(1, 1);
  CHECK(d1->count(0) == 2);
  CHECK(d1->count(1) == 3);
  CHECK(nondegenerate_list(*d1, 1).size() == 1);

  CHECK(build_delta(2, 2)->count(2) == 10);
  for (int n = 0; n <= 4; ++n) {
    const auto d = build_delta(n, 5);
    for (int m = 0; m <= 5; ++m) {
      CHECK(static_cast<long long>(d->count(m)) == binom(m + n + 1, n));
      CHECK(static_cast<long long>(nondegenerate_list(*d, m).size()) == binom(n + 1, m + 1));
    }
    CHECK_FALSE(audit_identities(*d).has_value());
  }
}

TEST_CASE("S, C and SC counts") {
  const auto s = build_S(6);
  const auto c = build_C(6);
  const auto sc = build_SC(7);
  for (int n = 0; n <= 6; ++n) {
    CHECK(s->count(n) == factorial(n + 1));
    CHECK(c->count(n) == static_cast<std::size_t>(n + 1));
  }
  CHECK(nondegenerate_list(*s, 2).size() == 3);
  CHECK(nondegenerate_list(*c, 1).size() == 1);
  CHECK(c->payload(1, nondegenerate_list(*c, 1).front()) == "1,0");
  for (int n = 2; n <= 6; ++n) CHECK(nondegenerate_list(*c, n).empty());
  for (int n = 0; n <= 7; ++n) {
    CHECK(sc->count(n) == factorial(n));
    CHECK(nondegenerate_list(*sc, n).size() == nondegenerate_circular_brute(n));
    CHECK(static_cast<long long>(nondegenerate_list(*sc, n).size()) == derangements(n));
  }
  const auto nd2 = nondegenerate_list(*sc, 2);
  REQUIRE(nd2.size() == 1);
  CHECK(sc->payload(2, nd2.front()) == "circ:0,2,1");
}

TEST_CASE("circular canonical form") {
  CHECK(quotient_circ(Permutation({2, 0, 1})).to_string() == "circ:0,1,2");
  CHECK(quotient_circ(Permutation({0, 1, 2})).to_string() == "circ:0,1,2");
  CHECK(quotient_circ(Permutation({1, 0})) == quotient_circ(Permutation({0, 1})));
  CHECK(CircularPermutation::parse("circ:2,1,0") == CircularPermutation::parse("0,2,1"));
  CHECK(is_degenerate_circ(CircularPermutation({0, 1, 2})));
  CHECK_FALSE(is_degenerate_circ(CircularPermutation({0, 2, 1})));
  CHECK_THROWS_AS(CircularPermutation::parse("circ:0,0"), Error);
}

TEST_CASE("quotient map: simplicial with fibers of size n+1") {
  const auto s = build_S(6);
  const auto sc = build_SC(6);
  const auto q = quotient_map(s, sc);
  CHECK_FALSE(audit_map(q).has_value());
  for (int n = 0; n <= 6; ++n) {
    std::vector<int> fiber(sc->count(n), 0);
    for (int id = 0; id < static_cast<int>(s->count(n)); ++id) ++fiber[static_cast<std::size_t>(q(n, id))];
    CHECK(std::all_of(fiber.begin(), fiber.end(), [n](int k) { return k == n + 1; }));
  }
  // Fibers are right C_n-orbits.
  const auto idx = payload_index(*s, 3);
  for (const auto& f : all_permutations(3))
    for (int k = 0; k <= 3; ++k) {
      const auto g = multiply(f, CyclicElement{3, k}.as_permutation());
      CHECK(q(3, idx.at(f.to_string())) == q(3, idx.at(g.to_string())));
    }
}

TEST_CASE("identity audits on constructed sets") {
  for (const char* t : {"S", "C", "SC", "delta:3", "twisted:C:2", "twisted:S:1", "E:2,0,1"})
    CHECK_MESSAGE(!audit_identities(*build_target(t, 5)).has_value(), t);
}

TEST_CASE("audit detects a broken face table") {
  const auto good = build_delta(2, 3);
  auto bad = std::make_shared<SimplicialSet>(*good);
  bad->level(2).faces[0] = bad->level(2).faces[1] == 0 ? 1 : 0;
  CHECK(audit_identities(*bad).has_value());
}

TEST_CASE("twisted products") {
  const auto c = build_C(5);
  const auto unit = twisted_product(GroupKind::Cyclic, build_delta(0, 5));
  SimplicialMap to_c{unit.total, c, {}};
  for (int m = 0; m <= 5; ++m) {
    auto& row = to_c.assignment.emplace_back();
    for (const auto& h : unit.group_component[static_cast<std::size_t>(m)]) row.push_back(h(0));
  }
  CHECK(is_isomorphism(to_c));

  for (int n = 0; n <= 3; ++n) {
    const auto tw = twisted_product(GroupKind::Cyclic, build_delta(n, n + 2));
    for (int m = 0; m <= n + 2; ++m) CHECK(static_cast<long long>(tw.total->count(m)) == (m + 1) * binom(m + n + 1, n));
    CHECK(nondegenerate_list(*tw.total, n + 1).size() == static_cast<std::size_t>(n + 1));
    CHECK_FALSE(audit_identities(*tw.total).has_value());
  }
  CHECK(twisted_product(GroupKind::Cyclic, build_delta(1, 2)).total->count(1) == 6);
}

TEST_CASE("pullbacks") {
  const auto s = build_S(4);
  const auto sc = build_SC(4);
  const auto pb = pullback(quotient_map(s, sc), identity_map(sc));
  CHECK(is_isomorphism(pb.first));

  // Over the Yoneda simplex of an orbit in SC_2: levelwise fiber sizes.
  const int orbit = payload_index(*sc, 2).at("circ:0,2,1");
  const auto y = yoneda(sc, 2, orbit);
  const auto over = pullback(quotient_map(s, sc), y);
  for (int m = 0; m <= 4; ++m) CHECK(static_cast<long long>(over.total->count(m)) == (m + 1) * binom(m + 3, 2));
  CHECK_FALSE(audit_map(over.first).has_value());
  CHECK_FALSE(audit_map(over.second).has_value());
}

TEST_CASE("yoneda simplices") {
  const auto s = build_S(4);
  const auto y0 = yoneda(s, 0, 0);
  for (int m = 0; m <= 4; ++m) CHECK(s->payload(m, y0(m, 0)) == Permutation::identity(m).to_string());

  const auto sc = build_SC(4);
  const int orbit = payload_index(*sc, 2).at("circ:0,2,1");
  const auto y = yoneda(sc, 2, orbit);
  CHECK_FALSE(audit_map(y).has_value());
  const auto ops = all_operators(1, 2);
  for (std::size_t k = 0; k < ops.size(); ++k)
    if (ops[k].is_injective()) CHECK(y(1, static_cast<int>(k)) == 0);
  const auto top = all_operators(2, 2);
  const auto at_id = std::find(top.begin(), top.end(), MonotoneOperator::identity(3)) - top.begin();
  CHECK(y(2, static_cast<int>(at_id)) == orbit);
}

TEST_CASE("reorientation") {
  // Constant identity decoration changes nothing.
  const auto d = build_delta(2, 4);
  const auto s = build_S(4);
  SimplicialMap flat{d, s, {}};
  for (int m = 0; m <= 4; ++m) flat.assignment.emplace_back(d->count(m), 0);
  const auto same = reorient_upsilon(flat);
  for (int m = 0; m <= 4; ++m) {
    CHECK(same->level(m).faces == d->level(m).faces);
    CHECK(same->level(m).degeneracies == d->level(m).degeneracies);
  }

  // S along the identity: the face d_i f becomes (d_i f^-1)^-1.
  const auto id = identity_map(s);
  const auto r = reorient_upsilon(id);
  CHECK_FALSE(audit_identities(*r).has_value());
  const auto inv = reoriented_decoration(r, id);
  CHECK_FALSE(audit_map(inv).has_value());
  for (int n = 1; n <= 4; ++n)
    for (int x = 0; x < static_cast<int>(s->count(n)); ++x) {
      const auto f = Permutation::parse(s->payload(n, x));
      for (int i = 0; i <= n; ++i)
        CHECK(r->payload(n - 1, r->face(n, x, i)) == inverse(face_perm(i, inverse(f))).to_string());
    }

  // Twice returns the original tables.
  const auto back = reorient_upsilon(inv);
  for (int m = 0; m <= 4; ++m) {
    CHECK(back->level(m).faces == s->level(m).faces);
    CHECK(back->level(m).degeneracies == s->level(m).degeneracies);
  }
}

TEST_CASE("operator action on permutations is functorial") {
  const auto s = build_S(3);
  for (int n = 0; n <= 3; ++n)
    for (const auto& g : all_permutations(n)) {
      CHECK(act_perm(MonotoneOperator::identity(n + 1), g) == g);
      for (int m = 0; m <= 3; ++m)
        for (const auto& a : all_operators(m, n)) {
          const auto ag = act_perm(a, g);
          for (int k = 0; k <= 3; ++k)
            for (const auto& b : all_operators(k, m))
              CHECK(static_cast<int>(lex_rank(act_perm(compose(a, b), g).word())) ==
                    act(*s, b, static_cast<int>(lex_rank(ag.word()))));
        }
    }
}

TEST_CASE("targets") {
  CHECK(build_target("delta:2", 3)->count(3) == 15);
  CHECK(build_target("boundary:3", 0)->count(2) == 4);
  CHECK_FALSE(build_target("simplex:2", 0)->has_degeneracies());
  CHECK_THROWS_AS(build_target("nope", 3), Error);
  CHECK_THROWS_AS(build_target("twisted:Q:2", 3), Error);
  CHECK_THROWS_AS(build_target("delta:x", 3), Error);
}
