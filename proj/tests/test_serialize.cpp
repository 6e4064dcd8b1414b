#include "doctest.h"

#include "csx/checks.hpp"
#include "csx/error.hpp"
#include "csx/serialize.hpp"

using namespace csx;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no csx::Error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("simplicial set JSON round trips") {
  for (const char* t : {"S", "C", "SC", "delta:2", "twisted:C:1", "E:1,0", "boundary:3", "simplex:2"}) {
    const auto x = build_target(t, 4);
    const auto j = to_json(*x);
    const auto back = simplicial_set_from_json(Json::parse(j.dump()));
    CHECK_MESSAGE(to_json(*back) == j, t);
    CHECK(back->has_degeneracies() == x->has_degeneracies());
  }
  const auto sc = to_json(*build_SC(2));
  CHECK(sc["dims"][2]["payloads"][1] == "circ:0,2,1");
  CHECK(sc["dims"][2]["faces"][1] == Json::array({0, 0, 0}));
}

TEST_CASE("malformed simplicial set JSON") {
  auto j = to_json(*build_delta(1, 2));
  auto missing = j;
  missing.erase("dims");
  CHECK(kind_of([&] { simplicial_set_from_json(missing); }) == ErrorKind::InvalidArgument);

  auto out_of_range = j;
  out_of_range["dims"][1]["faces"][0][0] = 9;
  CHECK(kind_of([&] { simplicial_set_from_json(out_of_range); }) == ErrorKind::InvalidArgument);

  auto short_row = j;
  short_row["dims"][1]["faces"][0] = Json::array({0});
  CHECK(kind_of([&] { simplicial_set_from_json(short_row); }) == ErrorKind::InvalidArgument);

  // Collapsing the edge's faces contradicts the degeneracies of dim 2.
  auto inconsistent = j;
  inconsistent["dims"][1]["faces"][1] = Json::array({0, 0});
  CHECK(kind_of([&] { simplicial_set_from_json(inconsistent); }) == ErrorKind::NotSimplicial);

  CHECK_THROWS(simplicial_set_from_json(Json::parse(R"({"max_dim": "x", "dims": []})")));
}

TEST_CASE("homology report JSON") {
  HomologyReport r;
  r.groups = {{1, {}}, {0, {BigInt(2)}}};
  const auto j = to_json(r);
  CHECK(j.dump() == R"({"H":[{"betti":1,"torsion":[]},{"betti":0,"torsion":[2]}],"unreliable_top":true})");
}

TEST_CASE("decoration JSON") {
  const auto d = decorate_from_cochain(semi_boundary(3), TwoCochain{{1, 0, 0, 0}});
  const auto j = to_json(d);
  CHECK(j["assignment"][2]["dim"] == 2);
  CHECK(j["assignment"][2]["values"][0] == "circ:0,2,1");
  const auto back = decoration_from_json(Json::parse(j.dump()));
  CHECK(back.assignment == d.assignment);
  CHECK(to_json(*back.base) == to_json(*d.base));

  auto partial = j;
  partial["assignment"][2]["values"][3] = nullptr;
  CHECK_THROWS_AS(decoration_from_json(partial), Error);
  const auto p = partial_decoration_from_json(partial);
  CHECK_FALSE(p.assignment[2][3].has_value());
  CHECK(p.assignment[2][0].has_value());

  auto wrong_length = j;
  wrong_length["assignment"][1]["values"].erase(0);
  CHECK_THROWS_AS(decoration_from_json(wrong_length), Error);

  const Obstruction o{2, 3};
  CHECK(to_json(o, *d.base).dump() == R"({"obstruction":{"dim":2,"id":3,"payload":"v:1,2,3"}})");
}

TEST_CASE("check suites") {
  for (const auto& r : check_crossed(3)) CHECK_MESSAGE(r.passed, r.name);
  CHECK(check_identities("SC", 5).passed);
  CHECK(check_pullback(1).cases == 3);
  const auto all = run_checks("all", "", 3);
  CHECK(all.size() == 10);
  for (const auto& r : all) CHECK_MESSAGE(r.passed, r.name);
  CHECK_THROWS_AS(run_checks("identities", "", 3), Error);
  CHECK_THROWS_AS(run_checks("nonsense", "", 3), Error);
}
