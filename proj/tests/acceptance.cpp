// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "csx/bundles.hpp"
#include "csx/checks.hpp"
#include "csx/constructions.hpp"
#include "csx/homology.hpp"

using namespace csx;

namespace {

constexpr double kBundleSeconds = 30.0;
constexpr std::size_t kCertificateLimit = 200;

struct Outcome {
  bool passed;
  std::string detail;
};

HomologyGroup Z() { return {1, {}}; }
HomologyGroup zero() { return {0, {}}; }

std::string render(const HomologyReport& r, std::size_t upto) {
  std::string s;
  for (std::size_t k = 0; k <= upto && k < r.groups.size(); ++k) s += (k ? ", " : "") + describe(r.groups[k]);
  return "(" + s + ")";
}

bool prefix_is(const HomologyReport& r, const std::vector<HomologyGroup>& want) {
  if (r.groups.size() < want.size()) return false;
  for (std::size_t k = 0; k < want.size(); ++k)
    if (!(r.groups[k] == want[k])) return false;
  return true;
}

std::vector<Permutation> small_group_elements() {
  std::vector<Permutation> out;
  for (int n = 0; n <= 3; ++n)
    for (auto& g : all_permutations(n)) out.push_back(std::move(g));
  return out;
}

Outcome sc_homology() {
  const auto r = homology(*build_SC(7));
  const bool ok = prefix_is(r, {Z(), zero(), Z(), zero(), Z(), zero()});
  return {ok, "H0..H5 = " + render(r, 5)};
}

Outcome s_homology() {
  const auto r = homology(*build_S(6));
  const bool ok = prefix_is(r, {Z(), zero(), zero(), zero(), zero()});
  return {ok, "H0..H4 = " + render(r, 4)};
}

Outcome circle() {
  const auto c = build_C(6);
  const auto r = homology(*c);
  bool ok = prefix_is(r, {Z(), Z(), zero(), zero(), zero(), zero()});
  std::string counts;
  for (int n = 0; n <= 6; ++n) {
    const auto k = nondegenerate_list(*c, n).size();
    ok = ok && k == (n <= 1 ? 1u : 0u);
    counts += (n ? "," : "") + std::to_string(k);
  }
  return {ok, "H0..H5 = " + render(r, 5) + ", nondegenerate (" + counts + ")"};
}

Outcome lemma_pullback() {
  std::size_t good = 0;
  std::string first;
  const auto gs = small_group_elements();
  for (const auto& g : gs) {
    const auto bad = pullback_coincidence(g, g.degree() + 2);
    if (!bad) ++good;
    else if (first.empty()) first = "g = " + g.to_string() + ": " + *bad;
  }
  return {gs.size() == 33 && good == gs.size(), std::to_string(good) + "/" + std::to_string(gs.size()) + " cases" + (first.empty() ? "" : "; " + first)};
}

Outcome lemma_upsilon() {
  std::size_t good = 0;
  std::string first;
  const auto gs = small_group_elements();
  for (const auto& g : gs) {
    const auto bad = upsilon_discrepancy(g, g.degree() + 2);
    if (!bad) ++good;
    else if (first.empty()) first = "g = " + g.to_string() + ": " + *bad;
  }
  return {gs.size() == 33 && good == gs.size(), std::to_string(good) + "/" + std::to_string(gs.size()) + " cases" + (first.empty() ? "" : "; " + first)};
}

Outcome crossed() {
  bool ok = true;
  std::size_t cases = 0;
  std::string first;
  for (const auto& r : check_crossed(4)) {
    cases += r.cases;
    if (!r.passed && ok) first = r.name + ": " + r.counterexample;
    ok = ok && r.passed;
  }
  return {ok, std::to_string(cases) + " relation instances over S_n x S_n, n <= 4" + (first.empty() ? "" : "; " + first)};
}

Outcome sc_counts() {
  const auto s = build_S(7);
  const auto sc = build_SC(7);
  const auto q = quotient_map(s, sc);
  bool ok = true;
  for (int n = 0; n <= 7; ++n) {
    ok = ok && sc->count(n) == factorial(n);
    std::vector<int> fiber(sc->count(n), 0);
    for (int id = 0; id < static_cast<int>(s->count(n)); ++id) ++fiber[static_cast<std::size_t>(q(n, id))];
    for (int f : fiber) ok = ok && f == n + 1;
  }
  return {ok, "|SC_n| = n! and fibers n+1 for n <= 7"};
}

Outcome bundles() {
  struct Case {
    const char* name;
    std::vector<int> cochain;
    std::function<bool(const HomologyReport&)> expect;
  };
  const std::vector<Case> cases{
      {"degree 0", {0, 0, 0, 0}, [](const HomologyReport& r) { return prefix_is(r, {Z(), Z(), Z(), Z()}); }},
      {"degree 1", {1, 0, 0, 0}, [](const HomologyReport& r) { return prefix_is(r, {Z(), zero(), zero(), Z()}); }},
      {"degree 2", {1, 0, 1, 0},
       [](const HomologyReport& r) { return r.groups.size() > 1 && r.groups[1] == HomologyGroup{0, {BigInt(2)}}; }},
  };
  bool ok = true;
  std::string detail;
  const auto base = semi_boundary(3);
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto d = decorate_from_cochain(base, TwoCochain{c.cochain});
    const auto b = total_space(d, 4);
    const auto r = homology(*b.total);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool good = c.expect(r) && !verify_bundle(d, b) && secs < kBundleSeconds;
    ok = ok && good;
    char buf[64];
    std::snprintf(buf, sizeof buf, " %.3fs", secs);
    detail += std::string(detail.empty() ? "" : "; ") + c.name + " " + render(r, 3) + buf;
  }
  return {ok, detail};
}

Outcome properties() {
  std::vector<std::pair<std::string, SimplicialSetPtr>> sets{
      {"S", build_S(6)}, {"C", build_C(6)}, {"SC", build_SC(7)}};
  for (int n = 0; n <= 5; ++n) sets.emplace_back("delta:" + std::to_string(n), build_delta(n, 6));
  for (int n = 0; n <= 3; ++n) {
    sets.emplace_back("twisted:C:" + std::to_string(n), build_target("twisted:C:" + std::to_string(n), n + 2));
    sets.emplace_back("twisted:S:" + std::to_string(n), build_target("twisted:S:" + std::to_string(n), n + 2));
  }
  for (const auto& g : small_group_elements()) sets.emplace_back("E:" + g.to_string(), E_of(g, g.degree() + 2).total);
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> c;
    for (int t = 0; t < 4; ++t) c.push_back((mask >> t) & 1);
    sets.emplace_back("bundle:" + std::to_string(mask), total_space(decorate_from_cochain(semi_boundary(3), TwoCochain{c}), 4).total);
  }

  std::size_t complexes = 0, certificates = 0;
  for (const auto& [name, x] : sets) {
    if (auto bad = audit_identities(*x)) return {false, name + " identities: " + *bad};
    const auto cc = normalized_complex(*x);
    if (auto n = find_nonzero_square(cc)) return {false, name + ": boundary square nonzero at dim " + std::to_string(*n)};
    ++complexes;
    for (const auto& m : cc.boundary) {
      if (m.rows > kCertificateLimit || m.cols > kCertificateLimit) continue;
      if (!verify_certificate(m, smith_normal_form(m, OverflowPolicy::BigInt, true)))
        return {false, name + ": certificate failed on a " + std::to_string(m.rows) + "x" + std::to_string(m.cols) + " matrix"};
      ++certificates;
    }
  }
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (std::size_t size = 10; size <= kCertificateLimit; size += 10) {
    SparseMatrix m{size, size, {}};
    for (std::size_t r = 0; r < size; ++r)
      for (int k = 0; k < 4; ++k) m.entries.push_back({r, rng() % size, entry(rng)});
    m.normalize();
    if (!verify_certificate(m, smith_normal_form(m, OverflowPolicy::BigInt, true)))
      return {false, "certificate failed on a random " + std::to_string(size) + "x" + std::to_string(size) + " matrix"};
    ++certificates;
  }
  return {true, std::to_string(sets.size()) + " sets audited, " + std::to_string(complexes) + " complexes with zero squares, " +
                    std::to_string(certificates) + " certificates re-verified"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"SC* homology through dim 5", sc_homology},
      {"S* homology through dim 4", s_homology},
      {"C* is a circle", circle},
      {"orbit spaces are pullbacks", lemma_pullback},
      {"reorientation comparison", lemma_upsilon},
      {"crossed relations", crossed},
      {"SC* counts and quotient fibers", sc_counts},
      {"circle bundles over the 2-sphere", bundles},
      {"property suites", properties},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu: %s  %s  [%s] (%.2fs)\n", k + 1, o.passed ? "PASS" : "FAIL", criteria[k].first.c_str(),
                o.detail.c_str(), secs);
    failures += o.passed ? 0 : 1;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
