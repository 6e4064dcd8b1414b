#include "csx/checks.hpp"

#include <algorithm>
#include <sstream>

#include "csx/bundles.hpp"
#include "csx/constructions.hpp"
#include "csx/error.hpp"

namespace csx {

namespace {

int parse_small_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, "bad " + what + ": '" + text + "'");
  }
  require(used == text.size() && v >= 0, "bad " + what + ": '" + text + "'");
  return v;
}

std::string show(const Permutation& f) { return "(" + f.to_string() + ")"; }

}  // namespace

SimplicialSetPtr build_target(const std::string& target, int max_dim) {
  require(max_dim >= 0, "max_dim must be nonnegative");
  const auto colon = target.find(':');
  const std::string head = target.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : target.substr(colon + 1);

  if (target == "S") return build_S(max_dim);
  if (target == "C") return build_C(max_dim);
  if (target == "SC") return build_SC(max_dim);
  if (head == "delta") return build_delta(parse_small_int(rest, "simplex dimension"), max_dim);
  if (head == "simplex") return semi_simplex(parse_small_int(rest, "simplex dimension"));
  if (head == "boundary") return semi_boundary(parse_small_int(rest, "simplex dimension"));
  if (head == "E") return E_of(Permutation::parse(rest), max_dim).total;
  if (head == "twisted") {
    const auto c2 = rest.find(':');
    require(c2 != std::string::npos, "twisted target needs a group and a dimension, e.g. twisted:C:2");
    const std::string group = rest.substr(0, c2);
    require(group == "S" || group == "C", "twisted group must be S or C");
    const int n = parse_small_int(rest.substr(c2 + 1), "simplex dimension");
    return twisted_product(group == "S" ? GroupKind::Symmetric : GroupKind::Cyclic, build_delta(n, max_dim)).total;
  }
  fail(ErrorKind::InvalidArgument, "unknown target '" + target + "'");
}

CheckResult check_identities(const std::string& target, int max_dim) {
  const auto x = build_target(target, max_dim);
  CheckResult r{"identities:" + target, true, 0, {}};
  for (int n = 0; n <= x->max_dim(); ++n) r.cases += x->count(n);
  if (auto bad = audit_identities(*x)) {
    r.passed = false;
    r.counterexample = *bad;
  }
  return r;
}

std::vector<CheckResult> check_crossed(int max_degree) {
  CheckResult face{"crossed:face", true, 0, {}};
  CheckResult degen{"crossed:degeneracy", true, 0, {}};
  CheckResult exchange{"crossed:inverse-exchange", true, 0, {}};
  CheckResult anti{"crossed:inverse-antihomomorphism", true, 0, {}};
  CheckResult closure{"crossed:cyclic-closure", true, 0, {}};

  const auto note = [](CheckResult& r, bool ok, const std::string& what) {
    ++r.cases;
    if (!ok && r.passed) {
      r.passed = false;
      r.counterexample = what;
    }
  };

  for (int n = 0; n <= max_degree; ++n) {
    const auto group = all_permutations(n);
    for (const auto& f : group) {
      const auto fi = inverse(f);
      for (int i = 0; i <= n; ++i) {
        if (n > 0) {
          note(exchange, inverse(face_perm(i, f)) == face_perm(fi(i), fi),
               "d_" + std::to_string(i) + " of inverse " + show(f));
        }
        note(exchange, inverse(degeneracy_perm(i, f)) == degeneracy_perm(fi(i), fi),
             "s_" + std::to_string(i) + " of inverse " + show(f));
        if (is_cyclic(f)) {
          const bool ok = (n == 0 || is_cyclic(face_perm(i, f))) && is_cyclic(degeneracy_perm(i, f));
          note(closure, ok, "cyclic " + show(f) + " at index " + std::to_string(i));
        }
      }
      for (const auto& h : group) {
        const auto hf = multiply(h, f);
        const auto hi = inverse(h);
        note(anti, inverse(hf) == multiply(fi, inverse(h)), show(h) + " " + show(f));
        for (int i = 0; i <= n; ++i) {
          const int j = hi(i);
          if (n > 0)
            note(face, face_perm(i, hf) == multiply(face_perm(i, h), face_perm(j, f)),
                 "d_" + std::to_string(i) + " of " + show(h) + show(f));
          note(degen, degeneracy_perm(i, hf) == multiply(degeneracy_perm(i, h), degeneracy_perm(j, f)),
               "s_" + std::to_string(i) + " of " + show(h) + show(f));
        }
      }
    }
  }
  return {face, degen, exchange, anti, closure};
}

namespace {

template <class Probe>
CheckResult over_all_g(const std::string& name, int max_degree, Probe probe) {
  CheckResult r{name, true, 0, {}};
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& g : all_permutations(n)) {
      ++r.cases;
      if (auto bad = probe(g, n + 2); bad && r.passed) {
        r.passed = false;
        r.counterexample = "g = " + show(g) + ": " + *bad;
      }
    }
  return r;
}

}  // namespace

CheckResult check_pullback(int max_degree) {
  return over_all_g("lemma:pullback", max_degree,
                    [](const Permutation& g, int trunc) { return pullback_coincidence(g, trunc); });
}

CheckResult check_upsilon(int max_degree) {
  return over_all_g("upsilon:comparison", max_degree,
                    [](const Permutation& g, int trunc) { return upsilon_discrepancy(g, trunc); });
}

std::vector<CheckResult> run_checks(const std::string& suite, const std::string& target, int max_dim) {
  std::vector<CheckResult> out;
  const auto append = [&](std::vector<CheckResult> more) { out.insert(out.end(), more.begin(), more.end()); };
  // The per-g suites work in degree n <= max_dim with truncation n+2; cap the
  // degree so the default truncation stays cheap.
  const int degree = std::min(max_dim, 4);

  if (suite == "identities") {
    require(!target.empty(), "check identities needs --target");
    out.push_back(check_identities(target, max_dim));
  } else if (suite == "crossed") {
    append(check_crossed(degree));
  } else if (suite == "lemma") {
    out.push_back(check_pullback(std::min(degree, 3)));
    out.push_back(check_upsilon(std::min(degree, 3)));
  } else if (suite == "upsilon") {
    out.push_back(check_upsilon(std::min(degree, 3)));
  } else if (suite == "all") {
    if (!target.empty())
      out.push_back(check_identities(target, max_dim));
    else
      for (const char* t : {"S", "C", "SC"}) out.push_back(check_identities(t, max_dim));
    append(check_crossed(degree));
    out.push_back(check_pullback(std::min(degree, 3)));
    out.push_back(check_upsilon(std::min(degree, 3)));
  } else {
    fail(ErrorKind::InvalidArgument, "unknown check suite '" + suite + "'");
  }
  return out;
}

}  // namespace csx
