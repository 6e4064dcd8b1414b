#pragma once

// Named targets and exhaustive check suites.

#include <cstddef>
#include <string>
#include <vector>

#include "csx/simplicial_set.hpp"

namespace csx {

/// Builds a named set truncated at max_dim. Grammar:
///   S | C | SC | delta:N | twisted:S:N | twisted:C:N | E:<word>
///   | simplex:N | boundary:N   (the last two are semi-simplicial)
SimplicialSetPtr build_target(const std::string& target, int max_dim);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failure, empty when passed
};

/// Simplicial identities of a named target.
CheckResult check_identities(const std::string& target, int max_dim);

/// Crossed relations on S_n x S_n for n <= max_degree: face and degeneracy
/// of products, the inverse exchange rules, the inverse anti-homomorphism,
/// and closure of the cyclic subgroups under faces and degeneracies.
std::vector<CheckResult> check_crossed(int max_degree);

/// E_of(g) against the Yoneda pullback, every g in S_n, n <= max_degree.
CheckResult check_pullback(int max_degree);

/// The reorientation comparison, every g in S_n, n <= max_degree.
CheckResult check_upsilon(int max_degree);

/// suite in {identities, crossed, lemma, upsilon, all}. For identities the
/// target is required; "all" audits S, C and SC.
std::vector<CheckResult> run_checks(const std::string& suite, const std::string& target, int max_dim);

}  // namespace csx
