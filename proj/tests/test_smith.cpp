#include "doctest.h"

#include <random>

#include "csx/error.hpp"
#include "csx/smith.hpp"

using namespace csx;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
  SparseMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (rows[r][c] != 0) m.entries.push_back({r, c, rows[r][c]});
  return m;
}

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density, int bound) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(-bound, bound);
  SparseMatrix m{rows, cols, {}};
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) < density) m.entries.push_back({r, c, value(rng)});
  m.normalize();
  return m;
}

BigInt det(std::vector<std::vector<BigInt>> a) {
  // Cofactor expansion along the first row; sizes here are at most 4.
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      auto& row = minor.emplace_back();
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
    }
    const BigInt term = a[0][c] * det(minor);
    total += (c % 2 ? -term : term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors as ratios of determinantal divisors (gcd of k x k minors).
std::vector<BigInt> factors_by_minors(const SparseMatrix& m) {
  const auto d = to_dense(m);
  std::vector<BigInt> divisors{1};
  for (std::size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows, k, 0, cur, rs);
    subsets(m.cols, k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<BigInt>> sub;
        for (auto i : r) {
          auto& row = sub.emplace_back();
          for (auto j : c) row.push_back(d[i][j]);
        }
        g = boost::multiprecision::gcd(g, abs(det(sub)));
      }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

}  // namespace

TEST_CASE("small Smith forms") {
  const auto diag = smith_normal_form(from_dense({{2, 0}, {0, 3}}), OverflowPolicy::BigInt, true);
  CHECK(diag.factors == std::vector<BigInt>{1, 6});
  CHECK(verify_certificate(from_dense({{2, 0}, {0, 3}}), diag));

  const auto zero = smith_normal_form(from_dense({{0, 0}, {0, 0}}));
  CHECK(zero.rank() == 0);

  const auto one = smith_normal_form(from_dense({{1, 0}, {0, 0}}));
  CHECK(one.factors == std::vector<BigInt>{1});

  const auto empty = smith_normal_form(SparseMatrix{0, 5, {}}, OverflowPolicy::BigInt, true);
  CHECK(empty.rank() == 0);
  CHECK(verify_certificate(SparseMatrix{0, 5, {}}, empty));
}

TEST_CASE("invariant factors agree with determinantal divisors") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    const auto m = random_matrix(rng, dim(rng), dim(rng), 0.7, 6);
    const auto form = smith_normal_form(m, OverflowPolicy::Checked, true);
    CHECK(form.factors == factors_by_minors(m));
    CHECK(verify_certificate(m, form));
  }
}

TEST_CASE("certificates re-verify on random sparse matrices up to 200 x 200") {
  std::mt19937_64 rng(7);
  for (std::size_t size : {5u, 20u, 60u, 120u, 200u}) {
    const auto m = random_matrix(rng, size, size - size / 5, 6.0 / static_cast<double>(size), 3);
    const auto form = smith_normal_form(m, OverflowPolicy::BigInt, true);
    CHECK(verify_certificate(m, form));
    CHECK(smith_normal_form(m).factors == form.factors);
  }
}

TEST_CASE("a tampered certificate is rejected") {
  const auto m = from_dense({{2, 4}, {6, 8}});
  auto form = smith_normal_form(m, OverflowPolicy::BigInt, true);
  REQUIRE(verify_certificate(m, form));
  form.certificate->u[0][0] += 1;
  CHECK_FALSE(verify_certificate(m, form));
  auto wrong = smith_normal_form(m, OverflowPolicy::BigInt, true);
  wrong.factors.back() += 2;
  CHECK_FALSE(verify_certificate(m, wrong));
}

TEST_CASE("overflow policy") {
  const std::int64_t x = 6'000'000'000'000'000'000;
  const auto m = from_dense({{x, x - 1}, {x - 1, x}});
  CHECK_THROWS_AS(smith_normal_form(m, OverflowPolicy::Checked), Error);
  try {
    smith_normal_form(m, OverflowPolicy::Checked);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
  const auto form = smith_normal_form(m, OverflowPolicy::BigInt, true);
  // det = (x - (x-1)) (x + (x-1)) = 2x - 1, entries are coprime.
  CHECK(form.factors == std::vector<BigInt>{1, BigInt(x) * 2 - 1});
  CHECK(verify_certificate(m, form));
}

TEST_CASE("triplet text round trip") {
  std::mt19937_64 rng(3);
  const auto m = random_matrix(rng, 7, 9, 0.4, 9);
  const auto text = m.to_triplet_text();
  CHECK(text.rfind("dims 7 9\n", 0) == 0);
  const auto back = SparseMatrix::from_triplet_text(text);
  CHECK(back.rows == 7);
  CHECK(back.cols == 9);
  CHECK(back.entries == m.entries);
  CHECK_THROWS_AS(SparseMatrix::from_triplet_text("dims 2 2\n5 0 1\n"), Error);
  CHECK_THROWS_AS(SparseMatrix::from_triplet_text("2 2\n"), Error);
}
