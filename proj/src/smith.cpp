#include "csx/smith.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "csx/error.hpp"

namespace csx {

namespace {

/// int64 with every operation checked for overflow.
struct CheckedInt {
  std::int64_t v = 0;

  CheckedInt() = default;
  CheckedInt(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) overflow();
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) overflow();
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) overflow();
    return r;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (a.v == std::numeric_limits<std::int64_t>::min() && b.v == -1) overflow();
    return a.v / b.v;
  }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
    if (b.v == -1) return 0;
    return a.v % b.v;
  }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v == b.v; }
  friend bool operator<(CheckedInt a, CheckedInt b) { return a.v < b.v; }

  [[noreturn]] static void overflow() { fail(ErrorKind::Overflow, "64-bit overflow during Smith reduction"); }
};

CheckedInt magnitude(CheckedInt a) { return a.v < 0 ? -a : a; }
BigInt magnitude(const BigInt& a) { return boost::multiprecision::abs(a); }
BigInt widen(CheckedInt a) { return BigInt(a.v); }
BigInt widen(const BigInt& a) { return a; }
bool is_zero(CheckedInt a) { return a.v == 0; }
bool is_zero(const BigInt& a) { return a.is_zero(); }
bool is_negative(CheckedInt a) { return a.v < 0; }
bool is_negative(const BigInt& a) { return a.sign() < 0; }

template <class Int>
using Row = std::vector<std::pair<std::size_t, Int>>;

template <class Int>
const Int* lookup(const Row<Int>& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// target += factor * source
template <class Int>
void axpy(Row<Int>& target, const Int& factor, const Row<Int>& source) {
  Row<Int> out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, Int(factor * b->second));
      ++b;
    } else {
      Int s = a->second + factor * b->second;
      if (!is_zero(s)) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

template <class Int>
using Dense = std::vector<std::vector<Int>>;

template <class Int>
Dense<Int> identity(std::size_t n) {
  Dense<Int> d(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = Int(1);
  return d;
}

template <class Int>
struct Tracker {
  bool on = false;
  Dense<Int> u, u_inv, v, v_inv;

  // row_i += q * row_r
  void add_row(std::size_t i, std::size_t r, const Int& q) {
    if (!on) return;
    for (std::size_t k = 0; k < u.size(); ++k) u[i][k] = u[i][k] + q * u[r][k];
    for (std::size_t k = 0; k < u_inv.size(); ++k) u_inv[k][r] = u_inv[k][r] - q * u_inv[k][i];
  }
  // col_k += q * col_c
  void add_col(std::size_t k, std::size_t c, const Int& q) {
    if (!on) return;
    for (std::size_t t = 0; t < v.size(); ++t) v[t][k] = v[t][k] + q * v[t][c];
    for (std::size_t t = 0; t < v_inv.size(); ++t) v_inv[c][t] = v_inv[c][t] - q * v_inv[k][t];
  }
  void negate_row(std::size_t r) {
    if (!on) return;
    for (auto& x : u[r]) x = -x;
    for (auto& row : u_inv) row[r] = -row[r];
  }
};

template <class Int>
SmithForm reduce(const SparseMatrix& m, bool with_certificate) {
  std::vector<Row<Int>> rows(m.rows);
  for (const auto& e : m.entries)
    if (e.value != 0) rows[e.row].emplace_back(e.col, Int(e.value));
  for (auto& r : rows) std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  Tracker<Int> track;
  if (with_certificate) {
    track.on = true;
    track.u = identity<Int>(m.rows);
    track.u_inv = identity<Int>(m.rows);
    track.v = identity<Int>(m.cols);
    track.v_inv = identity<Int>(m.cols);
  }

  std::vector<bool> active(m.rows, true);
  struct Pivot {
    std::size_t row, col;
    Int value;
  };
  std::vector<Pivot> pivots;

  while (true) {
    // Whole-matrix scan for the smallest nonzero magnitude.
    bool found = false;
    std::size_t r = 0, c = 0;
    Int best(0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!active[i]) continue;
      for (const auto& [col, val] : rows[i]) {
        Int mag = magnitude(val);
        if (!found || mag < best) {
          found = true;
          best = mag;
          r = i;
          c = col;
          if (best == Int(1)) break;
        }
      }
      if (found && best == Int(1)) break;
    }
    if (!found) break;

    bool settled = false;
    bool rescan = false;
    while (!settled && !rescan) {
      const Int p = *lookup(rows[r], c);
      // Clear column c by row operations.
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || !active[i]) continue;
        const Int* a = lookup(rows[i], c);
        if (!a) continue;
        const Int q = *a / p;
        const Int rem = *a % p;
        if (!is_zero(q)) {
          axpy(rows[i], Int(-q), rows[r]);
          track.add_row(i, r, Int(-q));
        }
        if (!is_zero(rem)) rescan = true;
      }
      if (rescan) break;

      // Column c is now zero off row r, so column operations only touch row r.
      Row<Int> kept;
      for (auto& [col, val] : rows[r]) {
        if (col == c) {
          kept.emplace_back(col, val);
          continue;
        }
        const Int q = val / p;
        const Int rem = val % p;
        if (!is_zero(q)) track.add_col(col, c, Int(-q));
        if (!is_zero(rem)) {
          kept.emplace_back(col, rem);
          rescan = true;
        }
      }
      rows[r] = std::move(kept);
      if (rescan) break;

      // Divisibility: p must divide every remaining entry.
      bool divides = true;
      if (!(magnitude(p) == Int(1))) {
        for (std::size_t i = 0; i < rows.size() && divides; ++i) {
          if (i == r || !active[i]) continue;
          for (const auto& [col, val] : rows[i]) {
            if (!is_zero(val % p)) {
              axpy(rows[r], Int(1), rows[i]);
              track.add_row(r, i, Int(1));
              divides = false;
              break;
            }
          }
        }
      }
      if (!divides) continue;  // same pivot, now with a non-divisible entry in its row

      if (is_negative(p)) {
        rows[r][0].second = -rows[r][0].second;
        track.negate_row(r);
      }
      pivots.push_back({r, c, rows[r][0].second});
      active[r] = false;
      settled = true;
    }
  }

  SmithForm form;
  form.rows = m.rows;
  form.cols = m.cols;
  for (const auto& pv : pivots) form.factors.push_back(widen(pv.value));

  if (with_certificate) {
    std::vector<std::size_t> row_order, col_order;
    std::vector<bool> row_used(m.rows, false), col_used(m.cols, false);
    for (const auto& pv : pivots) {
      row_order.push_back(pv.row);
      col_order.push_back(pv.col);
      row_used[pv.row] = true;
      col_used[pv.col] = true;
    }
    for (std::size_t i = 0; i < m.rows; ++i)
      if (!row_used[i]) row_order.push_back(i);
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!col_used[j]) col_order.push_back(j);

    SmithCertificate cert;
    cert.u.assign(m.rows, std::vector<BigInt>(m.rows));
    cert.u_inverse.assign(m.rows, std::vector<BigInt>(m.rows));
    cert.v.assign(m.cols, std::vector<BigInt>(m.cols));
    cert.v_inverse.assign(m.cols, std::vector<BigInt>(m.cols));
    for (std::size_t t = 0; t < m.rows; ++t)
      for (std::size_t k = 0; k < m.rows; ++k) {
        cert.u[t][k] = widen(track.u[row_order[t]][k]);
        cert.u_inverse[k][t] = widen(track.u_inv[k][row_order[t]]);
      }
    for (std::size_t t = 0; t < m.cols; ++t)
      for (std::size_t k = 0; k < m.cols; ++k) {
        cert.v[k][t] = widen(track.v[k][col_order[t]]);
        cert.v_inverse[t][k] = widen(track.v_inv[col_order[t]][k]);
      }
    form.certificate = std::move(cert);
  }
  return form;
}

}  // namespace

void SparseMatrix::normalize() {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  std::vector<Entry> out;
  for (const auto& e : entries) {
    require(e.row < rows && e.col < cols, "matrix entry out of range");
    if (!out.empty() && out.back().row == e.row && out.back().col == e.col)
      out.back().value += e.value;
    else
      out.push_back(e);
  }
  std::erase_if(out, [](const Entry& e) { return e.value == 0; });
  entries = std::move(out);
}

std::string SparseMatrix::to_triplet_text() const {
  std::ostringstream out;
  out << "dims " << rows << ' ' << cols << '\n';
  for (const auto& e : entries) out << e.row << ' ' << e.col << ' ' << e.value << '\n';
  return out.str();
}

SparseMatrix SparseMatrix::from_triplet_text(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  SparseMatrix m;
  require(static_cast<bool>(in >> tag >> m.rows >> m.cols) && tag == "dims", "matrix text must start with 'dims R C'");
  Entry e{};
  while (in >> e.row >> e.col >> e.value) m.entries.push_back(e);
  require(in.eof(), "malformed matrix triplet line");
  m.normalize();
  return m;
}

DenseMatrix to_dense(const SparseMatrix& m) {
  DenseMatrix d(m.rows, std::vector<BigInt>(m.cols));
  for (const auto& e : m.entries) d[e.row][e.col] += e.value;
  return d;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t k = inner ? b[0].size() : 0;
  DenseMatrix out(n, std::vector<BigInt>(k));
  for (std::size_t i = 0; i < n; ++i) {
    require(a[i].size() == inner, "dense product shape mismatch");
    for (std::size_t t = 0; t < inner; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (!b[t][j].is_zero()) out[i][j] += a[i][t] * b[t][j];
    }
  }
  return out;
}

SmithForm smith_normal_form(const SparseMatrix& m, OverflowPolicy policy, bool with_certificate) {
  try {
    return reduce<CheckedInt>(m, with_certificate);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow || policy == OverflowPolicy::Checked) throw;
  }
  return reduce<BigInt>(m, with_certificate);
}

bool verify_certificate(const SparseMatrix& m, const SmithForm& form) {
  if (!form.certificate) return false;
  const auto& cert = *form.certificate;
  for (std::size_t t = 0; t < form.factors.size(); ++t) {
    if (form.factors[t].sign() <= 0) return false;
    if (t > 0 && form.factors[t] % form.factors[t - 1] != 0) return false;
  }
  const auto is_identity = [](const DenseMatrix& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d[i].size(); ++j)
        if (d[i][j] != (i == j ? 1 : 0)) return false;
    return true;
  };
  if (m.rows > 0 && !is_identity(multiply(cert.u, cert.u_inverse))) return false;
  if (m.cols > 0 && !is_identity(multiply(cert.v, cert.v_inverse))) return false;
  if (m.rows == 0 || m.cols == 0) return form.factors.empty();
  const auto d = multiply(multiply(cert.u, to_dense(m)), cert.v);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      const BigInt expected = (i == j && i < form.factors.size()) ? form.factors[i] : BigInt(0);
      if (d[i][j] != expected) return false;
    }
  return true;
}

}  // namespace csx
