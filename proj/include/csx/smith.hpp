#pragma once

// Exact Smith normal form of sparse integer matrices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace csx {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix in triplet form. Entries are kept sorted by
/// (row, col) with no explicit zeros once normalized.
struct SparseMatrix {
  struct Entry {
    std::size_t row;
    std::size_t col;
    std::int64_t value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Entry> entries;

  /// Sorts entries, sums duplicates and drops zeros.
  void normalize();

  /// "dims R C" header followed by one "row col value" line per entry.
  std::string to_triplet_text() const;
  static SparseMatrix from_triplet_text(const std::string& text);
};

using DenseMatrix = std::vector<std::vector<BigInt>>;

DenseMatrix to_dense(const SparseMatrix& m);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Unimodular transformations with U * M * V = D. The inverses are carried
/// along so unimodularity can be re-checked by multiplication.
struct SmithCertificate {
  DenseMatrix u;
  DenseMatrix u_inverse;
  DenseMatrix v;
  DenseMatrix v_inverse;
};

struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Nonzero invariant factors d_1 | d_2 | ..., all positive.
  std::vector<BigInt> factors;
  std::optional<SmithCertificate> certificate;

  std::size_t rank() const noexcept { return factors.size(); }
};

enum class OverflowPolicy {
  BigInt,   // checked 64-bit arithmetic, redone in arbitrary precision on overflow
  Checked,  // checked 64-bit arithmetic, overflow is an error
};

/// Minimal-magnitude pivoting over the whole active matrix. Throws
/// Error(Overflow) under OverflowPolicy::Checked when 64 bits do not suffice.
SmithForm smith_normal_form(const SparseMatrix& m, OverflowPolicy policy = OverflowPolicy::BigInt,
                            bool with_certificate = false);

/// Re-checks U*M*V = D, U*U^-1 = I, V*V^-1 = I and the divisibility chain.
bool verify_certificate(const SparseMatrix& m, const SmithForm& form);

}  // namespace csx
