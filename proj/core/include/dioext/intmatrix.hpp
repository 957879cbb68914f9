#pragma once

#include "dioext/bigint.hpp"
#include "dioext/errors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dioext {

// Dense exact integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  BigInt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  IntMatrix mul(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct SnfOptions {
  bool track_left = false;  // U, U_inv with U*A*V = D
  bool track_right = false; // V, V_inv
};

struct SnfResult {
  IntMatrix D;
  IntMatrix U, U_inv; // tracked on request, else empty
  IntMatrix V, V_inv;
  std::vector<BigInt> diagonal; // min(rows, cols) entries, divisibility chain
  std::size_t rank = 0;         // nonzero diagonal entries
};

// Smith normal form with smallest-nonzero-magnitude pivoting, ties broken in
// row-major position order.  Row operations are mirrored onto *carry when
// given (so U never needs materializing for linear solves).
SnfResult snf(IntMatrix A, SnfOptions opt = {}, IntMatrix* carry = nullptr);

// Coordinate-format sparse matrix for the elimination fast paths.  Entries
// may repeat (they accumulate) and zero entries are dropped on use.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::tuple<std::size_t, std::size_t, BigInt>> entries;

  void add(std::size_t r, std::size_t c, BigInt v) {
    entries.emplace_back(r, c, std::move(v));
  }
  IntMatrix dense() const;
  IntMatrix apply(const IntMatrix& x) const; // this * x, never densified
};
SparseMatrix sparse_from_dense(const IntMatrix& m);

// Rank and invariant factors only, no transforms.  Unit pivots are
// eliminated sparsely (min-degree first, so boundary-style matrices stay
// thin); whatever remains goes through the dense routine.  The diagonal
// agrees with snf of the same matrix.
struct SnfDiagonal {
  std::size_t rank = 0;
  std::vector<BigInt> diagonal; // min(rows, cols) entries, divisibility chain
};
SnfDiagonal snf_diagonal(const SparseMatrix& A);

// Solve A X = B over the integers, all columns at once.
std::optional<IntMatrix> solve_integer(const SparseMatrix& A, IntMatrix B);
std::optional<IntMatrix> solve_integer(IntMatrix A, IntMatrix B);

std::string matrix_to_text(const IntMatrix& m); // dense, row-major, decimal

} // namespace dioext
