#include "dioext/intmatrix.hpp"

#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

namespace dioext {

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  if (cols != o.rows) throw Error("matrix product shape mismatch");
  IntMatrix r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const BigInt& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) {
        const BigInt& w = o.at(k, j);
        if (w != 0) r.at(i, j) += v * w;
      }
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  for (const BigInt& v : a)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

namespace {

// Elementary operations on A mirrored onto the transform matrices.  With
// U*A0*V = A maintained throughout, a row op E gives U <- E*U and
// U_inv <- U_inv*E^{-1}; a column op E gives V <- V*E and V_inv <- E^{-1}*V_inv.
struct Worker {
  IntMatrix& A;
  IntMatrix* U;
  IntMatrix* U_inv;
  IntMatrix* V;
  IntMatrix* V_inv;
  IntMatrix* carry;

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
    if (U)
      for (std::size_t c = 0; c < U->cols; ++c) std::swap(U->at(i, c), U->at(j, c));
    if (U_inv)
      for (std::size_t r = 0; r < U_inv->rows; ++r) std::swap(U_inv->at(r, i), U_inv->at(r, j));
    if (carry)
      for (std::size_t c = 0; c < carry->cols; ++c) std::swap(carry->at(i, c), carry->at(j, c));
  }

  // row i += q * row j
  void row_axpy(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < A.cols; ++c) {
      const BigInt& s = A.at(j, c);
      if (s != 0) A.at(i, c) += q * s;
    }
    if (U)
      for (std::size_t c = 0; c < U->cols; ++c) {
        const BigInt& s = U->at(j, c);
        if (s != 0) U->at(i, c) += q * s;
      }
    if (U_inv)
      for (std::size_t r = 0; r < U_inv->rows; ++r) {
        const BigInt& s = U_inv->at(r, i);
        if (s != 0) U_inv->at(r, j) -= q * s;
      }
    if (carry)
      for (std::size_t c = 0; c < carry->cols; ++c) {
        const BigInt& s = carry->at(j, c);
        if (s != 0) carry->at(i, c) += q * s;
      }
  }

  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
    if (U)
      for (std::size_t c = 0; c < U->cols; ++c) U->at(i, c) = -U->at(i, c);
    if (U_inv)
      for (std::size_t r = 0; r < U_inv->rows; ++r) U_inv->at(r, i) = -U_inv->at(r, i);
    if (carry)
      for (std::size_t c = 0; c < carry->cols; ++c) carry->at(i, c) = -carry->at(i, c);
  }

  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
    if (V)
      for (std::size_t r = 0; r < V->rows; ++r) std::swap(V->at(r, i), V->at(r, j));
    if (V_inv)
      for (std::size_t c = 0; c < V_inv->cols; ++c) std::swap(V_inv->at(i, c), V_inv->at(j, c));
  }

  // col i += q * col j
  void col_axpy(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < A.rows; ++r) {
      const BigInt& s = A.at(r, j);
      if (s != 0) A.at(r, i) += q * s;
    }
    if (V)
      for (std::size_t r = 0; r < V->rows; ++r) {
        const BigInt& s = V->at(r, j);
        if (s != 0) V->at(r, i) += q * s;
      }
    if (V_inv)
      for (std::size_t c = 0; c < V_inv->cols; ++c) {
        const BigInt& s = V_inv->at(i, c);
        if (s != 0) V_inv->at(j, c) -= q * s;
      }
  }
};

} // namespace

SnfResult snf(IntMatrix A, SnfOptions opt, IntMatrix* carry) {
  if (carry && carry->rows != A.rows) throw Error("snf carry row count mismatch");
  const std::size_t m = A.rows, n = A.cols;
  SnfResult res;
  if (opt.track_left) {
    res.U = IntMatrix::identity(m);
    res.U_inv = IntMatrix::identity(m);
  }
  if (opt.track_right) {
    res.V = IntMatrix::identity(n);
    res.V_inv = IntMatrix::identity(n);
  }
  Worker w{A,
           opt.track_left ? &res.U : nullptr,
           opt.track_left ? &res.U_inv : nullptr,
           opt.track_right ? &res.V : nullptr,
           opt.track_right ? &res.V_inv : nullptr,
           carry};

  std::size_t t = 0;
  while (t < m && t < n) {
    // Smallest-magnitude pivot; ties resolved by scan order.  A unit entry
    // cannot be beaten, so stop at the first one.
    bool found = false;
    std::size_t pr = 0, pc = 0;
    BigInt best;
    for (std::size_t r = t; r < m && !(found && best == 1); ++r)
      for (std::size_t c = t; c < n; ++c) {
        const BigInt& v = A.at(r, c);
        if (v == 0) continue;
        BigInt mag = v < 0 ? BigInt(-v) : v;
        if (!found || mag < best) {
          found = true;
          best = std::move(mag);
          pr = r;
          pc = c;
          if (best == 1) break;
        }
      }
    if (!found) break;
    w.row_swap(t, pr);
    w.col_swap(t, pc);

    bool again = true;
    while (again) {
      again = false;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (A.at(r, t) == 0) continue;
        BigInt q = A.at(r, t) / A.at(t, t);
        if (q != 0) w.row_axpy(r, t, -q);
        if (A.at(r, t) != 0) { // remainder is strictly smaller, promote it
          w.row_swap(t, r);
          again = true;
        }
      }
      if (again) continue;
      for (std::size_t c = t + 1; c < n; ++c) {
        if (A.at(t, c) == 0) continue;
        BigInt q = A.at(t, c) / A.at(t, t);
        if (q != 0) w.col_axpy(c, t, -q);
        if (A.at(t, c) != 0) {
          w.col_swap(t, c);
          again = true;
        }
      }
    }

    // Divisibility: fold a bad row into row t and redo this corner.
    bool redo = false;
    for (std::size_t r = t + 1; r < m && !redo; ++r)
      for (std::size_t c = t + 1; c < n; ++c)
        if (A.at(r, c) % A.at(t, t) != 0) {
          w.row_axpy(t, r, 1);
          redo = true;
          break;
        }
    if (redo) continue;
    ++t;
  }

  for (std::size_t i = 0; i < t; ++i)
    if (A.at(i, i) < 0) w.row_negate(i);

  res.rank = t;
  res.diagonal.reserve(std::min(m, n));
  for (std::size_t i = 0; i < std::min(m, n); ++i) res.diagonal.push_back(A.at(i, i));
  res.D = std::move(A);
  return res;
}

IntMatrix SparseMatrix::dense() const {
  IntMatrix m(rows, cols);
  for (const auto& [r, c, v] : entries) m.at(r, c) += v;
  return m;
}

IntMatrix SparseMatrix::apply(const IntMatrix& x) const {
  if (cols != x.rows) throw Error("matrix product shape mismatch");
  IntMatrix out(rows, x.cols);
  for (const auto& [r, c, v] : entries) {
    if (v == 0) continue;
    for (std::size_t j = 0; j < x.cols; ++j) {
      const BigInt& w = x.at(c, j);
      if (w != 0) out.at(r, j) += v * w;
    }
  }
  return out;
}

SparseMatrix sparse_from_dense(const IntMatrix& m) {
  SparseMatrix s;
  s.rows = m.rows;
  s.cols = m.cols;
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0) s.add(r, c, m.at(r, c));
  return s;
}

namespace {

// One elementary column operation, col target += q * col source, recorded so
// a solution of the transformed system can be pulled back afterwards.
struct ColOp {
  std::size_t target, source;
  BigInt q;
};

// Elimination of +-1 pivots on a sparse matrix.  Row operations mirror onto
// *B when given; column operations clearing a pivot row are recorded in ops.
// Low-degree columns go first to keep fill-in down, which is what makes
// boundary matrices (almost everywhere +-1) collapse without ever growing.
struct UnitElim {
  std::size_t m = 0, n = 0;
  std::vector<std::map<std::size_t, BigInt>> row;
  std::vector<std::set<std::size_t>> in_col;
  std::vector<char> row_done, col_done;
  std::vector<std::tuple<std::size_t, std::size_t, int>> pivots; // row, col, sign
  std::vector<ColOp> ops;
  IntMatrix* B = nullptr;

  using DegCol = std::pair<std::size_t, std::size_t>;
  std::priority_queue<DegCol, std::vector<DegCol>, std::greater<DegCol>> heap;

  void load(const SparseMatrix& A, IntMatrix* b) {
    m = A.rows;
    n = A.cols;
    B = b;
    if (B && B->rows != m) throw Error("solve shape mismatch");
    row.assign(m, {});
    in_col.assign(n, {});
    row_done.assign(m, 0);
    col_done.assign(n, 0);
    for (const auto& [r, c, v] : A.entries) {
      if (v == 0) continue;
      auto [it, fresh] = row[r].try_emplace(c, v);
      if (!fresh) {
        it->second += v;
        if (it->second == 0) {
          row[r].erase(it);
          in_col[c].erase(r);
          continue;
        }
      }
      in_col[c].insert(r);
    }
    for (std::size_t c = 0; c < n; ++c) push_col(c);
  }

  void push_col(std::size_t c) {
    if (!col_done[c] && !in_col[c].empty()) heap.emplace(in_col[c].size(), c);
  }

  void eliminate(std::size_t r0, std::size_t c0, int sign) {
    std::vector<std::size_t> below(in_col[c0].begin(), in_col[c0].end());
    for (std::size_t r : below) {
      if (r == r0) continue;
      BigInt q = row[r].at(c0) * sign; // row r -= q * row r0
      for (const auto& [c, v] : row[r0]) {
        auto it = row[r].find(c);
        if (it == row[r].end()) {
          BigInt nv = -q * v;
          if (nv != 0) {
            row[r].emplace(c, std::move(nv));
            in_col[c].insert(r);
            push_col(c);
          }
        } else {
          it->second -= q * v;
          if (it->second == 0) {
            row[r].erase(it);
            in_col[c].erase(r);
            push_col(c);
          }
        }
      }
      if (B)
        for (std::size_t j = 0; j < B->cols; ++j) {
          const BigInt& s = B->at(r0, j);
          if (s != 0) B->at(r, j) -= q * s;
        }
    }
    // The pivot column is now singly supported, so clearing the pivot row
    // with column operations touches no other row.
    for (const auto& [c, v] : row[r0])
      if (c != c0) {
        ops.push_back({c, c0, -(v * sign)});
        in_col[c].erase(r0);
        push_col(c);
      }
    in_col[c0].clear();
    row[r0].clear();
    col_done[c0] = 1;
    row_done[r0] = 1;
    pivots.emplace_back(r0, c0, sign);
  }

  void run() {
    std::vector<DegCol> skipped;
    while (!heap.empty()) {
      auto [deg, c] = heap.top();
      heap.pop();
      if (col_done[c] || in_col[c].empty() || deg != in_col[c].size()) continue;
      bool found = false;
      std::size_t pr = 0, best = 0;
      int sign = 0;
      for (std::size_t r : in_col[c]) {
        const BigInt& v = row[r].at(c);
        if (v != 1 && v != -1) continue;
        if (!found || row[r].size() < best) {
          found = true;
          best = row[r].size();
          pr = r;
          sign = v == 1 ? 1 : -1;
        }
      }
      if (!found) { // no unit here for now; values may change after a pivot
        skipped.emplace_back(deg, c);
        continue;
      }
      eliminate(pr, c, sign);
      for (const DegCol& s : skipped) heap.push(s);
      skipped.clear();
    }
  }
};

} // namespace

SnfDiagonal snf_diagonal(const SparseMatrix& A) {
  UnitElim e;
  e.load(A, nullptr);
  e.run();

  std::vector<std::size_t> rows_act, cols_act;
  for (std::size_t r = 0; r < e.m; ++r)
    if (!e.row_done[r] && !e.row[r].empty()) rows_act.push_back(r);
  for (std::size_t c = 0; c < e.n; ++c)
    if (!e.col_done[c] && !e.in_col[c].empty()) cols_act.push_back(c);
  std::vector<std::size_t> cpos(e.n, 0);
  for (std::size_t j = 0; j < cols_act.size(); ++j) cpos[cols_act[j]] = j;
  IntMatrix rest(rows_act.size(), cols_act.size());
  for (std::size_t i = 0; i < rows_act.size(); ++i)
    for (const auto& [c, v] : e.row[rows_act[i]]) rest.at(i, cpos[c]) = v;
  SnfResult tail = snf(std::move(rest));

  SnfDiagonal out;
  out.rank = e.pivots.size() + tail.rank;
  out.diagonal.assign(e.pivots.size(), BigInt(1));
  for (const BigInt& d : tail.diagonal) out.diagonal.push_back(d);
  out.diagonal.resize(std::min(A.rows, A.cols));
  return out;
}

std::optional<IntMatrix> solve_integer(const SparseMatrix& A, IntMatrix B) {
  UnitElim e;
  e.load(A, &B);
  e.run();

  // Dense tail on everything not consumed by a unit pivot; empty rows stay
  // in so their right hand sides get the consistency check.
  std::vector<std::size_t> rows_act, cols_act;
  for (std::size_t r = 0; r < e.m; ++r)
    if (!e.row_done[r]) rows_act.push_back(r);
  for (std::size_t c = 0; c < e.n; ++c)
    if (!e.col_done[c]) cols_act.push_back(c);
  std::vector<std::size_t> cpos(e.n, 0);
  for (std::size_t j = 0; j < cols_act.size(); ++j) cpos[cols_act[j]] = j;
  IntMatrix rest(rows_act.size(), cols_act.size());
  IntMatrix Brest(rows_act.size(), B.cols);
  for (std::size_t i = 0; i < rows_act.size(); ++i) {
    for (const auto& [c, v] : e.row[rows_act[i]]) rest.at(i, cpos[c]) = v;
    for (std::size_t j = 0; j < B.cols; ++j) Brest.at(i, j) = B.at(rows_act[i], j);
  }
  SnfOptions opt;
  opt.track_right = true;
  SnfResult s = snf(std::move(rest), opt, &Brest);
  IntMatrix Y(cols_act.size(), B.cols);
  for (std::size_t i = 0; i < Brest.rows; ++i)
    for (std::size_t j = 0; j < Brest.cols; ++j) {
      const BigInt& b = Brest.at(i, j);
      if (i < s.rank) {
        if (b % s.diagonal[i] != 0) return std::nullopt;
        Y.at(i, j) = b / s.diagonal[i];
      } else if (b != 0) {
        return std::nullopt;
      }
    }
  IntMatrix tail = s.V.mul(Y);

  IntMatrix X(e.n, B.cols);
  for (const auto& [r0, c0, sign] : e.pivots)
    for (std::size_t j = 0; j < B.cols; ++j)
      X.at(c0, j) = sign > 0 ? B.at(r0, j) : -B.at(r0, j);
  for (std::size_t i = 0; i < cols_act.size(); ++i)
    for (std::size_t j = 0; j < B.cols; ++j) X.at(cols_act[i], j) = std::move(tail.at(i, j));
  // Pull the solution back through the recorded column operations.
  for (auto it = e.ops.rbegin(); it != e.ops.rend(); ++it)
    for (std::size_t j = 0; j < B.cols; ++j) {
      const BigInt& t = X.at(it->target, j);
      if (t != 0) X.at(it->source, j) += it->q * t;
    }
  return X;
}

std::optional<IntMatrix> solve_integer(IntMatrix A, IntMatrix B) {
  return solve_integer(sparse_from_dense(A), std::move(B));
}

std::string matrix_to_text(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows << " " << m.cols << "\n";
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) out << " ";
      out << m.at(i, j);
    }
    out << "\n";
  }
  return out.str();
}

} // namespace dioext
