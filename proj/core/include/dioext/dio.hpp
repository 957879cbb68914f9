#pragma once

#include "dioext/bigint.hpp"
#include "dioext/errors.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace dioext {

enum class DioForm { General, Quadratic, Qsym, Qskew };

// One monomial with coefficient; the monomial is a sorted multiset of
// variable indices.  In a paired system the x variables are 0..num_vars-1
// and y_i is num_vars + i.
struct DioTerm {
  BigInt coeff;
  std::vector<int> monomial;

  friend bool operator==(const DioTerm&, const DioTerm&) = default;
};

struct DioEquation {
  std::vector<DioTerm> terms;
  BigInt rhs;

  friend bool operator==(const DioEquation&, const DioEquation&) = default;
};

struct DioSystem {
  int num_vars = 0;
  bool paired = false;
  DioForm form = DioForm::General;
  std::vector<DioEquation> eqs;

  int arity() const { return paired ? 2 * num_vars : num_vars; }

  friend bool operator==(const DioSystem&, const DioSystem&) = default;
};

// Most specific syntactic form the system satisfies.
DioForm classify(const DioSystem& S);
bool satisfies(const DioSystem& S, const std::vector<BigInt>& sol);

// Degree reduction by monomial halving; replacement variables are appended
// after the source variables, each with its defining equation.
struct QuadraticReduction {
  DioSystem target;
  int source_vars = 0;
  std::vector<std::vector<int>> defs; // per new variable, source monomial

  std::vector<BigInt> forward(const std::vector<BigInt>& src) const;
  std::vector<BigInt> backward(const std::vector<BigInt>& tgt) const;
};
QuadraticReduction to_quadratic(const DioSystem& S);

// General quadratic to square-free bilinear form: variables are reordered
// as x_0, x_1..x_r, x_0', x_1'..x_r'.
struct QsymReduction {
  DioSystem target;
  int source_vars = 0;

  std::vector<BigInt> forward(const std::vector<BigInt>& src) const;
  std::vector<BigInt> backward(const std::vector<BigInt>& tgt) const;
};
QsymReduction quadratic_to_qsym(const DioSystem& S);

// Square-free bilinear to skew-symmetric paired form; backward transfer
// normalizes by the inverse of the unimodular corner matrix.
struct QskewReduction {
  DioSystem target;
  int source_vars = 0;

  std::vector<BigInt> forward(const std::vector<BigInt>& src) const;
  std::vector<BigInt> backward(const std::vector<BigInt>& tgt) const;
};
QskewReduction qsym_to_qskew(const DioSystem& S);

// All solutions with coordinates in [-B, B], lexicographic.  Throws
// ResourceError when (2B+1)^arity exceeds the budget.
std::vector<std::vector<BigInt>> brute_force(const DioSystem& S, int B,
                                             std::uint64_t budget = 20000000);
bool solvable_in_box(const DioSystem& S, int B, std::uint64_t budget = 20000000);

// Coefficient readout of a Qsym system: a[q][{i, j}] with 0 <= i < j < r.
struct QsymData {
  int r = 0;
  int s = 0;
  std::vector<std::map<std::pair<int, int>, BigInt>> a;
  std::vector<BigInt> b;
};
QsymData qsym_data(const DioSystem& S);

// Coefficient readout of a Qskew system: a[q][{u, v}] with u < v is the
// coefficient of x_u*y_v (minus that of x_v*y_u).
QsymData qskew_data(const DioSystem& S);

} // namespace dioext
