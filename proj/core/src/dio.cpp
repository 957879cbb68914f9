#include "dioext/dio.hpp"

#include <algorithm>
#include <limits>

namespace dioext {

namespace {

bool monomials_ok(const DioSystem& S) {
  const int n = S.arity();
  for (const auto& e : S.eqs)
    for (const auto& t : e.terms) {
      if (!std::is_sorted(t.monomial.begin(), t.monomial.end())) return false;
      for (int v : t.monomial)
        if (v < 0 || v >= n) return false;
    }
  return true;
}

bool is_quadratic(const DioSystem& S) {
  for (const auto& e : S.eqs)
    for (const auto& t : e.terms)
      if (t.monomial.size() > 2) return false;
  return true;
}

bool is_qsym(const DioSystem& S) {
  if (S.paired) return false;
  for (const auto& e : S.eqs)
    for (const auto& t : e.terms) {
      if (t.monomial.size() != 2) return false;
      if (t.monomial[0] == t.monomial[1]) return false;
    }
  return true;
}

bool is_qskew(const DioSystem& S) {
  if (!S.paired) return false;
  const int r = S.num_vars;
  for (const auto& e : S.eqs) {
    // every term must be x_u * y_v with u != v, and the coefficients of the
    // unordered pair {u, v} must be antisymmetric
    std::map<std::pair<int, int>, BigInt> c;
    for (const auto& t : e.terms) {
      if (t.monomial.size() != 2) return false;
      int u = t.monomial[0], v = t.monomial[1];
      if (u >= r || v < r) return false; // needs one x and one y
      v -= r;
      if (u == v) return false;
      c[{u, v}] += t.coeff;
    }
    for (const auto& [uv, coeff] : c) {
      auto it = c.find({uv.second, uv.first});
      BigInt other = it == c.end() ? BigInt(0) : it->second;
      if (coeff + other != 0) return false;
    }
  }
  return true;
}

} // namespace

DioForm classify(const DioSystem& S) {
  if (!monomials_ok(S)) throw FormError("monomial out of range");
  if (is_qskew(S)) return DioForm::Qskew;
  if (is_qsym(S)) return DioForm::Qsym;
  if (!S.paired && is_quadratic(S)) return DioForm::Quadratic;
  return DioForm::General;
}

bool satisfies(const DioSystem& S, const std::vector<BigInt>& sol) {
  if (static_cast<int>(sol.size()) != S.arity())
    throw DomainError("solution arity mismatch");
  for (const auto& e : S.eqs) {
    BigInt lhs = 0;
    for (const auto& t : e.terms) {
      BigInt m = t.coeff;
      for (int v : t.monomial) m *= sol[static_cast<std::size_t>(v)];
      lhs += m;
    }
    if (lhs != e.rhs) return false;
  }
  return true;
}

std::vector<BigInt> QuadraticReduction::forward(const std::vector<BigInt>& src) const {
  std::vector<BigInt> out = src;
  for (const auto& m : defs) {
    BigInt v = 1;
    for (int x : m) v *= src[static_cast<std::size_t>(x)];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<BigInt> QuadraticReduction::backward(const std::vector<BigInt>& tgt) const {
  return std::vector<BigInt>(tgt.begin(), tgt.begin() + source_vars);
}

QuadraticReduction to_quadratic(const DioSystem& S) {
  if (S.paired) throw FormError("degree reduction expects an unpaired system");
  QuadraticReduction R;
  R.source_vars = S.num_vars;
  R.target.paired = false;
  R.target.form = DioForm::Quadratic;

  std::map<std::vector<int>, int> memo; // source monomial -> variable
  int next = S.num_vars;
  // Returns a variable index evaluating to the monomial's product.
  auto var_for = [&](auto&& self, const std::vector<int>& m) -> int {
    if (m.size() == 1) return m[0];
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::vector<int> a(m.begin(), m.begin() + static_cast<long>((m.size() + 1) / 2));
    std::vector<int> b(m.begin() + static_cast<long>((m.size() + 1) / 2), m.end());
    int va = self(self, a), vb = self(self, b);
    int t = next++;
    memo.emplace(m, t);
    R.defs.push_back(m);
    DioEquation def;
    def.terms.push_back({BigInt(1), {t}});
    def.terms.push_back({BigInt(-1), {std::min(va, vb), std::max(va, vb)}});
    def.rhs = 0;
    R.target.eqs.push_back(std::move(def));
    return t;
  };

  for (const auto& e : S.eqs) {
    DioEquation out;
    out.rhs = e.rhs;
    for (const auto& t : e.terms) {
      if (t.monomial.size() <= 2) {
        out.terms.push_back(t);
        continue;
      }
      std::vector<int> a(t.monomial.begin(),
                         t.monomial.begin() + static_cast<long>((t.monomial.size() + 1) / 2));
      std::vector<int> b(t.monomial.begin() + static_cast<long>((t.monomial.size() + 1) / 2),
                         t.monomial.end());
      int va = var_for(var_for, a), vb = var_for(var_for, b);
      out.terms.push_back({t.coeff, {std::min(va, vb), std::max(va, vb)}});
    }
    R.target.eqs.push_back(std::move(out));
  }
  R.target.num_vars = next;
  return R;
}

std::vector<BigInt> QsymReduction::forward(const std::vector<BigInt>& src) const {
  const int r = source_vars;
  std::vector<BigInt> out(static_cast<std::size_t>(2 * r + 2));
  out[0] = 1;
  out[static_cast<std::size_t>(r) + 1] = 1;
  for (int i = 0; i < r; ++i) {
    out[static_cast<std::size_t>(i) + 1] = src[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(r + 2 + i)] = src[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<BigInt> QsymReduction::backward(const std::vector<BigInt>& tgt) const {
  const BigInt& s = tgt[0];
  if (s != 1 && s != -1) throw DomainError("square-free solution has non-unit corner");
  std::vector<BigInt> out;
  for (int i = 0; i < source_vars; ++i) out.push_back(s * tgt[static_cast<std::size_t>(i) + 1]);
  return out;
}

QsymReduction quadratic_to_qsym(const DioSystem& S) {
  if (S.paired || !is_quadratic(S)) throw FormError("square-free reduction expects a quadratic system");
  const int r = S.num_vars;
  QsymReduction R;
  R.source_vars = r;
  R.target.num_vars = 2 * r + 2;
  R.target.paired = false;
  R.target.form = DioForm::Qsym;
  // x_0 at 0, x_i at i, x_0' at r+1, x_i' at r+1+i
  const auto prime = [r](int i) { return r + 1 + i; };

  for (const auto& e : S.eqs) {
    DioEquation out;
    out.rhs = e.rhs;
    for (const auto& t : e.terms) {
      if (t.monomial.empty()) {
        out.rhs -= t.coeff;
        continue;
      }
      if (t.monomial.size() == 1)
        out.terms.push_back({t.coeff, {t.monomial[0] + 1, prime(0)}});
      else
        out.terms.push_back({t.coeff, {t.monomial[0] + 1, prime(t.monomial[1] + 1)}});
    }
    R.target.eqs.push_back(std::move(out));
  }
  {
    DioEquation unit;
    unit.terms.push_back({BigInt(1), {0, prime(0)}});
    unit.rhs = 1;
    R.target.eqs.push_back(std::move(unit));
  }
  for (int i = 1; i <= r; ++i) {
    DioEquation tie;
    tie.terms.push_back({BigInt(1), {i, prime(0)}});
    tie.terms.push_back({BigInt(-1), {0, prime(i)}});
    tie.rhs = 0;
    R.target.eqs.push_back(std::move(tie));
  }
  return R;
}

std::vector<BigInt> QskewReduction::forward(const std::vector<BigInt>& src) const {
  const int r = source_vars;
  const int R = 2 * r + 2;
  std::vector<BigInt> out(static_cast<std::size_t>(2 * R));
  out[0] = 1;                                // x_0
  out[static_cast<std::size_t>(R + r + 1)] = 1; // y_0'
  for (int i = 1; i <= r; ++i) {
    out[static_cast<std::size_t>(i)] = src[static_cast<std::size_t>(i) - 1];          // x_i
    out[static_cast<std::size_t>(R + r + 1 + i)] = src[static_cast<std::size_t>(i) - 1]; // y_i'
  }
  return out;
}

std::vector<BigInt> QskewReduction::backward(const std::vector<BigInt>& tgt) const {
  const int r = source_vars;
  const int R = 2 * r + 2;
  const BigInt& b = tgt[static_cast<std::size_t>(r) + 1];     // x_0'
  const BigInt& d = tgt[static_cast<std::size_t>(R + r + 1)]; // y_0'
  std::vector<BigInt> out;
  for (int i = 1; i <= r; ++i)
    out.push_back(d * tgt[static_cast<std::size_t>(i)] -
                  b * tgt[static_cast<std::size_t>(R + i)]);
  return out;
}

QskewReduction qsym_to_qskew(const DioSystem& S) {
  if (classify(S) != DioForm::Qsym) throw FormError("skew reduction expects a square-free system");
  const int r = S.num_vars;
  QskewReduction Rd;
  Rd.source_vars = r;
  const int R = 2 * r + 2;
  Rd.target.num_vars = R;
  Rd.target.paired = true;
  Rd.target.form = DioForm::Qskew;
  // x-position i for source x_i; y indices offset by R
  const auto prime = [r](int i) { return r + 1 + i; };
  auto skew = [R](DioEquation& e, const BigInt& c, int u, int v) {
    e.terms.push_back({c, {u, R + v}});
    e.terms.push_back({-c, {v, R + u}});
  };

  for (const auto& e : S.eqs) {
    DioEquation out;
    out.rhs = e.rhs;
    for (const auto& t : e.terms)
      skew(out, t.coeff, t.monomial[0] + 1, prime(t.monomial[1] + 1));
    Rd.target.eqs.push_back(std::move(out));
  }
  {
    DioEquation unit;
    skew(unit, BigInt(1), 0, prime(0));
    unit.rhs = 1;
    Rd.target.eqs.push_back(std::move(unit));
  }
  for (int i = 1; i <= r; ++i) {
    DioEquation a, b, c;
    skew(a, BigInt(1), 0, i);
    a.rhs = 0;
    skew(b, BigInt(1), prime(0), prime(i));
    b.rhs = 0;
    skew(c, BigInt(1), 0, prime(i));
    skew(c, BigInt(-1), i, prime(0));
    c.rhs = 0;
    Rd.target.eqs.push_back(std::move(a));
    Rd.target.eqs.push_back(std::move(b));
    Rd.target.eqs.push_back(std::move(c));
  }
  return Rd;
}

namespace {

// Walks the box [-B, B]^n in lexicographic order calling visit(v) on each
// point; visit returns true to stop early. Uses int64 arithmetic when every
// intermediate product provably fits, BigInt otherwise.
template <class Visit>
void walk_box(const DioSystem& S, int B, std::uint64_t budget, Visit visit) {
  if (B < 0) throw DomainError("negative box bound");
  const int n = S.arity();
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(B) + 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / side + 1) throw ResourceError("brute force box exceeds budget");
    total *= side;
  }
  if (total > budget) throw ResourceError("brute force box exceeds budget");

  struct FastTerm {
    long long c;
    const std::vector<int>* m;
  };
  std::vector<std::vector<FastTerm>> fast(S.eqs.size());
  std::vector<long long> fast_rhs(S.eqs.size(), 0);
  // int64 is safe when the worst-case partial sum per equation stays small
  const BigInt cap = BigInt(1) << 62;
  bool use_fast = true;
  for (std::size_t q = 0; q < S.eqs.size() && use_fast; ++q) {
    BigInt worst = abs(S.eqs[q].rhs);
    for (const auto& t : S.eqs[q].terms) {
      BigInt m = abs(t.coeff);
      for (std::size_t k = 0; k < t.monomial.size(); ++k) m *= B > 0 ? B : 1;
      worst += m;
    }
    if (worst >= cap) {
      use_fast = false;
      break;
    }
    fast_rhs[q] = static_cast<long long>(S.eqs[q].rhs);
    for (const auto& t : S.eqs[q].terms)
      fast[q].push_back({static_cast<long long>(t.coeff), &t.monomial});
  }

  if (n == 0) {
    visit(std::vector<long long>{});
    return;
  }
  std::vector<long long> v(static_cast<std::size_t>(n), -B);
  std::vector<BigInt> sol(static_cast<std::size_t>(n));
  for (;;) {
    bool ok = true;
    if (use_fast) {
      for (std::size_t q = 0; q < fast.size() && ok; ++q) {
        long long lhs = 0;
        for (const auto& t : fast[q]) {
          long long m = t.c;
          for (int x : *t.m) m *= v[static_cast<std::size_t>(x)];
          lhs += m;
        }
        ok = lhs == fast_rhs[q];
      }
    } else {
      for (int i = 0; i < n; ++i) sol[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
      ok = satisfies(S, sol);
    }
    if (ok && visit(v)) return;
    int i = n - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == B) {
      v[static_cast<std::size_t>(i)] = -B;
      --i;
    }
    if (i < 0) return;
    ++v[static_cast<std::size_t>(i)];
  }
}

} // namespace

std::vector<std::vector<BigInt>> brute_force(const DioSystem& S, int B,
                                             std::uint64_t budget) {
  std::vector<std::vector<BigInt>> found;
  walk_box(S, B, budget, [&](const std::vector<long long>& v) {
    found.emplace_back(v.begin(), v.end());
    return false;
  });
  return found;
}

bool solvable_in_box(const DioSystem& S, int B, std::uint64_t budget) {
  bool hit = false;
  walk_box(S, B, budget, [&](const std::vector<long long>&) {
    hit = true;
    return true;
  });
  return hit;
}

QsymData qsym_data(const DioSystem& S) {
  if (classify(S) != DioForm::Qsym) throw FormError("coefficient readout expects a square-free system");
  QsymData D;
  D.r = S.num_vars;
  D.s = static_cast<int>(S.eqs.size());
  D.a.resize(S.eqs.size());
  for (std::size_t q = 0; q < S.eqs.size(); ++q) {
    for (const auto& t : S.eqs[q].terms) {
      int i = t.monomial[0], j = t.monomial[1];
      D.a[q][{std::min(i, j), std::max(i, j)}] += t.coeff;
    }
    D.b.push_back(S.eqs[q].rhs);
  }
  return D;
}

QsymData qskew_data(const DioSystem& S) {
  if (classify(S) != DioForm::Qskew)
    throw FormError("coefficient readout expects a skew-symmetric paired system");
  QsymData D;
  D.r = S.num_vars;
  D.s = static_cast<int>(S.eqs.size());
  D.a.resize(S.eqs.size());
  for (std::size_t q = 0; q < S.eqs.size(); ++q) {
    std::map<std::pair<int, int>, BigInt> c;
    for (const auto& t : S.eqs[q].terms)
      c[{t.monomial[0], t.monomial[1] - S.num_vars}] += t.coeff;
    for (const auto& [uv, coeff] : c)
      if (uv.first < uv.second && coeff != 0) D.a[q][uv] = coeff;
    D.b.push_back(S.eqs[q].rhs);
  }
  return D;
}

} // namespace dioext
