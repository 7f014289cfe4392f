#pragma once

// Exact linear algebra over the rationals: echelon forms, kernels, images,
// cokernels with explicit sections, linear solves and Fitting splittings.
//
// Pivot rule everywhere: columns are scanned left to right and the first row
// (top to bottom) with a nonzero entry becomes the pivot. Results are
// therefore a deterministic function of the input.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nakayama/matrix.hpp"

namespace nakayama::linalg {

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of row r, for r < rank
  std::size_t rank() const { return pivots.size(); }
};

inline Echelon rref(Matrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = c; k < cols; ++k) std::swap(m(p, k), m(r, k));
    const Rational inv = m(r, c).inverse();
    nz.clear();
    for (std::size_t k = c; k < cols; ++k) {
      if (m(r, k).is_zero()) continue;
      if (!inv.is_one()) m(r, k) *= inv;
      nz.push_back(k);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rational f = m(i, c);
      if (f.is_zero()) continue;
      for (std::size_t k : nz) m(i, k) -= f * m(r, k);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

/// Columns form a basis of the null space of `m`.
inline Matrix kernel(const Matrix& m) {
  const Echelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(cols, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) {
      const Rational& v = e.reduced(r, free[f]);
      if (!v.is_zero()) k(e.pivots[r], f) = -v;
    }
  }
  return k;
}

/// Columns form the canonical (reduced echelon) basis of the column space.
inline Matrix image(const Matrix& m) {
  const Echelon e = rref(m.transpose());
  Matrix b(m.rows(), e.rank());
  for (std::size_t r = 0; r < e.rank(); ++r)
    for (std::size_t c = 0; c < m.rows(); ++c) b(c, r) = e.reduced(r, c);
  return b;
}

struct Cokernel {
  Matrix projection;  // q with q * f = 0, surjective
  Matrix section;     // s with q * s = identity
  std::size_t dimension = 0;
};

/// Quotient of the target space by the column space of `f`. The quotient
/// basis consists of the standard basis vectors that are not pivots of the
/// image's echelon basis.
inline Cokernel cokernel(const Matrix& f) {
  const std::size_t n = f.rows();
  const Echelon e = rref(f.transpose());
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) keep.push_back(i);
  Cokernel c;
  c.dimension = keep.size();
  c.projection = Matrix(keep.size(), n);
  c.section = Matrix(n, keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    c.projection(k, keep[k]) = 1;
    c.section(keep[k], k) = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) {
      const Rational& v = e.reduced(r, keep[k]);
      if (!v.is_zero()) c.projection(k, e.pivots[r]) = -v;
    }
  }
  return c;
}

/// Some X with a * X = b, or nullopt when the system is inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const Echelon e = rref(hstack(a, b));
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const std::size_t p = e.pivots[r];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = e.reduced(r, a.cols() + c);
  }
  return x;
}

/// Coordinates of the columns of `y` in the basis given by the columns of
/// `basis`; throws if some column is outside the span.
inline Matrix coordinates(const Matrix& basis, const Matrix& y) {
  if (basis.cols() == 0) {
    if (!y.is_zero()) throw std::logic_error("coordinates: vector outside span");
    return Matrix(0, y.cols());
  }
  auto x = solve(basis, y);
  if (!x) throw std::logic_error("coordinates: vector outside span");
  return *x;
}

inline bool invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

inline Matrix inverse(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  auto x = solve(m, Matrix::identity(m.rows()));
  if (!x || rank(m) != m.rows()) throw std::domain_error("singular matrix");
  return *x;
}

struct FittingSplit {
  Matrix kernel_basis;  // basis of ker f^N
  Matrix image_basis;   // basis of im f^N
};

/// Fitting decomposition of a square matrix: the generalized kernel and the
/// stable image. Together their columns form a basis of the whole space.
inline FittingSplit fitting_split(const Matrix& f) {
  if (!f.square()) throw std::invalid_argument("fitting_split needs a square matrix");
  const std::size_t n = f.rows();
  if (n == 0) return {Matrix(0, 0), Matrix(0, 0)};
  // Powers stabilise after at most n steps; the image basis is kept reduced
  // so that entries stay small.
  Matrix img = image(f);
  std::size_t steps = 1;
  while (steps < n) {
    Matrix next = image(f * img);
    ++steps;
    if (next.cols() == img.cols()) break;
    img = std::move(next);
  }
  Matrix power = Matrix::identity(n);
  for (std::size_t i = 0; i < steps; ++i) power = f * power;
  Matrix ker = kernel(power);
  if (ker.cols() + img.cols() != n) {
    // the loop stopped one step early; take one more power
    power = f * power;
    ker = kernel(power);
    img = image(power);
  }
  return {std::move(ker), std::move(img)};
}

/// Incremental sparse homogeneous system; used for hom spaces where the
/// equations have a handful of nonzero coefficients each.
class SparseSystem {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

  explicit SparseSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Adds an equation sum coeff * x_col = 0. Duplicated columns are merged.
  void add(Row row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Row merged;
    for (auto& [c, v] : row) {
      if (!merged.empty() && merged.back().first == c)
        merged.back().second += v;
      else
        merged.emplace_back(c, std::move(v));
      if (merged.back().second.is_zero()) merged.pop_back();
    }
    reduce_and_insert(std::move(merged));
  }

  /// Columns form a basis of the solution space.
  Matrix nullspace() const {
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < unknowns_; ++c)
      if (!pivots_.contains(c)) free.push_back(c);
    Matrix k(unknowns_, free.size());
    std::vector<Rational> x(unknowns_);
    for (std::size_t f = 0; f < free.size(); ++f) {
      std::fill(x.begin(), x.end(), Rational());
      x[free[f]] = 1;
      for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        Rational s;
        for (std::size_t i = 1; i < it->second.size(); ++i) {
          const auto& [c, v] = it->second[i];
          if (!x[c].is_zero()) s -= v * x[c];
        }
        x[it->first] = s;
      }
      for (std::size_t c = 0; c < unknowns_; ++c) k(c, f) = x[c];
    }
    return k;
  }

 private:
  // Rows are stored monic with their leading column as the key.
  void reduce_and_insert(Row row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      const Rational factor = row.front().second;
      row = axpy(row, it->second, -factor);
    }
    if (row.empty()) return;
    const Rational inv = row.front().second.inverse();
    if (!inv.is_one())
      for (auto& [c, v] : row) v *= inv;
    pivots_.emplace(row.front().first, std::move(row));
  }

  static Row axpy(const Row& a, const Row& b, const Rational& k) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, k * b[j].second);
        ++j;
      } else {
        Rational v = a[i].second + k * b[j].second;
        if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::size_t unknowns_;
  std::map<std::size_t, Row> pivots_;
};


// ---- univariate polynomials ------------------------------------------------

/// Coefficients from the constant term upward; no trailing zeros.
using Polynomial = std::vector<Rational>;

inline void trim(Polynomial& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational v;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

inline Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long long>(i)));
  trim(d);
  return d;
}

/// Remainder and quotient of a by a nonzero b.
inline std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  Polynomial q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  const Rational lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return {q, a};
}

inline Polynomial monic(Polynomial p) {
  trim(p);
  if (p.empty()) return p;
  const Rational inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

inline Polynomial gcd(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(a);
}

/// All distinct rational roots, in increasing order. Exact: the squarefree
/// part is turned into a monic integer polynomial whose rational roots are
/// integers, and those are isolated with a Sturm sequence.
inline std::vector<Rational> rational_roots(Polynomial p) {
  trim(p);
  if (p.size() <= 1) return {};
  Polynomial sq = monic(divmod(p, gcd(p, derivative(p))).first);
  const std::size_t d = sq.size() - 1;
  if (d == 0) return {};
  // integer coefficients b_i with leading coefficient a
  mpz_class a = 1;
  for (const auto& c : sq) {
    mpz_class den = c.denominator();
    mpz_lcm(a.get_mpz_t(), a.get_mpz_t(), den.get_mpz_t());
  }
  // H(u) = a^(d-1) P(u/a) with P = a * sq
  Polynomial h(d + 1);
  mpz_class apow = 1;  // a^(d-1-i), built from the top down
  for (std::size_t k = 0; k <= d; ++k) {
    const std::size_t i = d - k;
    mpq_class c = sq[i].to_mpq() * mpq_class(a);
    if (i == d) {
      h[i] = Rational(1);
    } else {
      h[i] = Rational(mpq_class(c * mpq_class(apow)));
      apow *= a;
    }
  }
  // Sturm chain
  std::vector<Polynomial> chain{h, derivative(h)};
  while (chain.back().size() > 1) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  const auto changes = [&](const Rational& x) {
    int count = 0, last = 0;
    for (const auto& q : chain) {
      const int s = evaluate(q, x).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  mpz_class bound = 1;
  for (std::size_t i = 0; i < d; ++i) {
    mpz_class v = abs(h[i].numerator());
    if (v > bound) bound = v;
  }
  bound += 1;
  std::vector<Rational> roots;
  const Rational half(1, 2);
  // integers in [lo, hi]; the count uses the half-integer endpoints
  std::vector<std::pair<mpz_class, mpz_class>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const Rational l = Rational(mpq_class(lo)) - half, r = Rational(mpq_class(hi)) + half;
    if (changes(l) - changes(r) <= 0) continue;
    if (lo == hi) {
      const Rational u{mpq_class(lo)};
      if (evaluate(h, u).is_zero()) roots.push_back(u / Rational(mpq_class(a)));
      continue;
    }
    mpz_class mid = lo + (hi - lo) / 2;
    stack.emplace_back(mid + 1, hi);
    stack.emplace_back(lo, mid);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace nakayama::linalg
