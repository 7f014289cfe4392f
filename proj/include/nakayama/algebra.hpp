#pragma once

// The radical-square-zero Nakayama algebra A = Q_n on a cyclic quiver with
// vertices 1..n and arrows alpha_i : i -> i+1, together with the torus quiver
// presenting A-A-bimodules and its covering on Z^2.

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nakayama/rational.hpp"

namespace nakayama {

/// Canonical residue of x modulo n in the range 1..n.
inline int wrap(long long x, int n) {
  const long long r = ((x - 1) % n + n) % n;
  return static_cast<int>(r + 1);
}

struct AlgebraContext {
  int n = 1;

  explicit AlgebraContext(int n_) : n(n_) {
    if (n < 1) throw std::invalid_argument("algebra needs n >= 1");
  }

  int wrap(long long x) const { return nakayama::wrap(x, n); }
  std::size_t dimension() const { return 2 * static_cast<std::size_t>(n); }
};

struct BasisElement {
  enum class Kind { idempotent, arrow };
  Kind kind = Kind::idempotent;
  int vertex = 1;  // eps_i, or alpha_i : i -> i+1

  static BasisElement eps(int i) { return {Kind::idempotent, i}; }
  static BasisElement alpha(int i) { return {Kind::arrow, i}; }

  int source(const AlgebraContext& ctx) const { return ctx.wrap(vertex); }
  int target(const AlgebraContext& ctx) const {
    return kind == Kind::arrow ? ctx.wrap(vertex + 1) : ctx.wrap(vertex);
  }

  /// Position in the 2n-element basis: eps_i -> i-1, alpha_i -> n+i-1.
  std::size_t index(const AlgebraContext& ctx) const {
    const auto v = static_cast<std::size_t>(ctx.wrap(vertex) - 1);
    return kind == Kind::idempotent ? v : static_cast<std::size_t>(ctx.n) + v;
  }

  std::string str() const { return (kind == Kind::idempotent ? "e" : "a") + std::to_string(vertex); }

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// An element of A as a coefficient vector over the 2n basis.
struct AlgebraElement {
  std::vector<Rational> coeffs;

  explicit AlgebraElement(const AlgebraContext& ctx) : coeffs(ctx.dimension()) {}
  AlgebraElement(const AlgebraContext& ctx, const BasisElement& b) : coeffs(ctx.dimension()) {
    coeffs[b.index(ctx)] = 1;
  }

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

inline BasisElement basis_element(const AlgebraContext& ctx, std::size_t index) {
  const auto n = static_cast<std::size_t>(ctx.n);
  if (index >= 2 * n) throw std::out_of_range("basis index out of range");
  return index < n ? BasisElement::eps(static_cast<int>(index) + 1)
                   : BasisElement::alpha(static_cast<int>(index - n) + 1);
}

/// Product a*b of basis elements; paths compose right to left, so a*b means
/// "first b, then a".
inline AlgebraElement multiply(const BasisElement& a, const BasisElement& b,
                               const AlgebraContext& ctx) {
  AlgebraElement out(ctx);
  if (a.kind == BasisElement::Kind::arrow && b.kind == BasisElement::Kind::arrow) return out;
  if (a.source(ctx) != b.target(ctx)) return out;
  const BasisElement& survivor = a.kind == BasisElement::Kind::arrow ? a : b;
  out.coeffs[survivor.index(ctx)] = 1;
  return out;
}

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y,
                               const AlgebraContext& ctx) {
  AlgebraElement out(ctx);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) {
      if (y.coeffs[j].is_zero()) continue;
      const AlgebraElement p = multiply(basis_element(ctx, i), basis_element(ctx, j), ctx);
      const Rational c = x.coeffs[i] * y.coeffs[j];
      for (std::size_t k = 0; k < p.coeffs.size(); ++k)
        if (!p.coeffs[k].is_zero()) out.coeffs[k] += c * p.coeffs[k];
    }
  }
  return out;
}

inline AlgebraElement unit(const AlgebraContext& ctx) {
  AlgebraElement one(ctx);
  for (int i = 0; i < ctx.n; ++i) one.coeffs[static_cast<std::size_t>(i)] = 1;
  return one;
}

struct TorusVertex {
  int i = 1;  // row, left index
  int j = 1;  // column, right index

  friend auto operator<=>(const TorusVertex&, const TorusVertex&) = default;
  std::string str() const { return std::to_string(i) + "|" + std::to_string(j); }
};

inline TorusVertex torus_vertex(long long i, long long j, const AlgebraContext& ctx) {
  return {ctx.wrap(i), ctx.wrap(j)};
}

struct CoveringVertex {
  long long p = 0;  // row in Z
  long long q = 0;  // column in Z

  friend auto operator<=>(const CoveringVertex&, const CoveringVertex&) = default;
};

inline TorusVertex project(const CoveringVertex& v, const AlgebraContext& ctx) {
  return torus_vertex(v.p, v.q, ctx);
}

inline std::ostream& operator<<(std::ostream& os, const TorusVertex& v) { return os << v.str(); }

}  // namespace nakayama
