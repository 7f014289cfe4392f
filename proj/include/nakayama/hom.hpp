#pragma once

// Spaces of bimodule homomorphisms and small helpers on morphisms.

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "nakayama/bimodule.hpp"
#include "nakayama/linalg.hpp"

namespace nakayama {

/// Basis of Hom(x, y): tuples (F_v) with y.map * F_v = F_w * x.map along every
/// arrow v -> w.
inline std::vector<Morphism> hom_space(const ConcreteBimodule& x, const ConcreteBimodule& y) {
  if (x.n() != y.n()) throw std::invalid_argument("hom_space: bimodules over different n");
  const std::size_t nv = x.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + y.dim_at(v) * x.dim_at(v);
  const auto var = [&](std::size_t v, std::size_t r, std::size_t c) {
    return offset[v] + r * x.dim_at(v) + c;
  };
  linalg::SparseSystem sys(offset[nv]);
  linalg::SparseSystem::Row row;
  const auto arrow = [&](std::size_t v, std::size_t w, const Matrix& xm, const Matrix& ym) {
    // (ym * F_v - F_w * xm)(r, c) = 0 for r < dim y_w, c < dim x_v
    for (std::size_t r = 0; r < y.dim_at(w); ++r)
      for (std::size_t c = 0; c < x.dim_at(v); ++c) {
        row.clear();
        for (std::size_t k = 0; k < y.dim_at(v); ++k)
          if (!ym(r, k).is_zero()) row.emplace_back(var(v, k, c), ym(r, k));
        for (std::size_t k = 0; k < x.dim_at(w); ++k)
          if (!xm(k, c).is_zero()) row.emplace_back(var(w, r, k), -xm(k, c));
        if (!row.empty()) sys.add(row);
      }
  };
  for (std::size_t v = 0; v < nv; ++v) {
    if (x.dim_at(v) == 0) continue;
    arrow(v, x.up(v), x.vmap_at(v), y.vmap_at(v));
    arrow(v, x.left(v), x.hmap_at(v), y.hmap_at(v));
  }
  const Matrix k = sys.nullspace();
  std::vector<Morphism> basis(k.cols());
  for (std::size_t b = 0; b < k.cols(); ++b) {
    Morphism f(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      f[v] = Matrix(y.dim_at(v), x.dim_at(v));
      for (std::size_t r = 0; r < y.dim_at(v); ++r)
        for (std::size_t c = 0; c < x.dim_at(v); ++c) f[v](r, c) = k(var(v, r, c), b);
    }
    basis[b] = std::move(f);
  }
  return basis;
}

inline std::vector<Morphism> end_space(const ConcreteBimodule& x) { return hom_space(x, x); }

inline Morphism identity_morphism(const ConcreteBimodule& x) {
  Morphism f(x.vertex_count());
  for (std::size_t v = 0; v < f.size(); ++v) f[v] = Matrix::identity(x.dim_at(v));
  return f;
}

inline Morphism combine(const std::vector<Morphism>& basis, const std::vector<Rational>& coeffs) {
  Morphism f = basis.front();
  for (auto& m : f) m = Matrix(m.rows(), m.cols());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (coeffs[b].is_zero()) continue;
    for (std::size_t v = 0; v < f.size(); ++v) f[v].add_block(0, 0, basis[b][v], coeffs[b]);
  }
  return f;
}

inline Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) h[v] = g[v] * f[v];
  return h;
}

inline Morphism subtract_scalar(const Morphism& f, const Rational& c) {
  Morphism g = f;
  for (auto& m : g)
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= c;
  return g;
}

inline bool is_invertible(const Morphism& f) {
  for (const auto& m : f)
    if (!m.square() || (m.rows() > 0 && linalg::rank(m) != m.rows())) return false;
  return true;
}

inline bool is_zero(const Morphism& f) {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

/// Whether f is a homomorphism x -> y.
inline bool is_homomorphism(const Morphism& f, const ConcreteBimodule& x, const ConcreteBimodule& y) {
  if (f.size() != x.vertex_count()) return false;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v].rows() != y.dim_at(v) || f[v].cols() != x.dim_at(v)) return false;
    if (y.vmap_at(v) * f[v] != f[x.up(v)] * x.vmap_at(v)) return false;
    if (y.hmap_at(v) * f[v] != f[x.left(v)] * x.hmap_at(v)) return false;
  }
  return true;
}

/// Small integer coefficients for random combinations.
inline std::vector<Rational> random_coefficients(std::mt19937_64& rng, std::size_t count) {
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<Rational> c(count);
  for (auto& x : c) x = dist(rng);
  return c;
}

}  // namespace nakayama
