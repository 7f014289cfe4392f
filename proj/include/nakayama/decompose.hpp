#pragma once

// Krull-Schmidt decomposition of concrete bimodules and identification of
// indecomposable summands against the descriptor catalog.
//
// Splitting works with endomorphisms f: a Fitting split of f (or of f - c
// for a rational eigenvalue c) cuts the module into two submodules. A module
// is certified indecomposable when the trace form (a, b) -> tr(ab) on its
// endomorphism ring has rank one, i.e. End/rad End is the ground field.

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nakayama/grammar.hpp"
#include "nakayama/hom.hpp"
#include "nakayama/linalg.hpp"
#include "nakayama/realize.hpp"

namespace nakayama {

struct Summand {
  ConcreteBimodule module;
  bool certified = false;  // End(module) is local
};

namespace detail {

inline std::size_t gram_rank(const std::vector<Morphism>& basis) {
  const std::size_t e = basis.size();
  Matrix g(e, e);
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = a; b < e; ++b) {
      Rational t;
      for (std::size_t v = 0; v < basis[a].size(); ++v) {
        const Matrix& x = basis[a][v];
        const Matrix& y = basis[b][v];
        for (std::size_t p = 0; p < x.rows(); ++p)
          for (std::size_t q = 0; q < x.cols(); ++q)
            if (!x(p, q).is_zero() && !y(q, p).is_zero()) t += x(p, q) * y(q, p);
      }
      g(a, b) = t;
      g(b, a) = t;
    }
  return linalg::rank(g);
}

/// Fitting split of an endomorphism, vertex by vertex; nullopt if trivial.
inline std::optional<std::pair<ConcreteBimodule, ConcreteBimodule>> fitting_parts(
    const ConcreteBimodule& x, const Morphism& f) {
  std::vector<Matrix> ker(f.size()), img(f.size());
  std::size_t kdim = 0, idim = 0;
  for (std::size_t v = 0; v < f.size(); ++v) {
    auto s = linalg::fitting_split(f[v]);
    kdim += s.kernel_basis.cols();
    idim += s.image_basis.cols();
    ker[v] = std::move(s.kernel_basis);
    img[v] = std::move(s.image_basis);
  }
  if (kdim == 0 || idim == 0) return std::nullopt;
  return std::make_pair(restrict(x, ker), restrict(x, img));
}

/// Minimal polynomial of f on the cyclic subspace generated by w.
inline linalg::Polynomial local_minimal_polynomial(const Morphism& f, const ConcreteBimodule& x,
                                                   std::mt19937_64& rng) {
  const std::size_t dim = x.total_dimension();
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<Rational> w(dim);
  for (auto& c : w) c = dist(rng);
  const auto apply = [&](const std::vector<Rational>& u) {
    std::vector<Rational> out(dim);
    std::size_t off = 0;
    for (std::size_t v = 0; v < f.size(); ++v) {
      const Matrix& m = f[v];
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s;
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (!m(r, c).is_zero() && !u[off + c].is_zero()) s += m(r, c) * u[off + c];
        out[off + r] = s;
      }
      off += m.cols();
    }
    return out;
  };
  std::vector<std::vector<Rational>> krylov{w};
  while (true) {
    std::vector<Rational> next = apply(krylov.back());
    Matrix k(dim, krylov.size());
    Matrix rhs(dim, 1);
    for (std::size_t c = 0; c < krylov.size(); ++c)
      for (std::size_t r = 0; r < dim; ++r) k(r, c) = krylov[c][r];
    for (std::size_t r = 0; r < dim; ++r) rhs(r, 0) = next[r];
    if (auto sol = linalg::solve(k, rhs)) {
      linalg::Polynomial p(krylov.size() + 1);
      for (std::size_t i = 0; i < krylov.size(); ++i) p[i] = -(*sol)(i, 0);
      p.back() = 1;
      return p;
    }
    krylov.push_back(std::move(next));
  }
}

class Splitter {
 public:
  explicit Splitter(std::uint64_t seed) : rng_(seed) {}

  void run(const ConcreteBimodule& x, std::vector<Summand>& out) {
    if (x.total_dimension() == 0) return;
    const std::vector<Morphism> e = end_space(x);
    if (e.size() <= 1) {
      out.push_back({x, true});
      return;
    }
    const bool local = gram_rank(e) == 1;
    if (local) {
      out.push_back({x, true});
      return;
    }
    if (auto parts = find_split(x, e)) {
      run(parts->first, out);
      run(parts->second, out);
      return;
    }
    out.push_back({x, false});
  }

 private:
  using Parts = std::pair<ConcreteBimodule, ConcreteBimodule>;

  std::optional<Parts> find_split(const ConcreteBimodule& x, const std::vector<Morphism>& e) {
    // basis elements, pairwise sums, random combinations
    for (const auto& f : e)
      if (auto p = fitting_parts(x, f)) return p;
    std::size_t budget = 400;
    for (std::size_t a = 0; a < e.size() && budget > 0; ++a)
      for (std::size_t b = a + 1; b < e.size() && budget > 0; ++b, --budget) {
        std::vector<Rational> c(e.size());
        c[a] = 1;
        c[b] = 1;
        if (auto p = fitting_parts(x, combine(e, c))) return p;
      }
    std::vector<Morphism> randoms;
    for (int r = 0; r < 64; ++r) {
      randoms.push_back(combine(e, random_coefficients(rng_, e.size())));
      if (auto p = fitting_parts(x, randoms.back())) return p;
    }
    // shifted Fitting splits at rational eigenvalues
    for (int r = 0; r < 8; ++r) {
      const Morphism& f = randoms[static_cast<std::size_t>(r)];
      for (const auto& c : linalg::rational_roots(local_minimal_polynomial(f, x, rng_)))
        if (auto p = fitting_parts(x, subtract_scalar(f, c))) return p;
    }
    // endomorphisms killing a basis vector are never invertible
    std::size_t tries = 0;
    for (std::size_t v = 0; v < x.vertex_count() && tries < 64; ++v)
      for (std::size_t col = 0; col < x.dim_at(v) && tries < 64; ++col, ++tries) {
        Matrix eval(x.dim_at(v), e.size());
        for (std::size_t b = 0; b < e.size(); ++b)
          for (std::size_t r = 0; r < x.dim_at(v); ++r) eval(r, b) = e[b][v](r, col);
        const Matrix ann = linalg::kernel(eval);
        if (ann.cols() == 0) continue;
        std::vector<Morphism> sub;
        for (std::size_t k = 0; k < ann.cols(); ++k) {
          std::vector<Rational> c(e.size());
          for (std::size_t b = 0; b < e.size(); ++b) c[b] = ann(b, k);
          sub.push_back(combine(e, c));
          if (auto p = fitting_parts(x, sub.back())) return p;
        }
        for (int r = 0; r < 4; ++r)
          if (auto p = fitting_parts(x, combine(sub, random_coefficients(rng_, sub.size())))) return p;
      }
    return std::nullopt;
  }

  std::mt19937_64 rng_;
};

}  // namespace detail

constexpr std::uint64_t kDefaultSeed = 0;

inline std::vector<Summand> split_indecomposables(const ConcreteBimodule& x,
                                                  std::uint64_t seed = kDefaultSeed) {
  std::vector<Summand> out;
  detail::Splitter(seed).run(x, out);
  return out;
}

/// Whether End(x) is local, decided by the rank of its trace form.
inline bool has_local_endomorphisms(const ConcreteBimodule& x) {
  const auto e = end_space(x);
  return e.size() == 1 || (!e.empty() && detail::gram_rank(e) == 1);
}

// ---- isomorphism -----------------------------------------------------------

enum class Iso { no, yes, undecided };

inline const char* to_string(Iso r) {
  switch (r) {
    case Iso::no: return "false";
    case Iso::yes: return "true";
    case Iso::undecided: return "undecided";
  }
  return "undecided";
}

inline Iso isomorphic(const ConcreteBimodule& x, const ConcreteBimodule& y,
                      std::uint64_t seed = kDefaultSeed) {
  if (x.n() != y.n() || x.dims() != y.dims()) return Iso::no;
  if (x.total_dimension() == 0) return Iso::yes;
  const auto h = hom_space(x, y);
  if (h.empty()) return Iso::no;
  std::mt19937_64 rng(seed);
  if (is_invertible(combine(h, random_coefficients(rng, h.size())))) return Iso::yes;
  for (const auto& f : h)
    if (is_invertible(f)) return Iso::yes;
  for (int r = 0; r < 16; ++r)
    if (is_invertible(combine(h, random_coefficients(rng, h.size())))) return Iso::yes;
  std::size_t budget = 200;
  for (std::size_t a = 0; a < h.size() && budget > 0; ++a)
    for (std::size_t b = a + 1; b < h.size() && budget > 0; ++b, --budget) {
      std::vector<Rational> c(h.size());
      c[a] = 1;
      c[b] = 1;
      if (is_invertible(combine(h, c))) return Iso::yes;
    }
  const auto ex = end_space(x);
  if (hom_space(y, x).size() != h.size() || ex.size() != h.size() || end_space(y).size() != h.size())
    return Iso::no;
  // With End(x) local, the non-invertible maps form a hyperplane of Hom(x,y)
  // whenever x and y are isomorphic, so some basis element would be invertible.
  if (ex.size() == 1 || detail::gram_rank(ex) == 1) return Iso::no;
  return Iso::undecided;
}

// ---- identification --------------------------------------------------------

class Unrecognized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cycle operator V_1^{-1} H_2 V_2^{-1} H_3 ... V_n^{-1} H_1 on the top space
/// of a module with the grid of B(k, m, .); nullopt if some V_i is singular.
inline std::optional<Matrix> band_cycle_operator(const ConcreteBimodule& x, int k,
                                                 const AlgebraContext& ctx) {
  const int n = ctx.n;
  if (n == 1) {
    const Matrix& v = x.vmap(1, 1);
    const Matrix& h = x.hmap(1, 1);
    // top: a complement of ker v spanned by standard vectors
    const Matrix kv = linalg::kernel(v);
    const auto e = linalg::rref(hstack(kv, Matrix::identity(v.cols())));
    std::vector<std::size_t> top;
    for (auto p : e.pivots)
      if (p >= kv.cols()) top.push_back(p - kv.cols());
    Matrix t(v.cols(), top.size());
    for (std::size_t i = 0; i < top.size(); ++i) t(top[i], i) = 1;
    const Matrix vt = v * t;
    if (linalg::rank(vt) != top.size()) return std::nullopt;
    auto sol = linalg::solve(vt, h * t);
    if (!sol) return std::nullopt;
    return *sol;
  }
  const BandLayout lay = band_layout(k, ctx);
  Matrix r;
  bool first = true;
  for (int i = 1; i <= n; ++i) {
    const TorusVertex t = lay.tops[static_cast<std::size_t>(i - 1)];
    const TorusVertex tn = lay.tops[static_cast<std::size_t>(i % n)];
    const Matrix& vi = x.vmap(t.i, t.j);
    if (!linalg::invertible(vi)) return std::nullopt;
    const Matrix step = linalg::inverse(vi) * x.hmap(tn.i, tn.j);  // t_{i+1} -> t_i
    r = first ? step : r * step;
    first = false;
  }
  return r;
}

inline Descriptor identify(const ConcreteBimodule& s, const AlgebraContext& ctx,
                           std::uint64_t seed = kDefaultSeed) {
  if (s.n() != ctx.n) throw std::invalid_argument("identify: bimodule over a different n");
  const std::size_t dim = s.total_dimension();
  const auto& grid = s.dims();
  const auto matches = [&](const Descriptor& d) {
    return isomorphic(s, realize(d, ctx), seed) == Iso::yes;
  };
  const int n = ctx.n;
  // strings, grids compared from the walk before realizing
  for (StringType t : {StringType::M, StringType::N, StringType::W, StringType::S}) {
    for (int k = 0; k <= static_cast<int>(dim); ++k) {
      StringDescriptor probe{t, {1, 1}, k};
      if (static_cast<std::size_t>(probe.length() + 1) != dim || !probe.admissible()) continue;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          StringDescriptor d{t, {i, j}, k};
          std::vector<std::size_t> g(grid.size(), 0);
          for (const auto& v : walk_nodes(d)) ++g[s.index(v.p, v.q)];
          if (g == grid && matches(d)) return d;
        }
    }
  }
  if (dim <= 4)
    for (auto lk : {ModuleKind::simple, ModuleKind::projective})
      for (int i = 1; i <= n; ++i)
        for (auto rk : {ModuleKind::simple, ModuleKind::projective})
          for (int j = 1; j <= n; ++j) {
            const Descriptor d = make_split(lk, i, rk, j, ctx);
            if (dimension(d, ctx) == dim && dimension_grid(d, ctx) == grid && matches(d)) return d;
          }
  if (dim % (2 * static_cast<std::size_t>(n)) == 0) {
    const int m = static_cast<int>(dim / (2 * static_cast<std::size_t>(n)));
    for (int k = 1; k <= n; ++k) {
      if (dimension_grid(BandDescriptor{k, m, 1}, ctx) != grid) continue;
      const auto r = band_cycle_operator(s, k, ctx);
      if (!r) continue;
      const Rational tr = r->trace();
      if (tr.is_zero()) continue;
      std::vector<Rational> candidates{tr / Rational(m)};
      if (Rational(m) / tr != candidates.front()) candidates.push_back(Rational(m) / tr);
      for (const auto& lambda : candidates) {
        const Descriptor d = make_band(k, m, lambda, ctx);
        if (matches(d)) return d;
      }
    }
  }
  throw Unrecognized("unrecognized indecomposable of dimension " + std::to_string(dim));
}

// ---- reports -------------------------------------------------------------

struct DecompositionReport {
  std::uint64_t input_hash = 0;
  std::uint64_t seed = kDefaultSeed;
  std::size_t input_dimension = 0;
  Multiset multiset;
  std::vector<Summand> summands;
  std::vector<std::string> flags;  // one per summand: "indecomposable" or a warning
};

inline DecompositionReport decompose(const ConcreteBimodule& x, const AlgebraContext& ctx,
                                     std::uint64_t seed = kDefaultSeed) {
  DecompositionReport rep;
  rep.input_hash = content_hash(x);
  rep.seed = seed;
  rep.input_dimension = x.total_dimension();
  rep.summands = split_indecomposables(x, seed);
  for (const auto& s : rep.summands) {
    if (!s.certified) {
      rep.flags.emplace_back("unidentified-possibly-decomposable");
      continue;
    }
    try {
      rep.multiset.add(identify(s.module, ctx, seed));
      rep.flags.emplace_back("indecomposable");
    } catch (const Unrecognized&) {
      rep.flags.emplace_back("unrecognized-indecomposable");
    }
  }
  return rep;
}

inline bool fully_identified(const DecompositionReport& r) {
  for (const auto& f : r.flags)
    if (f != "indecomposable") return false;
  return true;
}

inline nlohmann::json to_json(const DecompositionReport& r, const AlgebraContext& ctx) {
  nlohmann::json out;
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.input_hash));
  out["input_hash"] = hash;
  out["seed"] = r.seed;
  out["input_dimension"] = r.input_dimension;
  out["multiset"] = to_string(r.multiset);
  nlohmann::json summands = nlohmann::json::array();
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    nlohmann::json grid = nlohmann::json::array();
    for (int a = 1; a <= ctx.n; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 1; b <= ctx.n; ++b) row.push_back(r.summands[i].module.dim(a, b));
      grid.push_back(row);
    }
    summands.push_back({{"dims", grid}, {"flag", r.flags[i]}});
  }
  out["summands"] = summands;
  return out;
}

}  // namespace nakayama
