#pragma once

// Symbolic names for the indecomposable A-A-bimodules: strings (walks on the
// covering quiver), bands B(k,m,lambda) and k-split outer tensor products,
// with their numerical invariants and the twist calculus.

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/rational.hpp"

namespace nakayama {

enum class StringType { M, N, W, S };
enum class Course { right, down };
enum class Side { left, right };
enum class ModuleKind { simple, projective };

inline char type_letter(StringType t) { return "MNWS"[static_cast<int>(t)]; }

inline Course course_of(StringType t) {
  return (t == StringType::M || t == StringType::N) ? Course::right : Course::down;
}

inline StringType string_type(Course c, int length) {
  const bool even = length % 2 == 0;
  if (c == Course::right) return even ? StringType::M : StringType::N;
  return even ? StringType::W : StringType::S;
}

struct StringDescriptor {
  StringType type = StringType::M;
  TorusVertex vertex;
  int valleys = 0;

  int length() const {
    switch (type) {
      case StringType::M: return 2 * valleys + 2;
      case StringType::N: return 2 * valleys + 1;
      case StringType::W: return 2 * valleys;
      case StringType::S: return 2 * valleys + 1;
    }
    return 0;
  }
  Course course() const { return course_of(type); }
  bool admissible() const { return valleys >= 0 && length() >= 2; }

  friend auto operator<=>(const StringDescriptor&, const StringDescriptor&) = default;
};

struct BandDescriptor {
  int k = 1;
  int m = 1;
  Rational lambda = 1;

  friend auto operator<=>(const BandDescriptor& a, const BandDescriptor& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    if (auto c = a.m <=> b.m; c != 0) return c;
    return a.lambda <=> b.lambda;
  }
  friend bool operator==(const BandDescriptor&, const BandDescriptor&) = default;
};

struct OneSidedModule {
  Side side = Side::left;
  ModuleKind kind = ModuleKind::simple;
  int vertex = 1;

  int dimension() const { return kind == ModuleKind::simple ? 1 : 2; }
  /// e.g. S_left:1, P_right:2
  std::string str() const {
    return std::string(kind == ModuleKind::simple ? "S_" : "P_") +
           (side == Side::left ? "left:" : "right:") + std::to_string(vertex);
  }

  friend auto operator<=>(const OneSidedModule&, const OneSidedModule&) = default;
};

struct SplitDescriptor {
  OneSidedModule left{Side::left, ModuleKind::simple, 1};
  OneSidedModule right{Side::right, ModuleKind::simple, 1};

  friend auto operator<=>(const SplitDescriptor&, const SplitDescriptor&) = default;
};

/// Variant order fixes the tie-breaking order strings < splits < bands.
using Descriptor = std::variant<StringDescriptor, SplitDescriptor, BandDescriptor>;

inline bool is_string(const Descriptor& d) { return std::holds_alternative<StringDescriptor>(d); }
inline bool is_split(const Descriptor& d) { return std::holds_alternative<SplitDescriptor>(d); }
inline bool is_band(const Descriptor& d) { return std::holds_alternative<BandDescriptor>(d); }

// ---- constructors --------------------------------------------------------

inline StringDescriptor make_string(StringType t, long long i, long long j, int valleys,
                                    const AlgebraContext& ctx) {
  StringDescriptor s{t, torus_vertex(i, j, ctx), valleys};
  if (!s.admissible())
    throw std::invalid_argument(std::string("string ") + type_letter(t) + " with " +
                                std::to_string(valleys) +
                                " valleys has length < 2; use the split form instead");
  return s;
}

inline BandDescriptor make_band(long long k, int m, const Rational& lambda,
                                const AlgebraContext& ctx) {
  if (m < 1) throw std::invalid_argument("band needs Jordan size m >= 1");
  if (lambda.is_zero()) throw std::invalid_argument("band parameter lambda must be nonzero");
  return {ctx.wrap(k), m, lambda};
}

inline SplitDescriptor make_split(ModuleKind left, long long i, ModuleKind right, long long j,
                                  const AlgebraContext& ctx) {
  return {{Side::left, left, ctx.wrap(i)}, {Side::right, right, ctx.wrap(j)}};
}

inline SplitDescriptor L(long long i, long long j, const AlgebraContext& ctx) {
  return make_split(ModuleKind::simple, i, ModuleKind::simple, j, ctx);
}
inline SplitDescriptor P(long long i, long long j, const AlgebraContext& ctx) {
  return make_split(ModuleKind::projective, i, ModuleKind::projective, j, ctx);
}
inline SplitDescriptor S0(long long i, long long j, const AlgebraContext& ctx) {
  return make_split(ModuleKind::simple, i, ModuleKind::projective, j, ctx);
}
inline SplitDescriptor N0(long long i, long long j, const AlgebraContext& ctx) {
  return make_split(ModuleKind::projective, i, ModuleKind::simple, j, ctx);
}

/// Reduces all vertex data modulo n.
inline Descriptor canonical(const Descriptor& d, const AlgebraContext& ctx) {
  if (auto s = std::get_if<StringDescriptor>(&d))
    return make_string(s->type, s->vertex.i, s->vertex.j, s->valleys, ctx);
  if (auto b = std::get_if<BandDescriptor>(&d)) return make_band(b->k, b->m, b->lambda, ctx);
  const auto& sp = std::get<SplitDescriptor>(d);
  return make_split(sp.left.kind, sp.left.vertex, sp.right.kind, sp.right.vertex, ctx);
}

// ---- covering walks ------------------------------------------------------

/// Nodes of the alternating walk V(v,c,l) on Z^2. A right step goes from
/// (p,q) to (p,q+1) and carries the arrow (p,q+1) -> (p,q); a down step goes
/// to (p+1,q) and carries the arrow (p,q) -> (p+1,q).
inline std::vector<CoveringVertex> walk_nodes(CoveringVertex start, Course c, int length) {
  std::vector<CoveringVertex> nodes{start};
  for (int t = 1; t <= length; ++t) {
    const bool right = (c == Course::right) == (t % 2 == 1);
    CoveringVertex v = nodes.back();
    if (right)
      ++v.q;
    else
      ++v.p;
    nodes.push_back(v);
  }
  return nodes;
}

inline std::vector<CoveringVertex> walk_nodes(const StringDescriptor& s) {
  return walk_nodes({s.vertex.i, s.vertex.j}, s.course(), s.length());
}

/// Descriptor of the indecomposable Theta(V(v,c,l)); walks of length <= 1
/// are k-split.
inline Descriptor walk_descriptor(CoveringVertex start, Course c, int length,
                                  const AlgebraContext& ctx) {
  if (length == 0) return L(start.p, start.q, ctx);
  if (length == 1) return c == Course::right ? S0(start.p, start.q + 1, ctx) : N0(start.p, start.q, ctx);
  const StringType t = string_type(c, length);
  const int k = c == Course::right ? (length - 1) / 2 : length / 2;
  return make_string(t, start.p, start.q, k, ctx);
}

// ---- invariants ----------------------------------------------------------

inline int width(const StringDescriptor& d) {
  const int l = d.length();
  return (d.course() == Course::right) ? (l + 3) / 2 : (l + 2) / 2;
}

inline int height(const StringDescriptor& d) {
  const int l = d.length();
  return (d.course() == Course::right) ? (l + 2) / 2 : (l + 3) / 2;
}

inline int valleys(const Descriptor& d) {
  if (auto s = std::get_if<StringDescriptor>(&d)) return s->valleys;
  if (is_split(d)) return 0;
  throw std::domain_error("valleys undefined for band bimodules");
}

inline std::size_t dimension(const Descriptor& d, const AlgebraContext& ctx) {
  if (auto s = std::get_if<StringDescriptor>(&d)) return static_cast<std::size_t>(s->length() + 1);
  if (auto b = std::get_if<BandDescriptor>(&d))
    return 2 * static_cast<std::size_t>(ctx.n) * static_cast<std::size_t>(b->m);
  const auto& sp = std::get<SplitDescriptor>(d);
  return static_cast<std::size_t>(sp.left.dimension() * sp.right.dimension());
}

// ---- twists --------------------------------------------------------------

/// theta^t (rotation of the quiver) or eta_mu (scaling of alpha_1 by mu).
struct Automorphism {
  enum class Kind { theta, eta };
  Kind kind = Kind::theta;
  int t = 1;
  Rational mu = 1;

  static Automorphism theta(int t) { return {Kind::theta, t, 1}; }
  static Automorphism eta(const Rational& mu) {
    if (mu.is_zero()) throw std::invalid_argument("eta twist needs a nonzero scalar");
    return {Kind::eta, 0, mu};
  }
};

/// Descriptor of the bimodule with one action precomposed with `aut`.
inline Descriptor twist(const Descriptor& d, Side side, const Automorphism& aut,
                        const AlgebraContext& ctx) {
  const bool left = side == Side::left;
  if (aut.kind == Automorphism::Kind::eta) {
    if (aut.mu.is_zero()) throw std::invalid_argument("eta twist needs a nonzero scalar");
    if (auto b = std::get_if<BandDescriptor>(&d))
      return make_band(b->k, b->m, left ? b->lambda / aut.mu : b->lambda * aut.mu, ctx);
    return canonical(d, ctx);
  }
  const int t = aut.t;
  if (auto s = std::get_if<StringDescriptor>(&d)) {
    const long long i = left ? s->vertex.i - t : s->vertex.i;
    const long long j = left ? s->vertex.j : s->vertex.j - t;
    return make_string(s->type, i, j, s->valleys, ctx);
  }
  if (auto b = std::get_if<BandDescriptor>(&d))
    return make_band(left ? b->k - t : b->k + t, b->m, b->lambda, ctx);
  const auto& sp = std::get<SplitDescriptor>(d);
  return make_split(sp.left.kind, left ? sp.left.vertex - t : sp.left.vertex, sp.right.kind,
                    left ? sp.right.vertex : sp.right.vertex - t, ctx);
}

// ---- multisets -----------------------------------------------------------

class Multiset {
 public:
  using Map = std::map<Descriptor, long long>;

  void add(const Descriptor& d, long long count = 1) {
    if (count <= 0) return;
    entries_[d] += count;
  }
  void add(const Multiset& other, long long scale = 1) {
    for (const auto& [d, c] : other.entries_) add(d, c * scale);
  }

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool contains(const Descriptor& d) const { return entries_.contains(d); }
  long long count(const Descriptor& d) const {
    auto it = entries_.find(d);
    return it == entries_.end() ? 0 : it->second;
  }
  long long size() const {
    long long s = 0;
    for (const auto& [d, c] : entries_) s += c;
    return s;
  }
  std::size_t total_dimension(const AlgebraContext& ctx) const {
    std::size_t s = 0;
    for (const auto& [d, c] : entries_) s += static_cast<std::size_t>(c) * dimension(d, ctx);
    return s;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  Map entries_;
};

}  // namespace nakayama
