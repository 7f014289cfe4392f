#pragma once

// Graphviz rendering of descriptors: the covering walk of a string, the
// support grid of a k-split bimodule and the support cycle of a band.

#include <sstream>
#include <string>
#include <vector>

#include "nakayama/descriptors.hpp"
#include "nakayama/grammar.hpp"
#include "nakayama/realize.hpp"

namespace nakayama {

namespace detail {

inline std::string dot_node(long long p, long long q) {
  return "\"v_" + std::to_string(p) + "_" + std::to_string(q) + "\"";
}

struct DotWriter {
  std::ostringstream os;
  explicit DotWriter(const std::string& title) {
    os << "digraph bimodule {\n  label=\"" << title << "\";\n  node [shape=circle];\n";
  }
  void node(long long p, long long q, const std::string& label) {
    os << "  " << dot_node(p, q) << " [label=\"" << label << "\"];\n";
  }
  void edge(long long p1, long long q1, long long p2, long long q2, const std::string& label) {
    os << "  " << dot_node(p1, q1) << " -> " << dot_node(p2, q2) << " [label=\"" << label << "\"];\n";
  }
  std::string finish() {
    os << "}\n";
    return os.str();
  }
};

inline std::string vertex_label(long long p, long long q, const AlgebraContext& ctx) {
  return std::to_string(ctx.wrap(p)) + "|" + std::to_string(ctx.wrap(q));
}

/// Left action of alpha_p at row p, right action of alpha_{q-1} at column q.
inline std::string left_label(long long p, const AlgebraContext& ctx) { return "a" + std::to_string(ctx.wrap(p)) + " ."; }
inline std::string right_label(long long q, const AlgebraContext& ctx) {
  return ". a" + std::to_string(ctx.wrap(q - 1));
}

}  // namespace detail

inline std::string to_dot(const Descriptor& d, const AlgebraContext& ctx) {
  detail::DotWriter w(to_string(d));
  if (auto s = std::get_if<StringDescriptor>(&d)) {
    const auto nodes = walk_nodes(*s);
    for (const auto& v : nodes) w.node(v.p, v.q, detail::vertex_label(v.p, v.q, ctx));
    for (std::size_t t = 1; t < nodes.size(); ++t) {
      const auto a = nodes[t - 1], b = nodes[t];
      if (b.q == a.q + 1)
        w.edge(b.p, b.q, a.p, a.q, detail::right_label(b.q, ctx));
      else
        w.edge(a.p, a.q, b.p, b.q, detail::left_label(a.p, ctx));
    }
    return w.finish();
  }
  if (auto sp = std::get_if<SplitDescriptor>(&d)) {
    // outer product drawn on the covering: rows from the left factor, columns from the right
    std::vector<long long> rows{sp->left.vertex}, cols{sp->right.vertex};
    if (sp->left.kind == ModuleKind::projective) rows.push_back(sp->left.vertex + 1);
    if (sp->right.kind == ModuleKind::projective) cols.push_back(sp->right.vertex - 1);
    for (long long p : rows)
      for (long long q : cols) w.node(p, q, detail::vertex_label(p, q, ctx));
    for (long long q : cols)
      if (rows.size() == 2) w.edge(rows[0], q, rows[1], q, detail::left_label(rows[0], ctx));
    for (long long p : rows)
      if (cols.size() == 2) w.edge(p, cols[0], p, cols[1], detail::right_label(cols[0], ctx));
    return w.finish();
  }
  const auto& b = std::get<BandDescriptor>(d);
  const std::string jordan = "J_" + std::to_string(b.m) + "(" + b.lambda.str() + ")";
  const std::string dim = "^" + std::to_string(b.m);
  if (ctx.n == 1) {
    // the single vertex unrolled: top, its left image and its right image
    w.node(1, 1, "1|1" + dim);
    w.node(2, 1, "1|1" + dim);
    w.node(1, 0, "1|1" + dim);
    w.edge(1, 1, 2, 1, "a1 .");
    w.edge(1, 1, 1, 0, jordan);
    return w.finish();
  }
  const BandLayout lay = band_layout(b.k, ctx);
  for (const auto& v : lay.tops) w.node(v.i, v.j, v.str() + dim);
  for (const auto& v : lay.bottoms) w.node(v.i, v.j, v.str() + dim);
  for (int i = 1; i <= ctx.n; ++i) {
    const auto t = lay.tops[static_cast<std::size_t>(i - 1)];
    const auto down = lay.bottoms[static_cast<std::size_t>(i - 1)];
    const auto side = lay.bottoms[static_cast<std::size_t>(ctx.wrap(i - 1) - 1)];
    w.edge(t.i, t.j, down.i, down.j, detail::left_label(t.i, ctx));
    w.edge(t.i, t.j, side.i, side.j, i == 2 ? jordan : detail::right_label(t.j, ctx));
  }
  return w.finish();
}

}  // namespace nakayama
