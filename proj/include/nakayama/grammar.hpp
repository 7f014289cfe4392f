#pragma once

// Text form of descriptors and multisets.
//
//   M(i|j,k) N(i|j,k) W(i|j,k) S(i|j,k)     strings
//   B(k,m,p/q)                               bands
//   split(Sl:i,Pr:j) and the other three     k-split, canonical form
//   L(i|j) P(i|j) S0(i|j) N0(i|j)            shorthands for split(...)
//   B(2,2,1) + 2*M(1|1,1)                    multisets; "0" is empty

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <ostream>

#include "nakayama/descriptors.hpp"

namespace nakayama {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position_(pos) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline std::string to_string(const Descriptor& d) {
  if (auto s = std::get_if<StringDescriptor>(&d))
    return std::string(1, type_letter(s->type)) + "(" + s->vertex.str() + "," +
           std::to_string(s->valleys) + ")";
  if (auto b = std::get_if<BandDescriptor>(&d))
    return "B(" + std::to_string(b->k) + "," + std::to_string(b->m) + "," + b->lambda.str() + ")";
  const auto& sp = std::get<SplitDescriptor>(d);
  const auto tag = [](const OneSidedModule& m) {
    return std::string(m.kind == ModuleKind::simple ? "S" : "P") +
           (m.side == Side::left ? "l" : "r") + ":" + std::to_string(m.vertex);
  };
  return "split(" + tag(sp.left) + "," + tag(sp.right) + ")";
}

inline std::string to_string(const Multiset& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : m.entries()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += to_string(d);
  }
  return out;
}

namespace detail {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  std::size_t pos() const { return base_ + pos_; }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(std::string_view s) {
    skip_space();
    return text_.substr(pos_, s.size()) == s;
  }
  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  long long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }
  Rational rational() {
    skip_space();
    const std::size_t start = pos_;
    integer();
    if (accept("/")) integer();
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos()); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

inline std::pair<long long, long long> vertex_pair(Cursor& c) {
  const long long i = c.integer();
  c.expect("|");
  const long long j = c.integer();
  return {i, j};
}

inline int small_int(Cursor& c, long long v, const char* what) {
  if (v < 0 || v > 1'000'000) c.fail(std::string(what) + " out of range");
  return static_cast<int>(v);
}

inline Descriptor parse_descriptor(Cursor& c, const AlgebraContext& ctx) {
  const std::size_t start = c.pos();
  try {
    if (c.accept("split(")) {
      OneSidedModule parts[2];
      for (int side = 0; side < 2; ++side) {
        if (side == 1) c.expect(",");
        ModuleKind kind;
        if (c.accept("S"))
          kind = ModuleKind::simple;
        else if (c.accept("P"))
          kind = ModuleKind::projective;
        else
          c.fail("expected S or P");
        c.expect(side == 0 ? "l:" : "r:");
        parts[side] = {side == 0 ? Side::left : Side::right, kind, 0};
        parts[side].vertex = ctx.wrap(c.integer());
      }
      c.expect(")");
      return make_split(parts[0].kind, parts[0].vertex, parts[1].kind, parts[1].vertex, ctx);
    }
    for (auto [name, left, right] :
         {std::tuple{"S0(", ModuleKind::simple, ModuleKind::projective},
          std::tuple{"N0(", ModuleKind::projective, ModuleKind::simple},
          std::tuple{"L(", ModuleKind::simple, ModuleKind::simple},
          std::tuple{"P(", ModuleKind::projective, ModuleKind::projective}}) {
      if (c.accept(name)) {
        auto [i, j] = vertex_pair(c);
        c.expect(")");
        return make_split(left, i, right, j, ctx);
      }
    }
    if (c.accept("B(")) {
      const long long k = c.integer();
      c.expect(",");
      const std::size_t mpos = c.pos();
      const long long m = c.integer();
      if (m < 1 || m > 1'000'000) throw ParseError("band size m must be positive", mpos);
      c.expect(",");
      const std::size_t lpos = c.pos();
      const Rational lambda = c.rational();
      if (lambda.is_zero()) throw ParseError("band parameter must be nonzero", lpos);
      c.expect(")");
      return make_band(k, static_cast<int>(m), lambda, ctx);
    }
    for (StringType t : {StringType::M, StringType::N, StringType::W, StringType::S}) {
      const char name[3] = {type_letter(t), '(', 0};
      if (c.accept(name)) {
        auto [i, j] = vertex_pair(c);
        c.expect(",");
        const int k = small_int(c, c.integer(), "valley count");
        c.expect(")");
        return make_string(t, i, j, k, ctx);
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), start);
  }
  c.fail("unknown descriptor");
}

}  // namespace detail

inline Descriptor parse_descriptor(std::string_view text, const AlgebraContext& ctx) {
  detail::Cursor c(text, 0);
  Descriptor d = detail::parse_descriptor(c, ctx);
  if (!c.done()) c.fail("trailing characters");
  return d;
}

inline Multiset parse_multiset(std::string_view text, const AlgebraContext& ctx) {
  detail::Cursor c(text, 0);
  Multiset m;
  if (c.accept("0")) {
    if (!c.done()) c.fail("trailing characters");
    return m;
  }
  do {
    long long count = 1;
    c.skip_space();
    if (c.peek("1") || c.peek("2") || c.peek("3") || c.peek("4") || c.peek("5") ||
        c.peek("6") || c.peek("7") || c.peek("8") || c.peek("9")) {
      count = c.integer();
      c.expect("*");
    }
    m.add(detail::parse_descriptor(c, ctx), count);
  } while (c.accept("+"));
  if (!c.done()) c.fail("trailing characters");
  return m;
}

inline std::ostream& operator<<(std::ostream& os, const Descriptor& d) { return os << to_string(d); }
inline std::ostream& operator<<(std::ostream& os, const Multiset& m) { return os << to_string(m); }

}  // namespace nakayama
