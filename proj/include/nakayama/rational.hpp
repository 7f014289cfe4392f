#pragma once

// Exact rational numbers with a machine-word fast path.
//
// Values that fit into a pair of int64 are stored inline; anything larger
// is promoted to a GMP rational and demoted again as soon as it fits.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nakayama {

class Rational {
 public:
  Rational() = default;
  Rational(int v) : num_(v) {}        // NOLINT(google-explicit-constructor)
  Rational(long v) : Rational(static_cast<long long>(v)) {}  // NOLINT
  Rational(long long v) {             // NOLINT(google-explicit-constructor)
    if (v == kMin) {
      promote(mpq_class(mpz_class(static_cast<long>(v))));
    } else {
      num_ = v;
    }
  }
  Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    assign(static_cast<__int128>(num), static_cast<__int128>(den));
  }
  explicit Rational(const mpq_class& q) { assign_big(q); }

  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    set_small(q, num_, den_);
    return q;
  }
  mpz_class numerator() const { return to_mpq().get_num(); }
  mpz_class denominator() const { return to_mpq().get_den(); }

  std::string str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        long long s;
        if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) {
          Rational r;
          r.num_ = s;
          return r;
        }
      }
      const __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                         static_cast<__int128>(b.num_) * a.den_;
      const __int128 d = static_cast<__int128>(a.den_) * b.den_;
      Rational r;
      r.assign(n, d);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      if (a.den_ == 1 && b.den_ == 1) {
        long long p;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != kMin) {
          Rational r;
          r.num_ = p;
          return r;
        }
      }
      const long long g1 = std::gcd(a.num_, b.den_);
      const long long g2 = std::gcd(b.num_, a.den_);
      const __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
      const __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
      Rational r;
      r.assign_reduced(n, d);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return a * b.inverse();
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    Rational r;
    if (num_ < 0) {
      r.num_ = -den_;
      r.den_ = -num_;
    } else {
      r.num_ = den_;
      r.den_ = num_;
    }
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value is big iff it does not fit
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      const __int128 l = static_cast<__int128>(a.num_) * b.den_;
      const __int128 r = static_cast<__int128>(b.num_) * a.den_;
      return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  std::size_t hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    return std::hash<long long>{}(num_) * 31u ^ std::hash<long long>{}(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static constexpr long long kMin = std::numeric_limits<long long>::min();
  static constexpr long long kMax = std::numeric_limits<long long>::max();

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static bool fits(__int128 v) { return v <= kMax && v >= -kMax; }

  static mpz_class to_mpz(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }

  static void set_small(mpq_class& q, long long n, long long d) {
    q.get_num() = mpz_class(static_cast<long>(n));
    q.get_den() = mpz_class(static_cast<long>(d));
  }

  void assign(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    assign_reduced(n, d);
  }

  void assign_reduced(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<long long>(n);
      den_ = static_cast<long long>(d);
      big_.reset();
      return;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    assign_big(q);
  }

  void assign_big(mpq_class q) {
    q.canonicalize();
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
        q.get_num().get_si() != kMin) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
      big_.reset();
      return;
    }
    promote(std::move(q));
  }

  void promote(mpq_class q) {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

inline Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto trim = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(mpq_class(n, d));
}

}  // namespace nakayama

template <>
struct std::hash<nakayama::Rational> {
  std::size_t operator()(const nakayama::Rational& r) const noexcept { return r.hash(); }
};
