#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace doflab {

// Exact rational arithmetic on 64-bit integers. Values are kept in lowest
// terms with a positive denominator, and every operation checks that the
// reduced result still fits in 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integer by design
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    __int128 nn = n;
    __int128 dd = d;
    if (dd < 0) {
      nn = -nn;
      dd = -dd;
    }
    assign_reduced(nn, dd);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Largest integer <= value. Well-defined for negative values too.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_raw(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_raw(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_raw(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_raw(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = i128(a.num_) * b.den_;
    __int128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
      return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1)));
  }

 private:
  using i128 = __int128;

  static std::int64_t parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty numeral");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("Rational: bare sign");
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("Rational: bad numeral '" + std::string(s) + "'");
      i128 next = i128(v) * 10 + (s[i] - '0');
      v = narrow(next);
    }
    return s[0] == '-' ? -v : v;
  }

  static std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("Rational: 64-bit overflow");
    return static_cast<std::int64_t>(v);
  }

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_raw(i128 n, i128 d) {
    Rational r;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    r.assign_reduced(n, d);
    return r;
  }

  void assign_reduced(i128 n, i128 d) {
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
    num_ = narrow(n);
    den_ = narrow(d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A point in the (d1, d2) plane with exact coordinates.
struct RatPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RatPoint&, const RatPoint&) = default;
  friend std::strong_ordering operator<=>(const RatPoint& a, const RatPoint& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

}  // namespace doflab
