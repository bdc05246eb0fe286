#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "ucf/error.hpp"

namespace ucf {

/// Exact rational with 64-bit numerator and denominator, always reduced and
/// with a positive denominator. Intermediate products are carried in 128 bits;
/// a result that does not fit back into 64 bits raises ErrorCode::Overflow.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() = default;
  constexpr Rational(int_type value) : num_(value) {}  // NOLINT: implicit by design of arithmetic use
  Rational(int_type num, int_type den) { assign(num, den); }

  [[nodiscard]] constexpr int_type num() const noexcept { return num_; }
  [[nodiscard]] constexpr int_type den() const noexcept { return den_; }
  [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

  /// Largest integer not above the value.
  [[nodiscard]] int_type floor() const noexcept {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  [[nodiscard]] int_type ceil() const noexcept { return -Rational(-num_, den_).floor(); }

  [[nodiscard]] std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Accepts "p/q", "p" or "-p/q".
  static Rational parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> int_type {
      if (s.empty()) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
      std::size_t pos = 0;
      bool neg = false;
      if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        pos = 1;
      }
      if (pos == s.size()) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
      __int128 v = 0;
      for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
          throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
        v = v * 10 + (s[pos] - '0');
        if (v > INT64_MAX) throw Error(ErrorCode::Overflow, "rational literal too large");
      }
      return static_cast<int_type>(neg ? -v : v);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::ZeroDenominator, "division by zero rational");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void assign(__int128 num, __int128 den) {
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    if (num > INT64_MAX || num < -INT64_MAX || den > INT64_MAX)
      throw Error(ErrorCode::Overflow, "rational does not fit in 64 bits");
    num_ = static_cast<int_type>(num);
    den_ = static_cast<int_type>(den);
  }

  static Rational from_wide(__int128 num, __int128 den) {
    Rational r;
    r.assign(num, den);
    return r;
  }

  int_type num_ = 0;
  int_type den_ = 1;
};

}  // namespace ucf
