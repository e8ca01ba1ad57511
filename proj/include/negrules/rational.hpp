#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "negrules/error.hpp"

namespace negrules {

/// Exact rational number with a 64-bit numerator and positive denominator,
/// always kept in lowest terms. Intermediate products use 128-bit integers;
/// a result that does not fit back into 64 bits throws std::overflow_error
/// instead of silently wrapping.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() noexcept = default;
  constexpr Rational(int_type value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int_type num, int_type den) { assign(num, den); }

  [[nodiscard]] constexpr int_type num() const noexcept { return num_; }
  [[nodiscard]] constexpr int_type den() const noexcept { return den_; }

  [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] constexpr bool is_negative() const noexcept { return num_ < 0; }

  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  [[nodiscard]] Rational abs() const noexcept {
    Rational r = *this;
    if (r.num_ < 0) r.num_ = -r.num_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::DivisionUndefined, "division by zero");
    return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }
  friend Rational operator-(const Rational& a) { return Rational(0) - a; }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    // Denominators are positive, so cross multiplication preserves order.
    return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
  }

  /// Parses "0.52", "-1.5", ".5", "3", or "1/3" exactly.
  static Rational parse(std::string_view text);

  /// Decimal rendering with at most `significant` significant digits,
  /// rounded half away from zero, trailing zeros trimmed.
  [[nodiscard]] std::string to_decimal(int significant = 12) const;

  /// "num/den", or just "num" when the denominator is 1.
  [[nodiscard]] std::string to_fraction() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_fraction();
  }

 private:
  using wide_type = __int128;

  static constexpr wide_type wide(int_type v) noexcept { return static_cast<wide_type>(v); }

  static wide_type wide_abs(wide_type v) noexcept { return v < 0 ? -v : v; }

  static wide_type wide_gcd(wide_type a, wide_type b) noexcept {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
      wide_type t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(wide_type num, wide_type den) {
    if (den == 0) throw Error(ErrorCode::DivisionUndefined, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    wide_type g = wide_gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr wide_type lo = INT64_MIN;
    constexpr wide_type hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) {
      throw std::overflow_error("rational value exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<int_type>(num);
    r.den_ = static_cast<int_type>(den);
    return r;
  }

  void assign(int_type num, int_type den) { *this = from_wide(num, den); }

  int_type num_ = 0;
  int_type den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::InvalidThreshold, "not a number: '" + std::string(text) + "'");
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_decimal = [&](std::string_view s) -> Rational {
    s = trim(s);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) return fail();
    wide_type num = 0;
    wide_type den = 1;
    bool seen_point = false;
    bool seen_digit = false;
    for (char c : s) {
      if (c == '.') {
        if (seen_point) return fail();
        seen_point = true;
        continue;
      }
      if (c < '0' || c > '9') return fail();
      seen_digit = true;
      num = num * 10 + (c - '0');
      if (seen_point) den *= 10;
      if (num > INT64_MAX || den > INT64_MAX) {
        throw Error(ErrorCode::InvalidThreshold, "too many digits: '" + std::string(text) + "'");
      }
    }
    if (!seen_digit) return fail();
    return from_wide(negative ? -num : num, den);
  };

  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  Rational n = parse_decimal(text.substr(0, slash));
  Rational d = parse_decimal(text.substr(slash + 1));
  if (d.is_zero()) return fail();
  return n / d;
}

inline std::string Rational::to_decimal(int significant) const {
  if (num_ == 0) return "0";
  if (significant < 1) significant = 1;
  const auto sig = static_cast<std::size_t>(significant);
  const wide_type d = den_;
  wide_type n = wide_abs(wide(num_));

  std::string digits = std::to_string(static_cast<unsigned long long>(n / d));
  std::size_t point = digits.size();
  wide_type rem = n % d;

  auto significant_count = [&] {
    std::size_t first = digits.find_first_not_of('0');
    return first == std::string::npos ? std::size_t{0} : digits.size() - first;
  };
  // One digit beyond the requested precision decides the rounding.
  while (rem != 0 && significant_count() < sig + 1) {
    rem *= 10;
    digits.push_back(static_cast<char>('0' + static_cast<int>(rem / d)));
    rem %= d;
  }

  if (significant_count() > sig) {
    std::size_t cut = digits.find_first_not_of('0') + sig;
    bool round_up = digits[cut] >= '5';
    for (std::size_t i = cut; i < digits.size(); ++i) digits[i] = '0';
    for (std::size_t i = cut; round_up && i > 0; --i) {
      char& c = digits[i - 1];
      if (c == '9') {
        c = '0';
      } else {
        ++c;
        round_up = false;
      }
    }
    if (round_up) {
      digits.insert(digits.begin(), '1');
      ++point;
    }
  }

  std::string ip = digits.substr(0, point);
  std::string fp = digits.substr(point);
  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  std::size_t nz = ip.find_first_not_of('0');
  ip = nz == std::string::npos ? "0" : ip.substr(nz);
  std::string out = num_ < 0 ? "-" + ip : ip;
  if (!fp.empty()) out += "." + fp;
  return out;
}

}  // namespace negrules
