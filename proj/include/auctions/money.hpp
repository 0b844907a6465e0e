// Copyright 2026 The Auctions Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace auctions {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational amount of money. All arithmetic is exact; the stored
/// fraction is always in lowest terms with a positive denominator, so
/// budget-balance checks are bit-exact equalities.
class Money {
 public:
  Money() : v_(0) {}
  Money(int n) : v_(n) {}                 // NOLINT: implicit by design
  Money(long long n) : v_(n) {}           // NOLINT
  Money(BigRational v) : v_(std::move(v)) {}
  Money(long long num, long long den) : v_(BigRational(num, den)) {
    if (den == 0) throw std::invalid_argument("Money: zero denominator");
  }

  /// Parses "17", "-6.5", ".25" or "13/2". Decimal strings parse exactly.
  static Money parse(std::string_view s);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_integer() const { return denominator() == 1; }
  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  const BigRational& value() const { return v_; }
  double to_double() const { return v_.convert_to<double>(); }

  /// Exact textual form: an integer, a terminating decimal when one
  /// exists (denominator 2^a*5^b), otherwise "p/q".
  std::string to_string() const;

  /// Decimal rendering with at most `max_frac` fractional digits,
  /// rounded half away from zero by exact integer division. Used for
  /// CSV cells where a fixed deterministic format matters more than
  /// exactness.
  std::string to_decimal(int max_frac) const;

  Money operator-() const { return Money(-v_); }
  Money& operator+=(const Money& o) { v_ += o.v_; return *this; }
  Money& operator-=(const Money& o) { v_ -= o.v_; return *this; }
  Money& operator*=(const Money& o) { v_ *= o.v_; return *this; }
  Money& operator/=(const Money& o) {
    if (o.is_zero()) throw std::domain_error("Money: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Money operator+(Money a, const Money& b) { return a += b; }
  friend Money operator-(Money a, const Money& b) { return a -= b; }
  friend Money operator*(Money a, const Money& b) { return a *= b; }
  friend Money operator/(Money a, const Money& b) { return a /= b; }
  friend bool operator==(const Money& a, const Money& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Money& a, const Money& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigRational v_;
};

inline Money abs(const Money& m) { return m.sign() < 0 ? -m : m; }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

inline Money Money::parse(std::string_view s) {
  const std::string_view original = s;
  auto fail = [&original]() -> Money {
    throw std::invalid_argument("Money: cannot parse '" + std::string(original) + "'");
  };

  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  BigInt num;
  BigInt den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view p = s.substr(0, slash);
    std::string_view q = s.substr(slash + 1);
    if (!detail::all_digits(p) || !detail::all_digits(q)) return fail();
    num = BigInt(std::string(p));
    den = BigInt(std::string(q));
    if (den == 0) return fail();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !detail::all_digits(whole)) return fail();
    if (!frac.empty() && !detail::all_digits(frac)) return fail();
    num = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (!detail::all_digits(s)) return fail();
    num = BigInt(std::string(s));
  }
  if (negative) num = -num;
  return Money(BigRational(num, den));
}

inline std::string Money::to_string() const {
  BigInt num = numerator();
  BigInt den = denominator();
  if (den == 1) return num.str();

  // Terminating decimal exists iff den = 2^a * 5^b.
  BigInt d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();

  int shift = twos > fives ? twos : fives;
  BigInt scale = 1;
  for (int i = 0; i < shift; ++i) scale *= 10;
  BigInt scaled = num * (scale / den);
  bool neg = scaled < 0;
  std::string digits = (neg ? BigInt(-scaled) : scaled).str();
  if (static_cast<int>(digits.size()) <= shift) {
    digits.insert(0, shift + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - shift, ".");
  return (neg ? "-" : "") + digits;
}

inline std::string Money::to_decimal(int max_frac) const {
  BigInt scale = 1;
  for (int i = 0; i < max_frac; ++i) scale *= 10;
  BigInt num = numerator() * scale;
  BigInt den = denominator();
  BigInt q = num / den;
  BigInt r = num % den;
  if (r < 0) r = -r;
  if (2 * r >= den) q += q < 0 ? -1 : 1;
  if (q == 0 && num < 0) {
    // Sign carried by the fraction alone.
  }
  bool neg = q < 0;
  std::string digits = (neg ? BigInt(-q) : q).str();
  if (static_cast<int>(digits.size()) <= max_frac) {
    digits.insert(0, max_frac + 1 - digits.size(), '0');
  }
  if (max_frac > 0) {
    digits.insert(digits.size() - max_frac, ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  return (neg ? "-" : "") + digits;
}

}  // namespace auctions
