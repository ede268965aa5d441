// Copyright 2026 The t2fuzzy Authors
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

// Exact rational scalars and the unit-interval strong type.

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <compare>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace t2fuzzy {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Structurally malformed input: unsorted breakpoints, bad rational text,
/// values outside [0,1], wrong array lengths.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed argument outside an operation's domain (e.g. a non-normal
/// function passed where a member of L is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw ValidationError("zero denominator");
  return Rational(num) / Rational(den);
}

inline Integer numerator_of(const Rational& r) {
  return Integer(boost::multiprecision::numerator(r));
}
inline Integer denominator_of(const Rational& r) {
  return Integer(boost::multiprecision::denominator(r));
}

/// Largest integer <= r.
inline Integer floor_of(const Rational& r) {
  Integer num = numerator_of(r);
  Integer den = denominator_of(r);
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

/// Smallest integer >= r.
inline Integer ceil_of(const Rational& r) { return -floor_of(-r); }

/// Always "p/q" with q >= 1, so the text form is canonical.
inline std::string to_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Fifteen significant digits, for spreadsheet use.
inline std::string to_decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", r.convert_to<double>());
  return buf;
}

/// Accepts "p/q", "p", and plain decimals such as "0.75" (optionally signed).
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  };
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  // GMP reads a leading 0 as an octal prefix, so strip leading zeros.
  auto integer = [](std::string_view digits) {
    auto nz = digits.find_first_not_of('0');
    return Integer{nz == std::string_view::npos ? std::string("0") : std::string(digits.substr(nz))};
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    Integer d = integer(den);
    if (d == 0) return fail();
    result = Rational(integer(num)) / Rational(d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !all_digits(whole)) return fail();
    if (!frac.empty() && !all_digits(frac)) return fail();
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer digits = integer(std::string(whole) + std::string(frac));
    result = Rational(digits) / Rational(scale);
  } else {
    if (!all_digits(body)) return fail();
    result = Rational(integer(body));
  }
  return negative ? Rational(-result) : result;
}

/// An exact rational constrained to the unit interval I = [0,1].
class UnitScalar {
 public:
  UnitScalar() = default;
  explicit UnitScalar(Rational value) : value_(std::move(value)) {
    if (value_ < 0 || value_ > 1)
      throw DomainError("value " + to_string(value_) + " outside [0,1]");
  }
  UnitScalar(long long num, long long den) : UnitScalar(make_rational(num, den)) {}

  static UnitScalar zero() { return UnitScalar(); }
  static UnitScalar one() { return UnitScalar(Rational(1)); }

  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }

  UnitScalar complement() const { return UnitScalar(Rational(1 - value_)); }

  friend bool operator==(const UnitScalar& a, const UnitScalar& b) {
    return a.value_ == b.value_;
  }
  friend auto operator<=>(const UnitScalar& a, const UnitScalar& b) {
    return a.value_ < b.value_   ? std::strong_ordering::less
           : a.value_ > b.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

inline const UnitScalar& meet(const UnitScalar& a, const UnitScalar& b) { return b < a ? b : a; }
inline const UnitScalar& join(const UnitScalar& a, const UnitScalar& b) { return a < b ? b : a; }

inline std::string to_string(const UnitScalar& u) { return to_string(u.value()); }

}  // namespace t2fuzzy
