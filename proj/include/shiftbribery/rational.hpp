#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace shiftbribery {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Nonnegative rational extended with a single +infinity sentinel.
/// Used for prices and costs; infinity means "shift not purchasable".
class ExtRational {
 public:
  ExtRational() : inf_(false), value_(0) {}
  ExtRational(const Rational& v) : inf_(false), value_(v) {}  // NOLINT(google-explicit-constructor)
  ExtRational(long long v) : inf_(false), value_(v) {}        // NOLINT(google-explicit-constructor)

  static ExtRational infinity() {
    ExtRational r;
    r.inf_ = true;
    return r;
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }

  /// Finite value; throws on infinity.
  const Rational& value() const {
    if (inf_) throw std::domain_error("ExtRational: value() on infinity");
    return value_;
  }

  ExtRational operator+(const ExtRational& o) const {
    if (inf_ || o.inf_) return infinity();
    return ExtRational(value_ + o.value_);
  }
  ExtRational& operator+=(const ExtRational& o) {
    *this = *this + o;
    return *this;
  }

  // Infinity compares greater than every finite value and equal to itself.
  bool operator==(const ExtRational& o) const {
    if (inf_ != o.inf_) return false;
    return inf_ || value_ == o.value_;
  }
  bool operator!=(const ExtRational& o) const { return !(*this == o); }
  bool operator<(const ExtRational& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return value_ < o.value_;
  }
  bool operator<=(const ExtRational& o) const { return *this < o || *this == o; }
  bool operator>(const ExtRational& o) const { return o < *this; }
  bool operator>=(const ExtRational& o) const { return o <= *this; }

 private:
  bool inf_;
  Rational value_;
};

/// Canonical text form: "p/q" in lowest terms, "p" for integers, "inf".
std::string to_string(const ExtRational& x);
std::string to_string(const Rational& x);

/// Parses "p", "p/q", "inf", or a plain decimal like "0.25" (exact).
Rational parse_rational(const std::string& text);
ExtRational parse_ext_rational(const std::string& text);

/// Floor of sqrt(k) for k >= 0.
long long isqrt(long long k);

std::ostream& operator<<(std::ostream& os, const ExtRational& x);

}  // namespace shiftbribery
