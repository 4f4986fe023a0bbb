#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace randcx {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(BigInt numerator, BigInt denominator = 1);  // NOLINT(google-explicit-constructor)
  Rational(long long numerator, long long denominator) : Rational(BigInt(numerator), BigInt(denominator)) {}

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  double to_double() const;
  // "p/q", or "p" when q == 1.
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

}  // namespace randcx
