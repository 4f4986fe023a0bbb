#include "randcx/rational.hpp"

#include <stdexcept>

namespace randcx {

Rational::Rational(BigInt numerator, BigInt denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

double Rational::to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  BigInt lhs = x.num_ * y.den_;
  BigInt rhs = y.num_ * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational operator+(const Rational& x, const Rational& y) { return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_}; }
Rational operator-(const Rational& x, const Rational& y) { return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_}; }
Rational operator*(const Rational& x, const Rational& y) { return {x.num_ * y.num_, x.den_ * y.den_}; }
Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw std::domain_error("division by zero rational");
  return {x.num_ * y.den_, x.den_ * y.num_};
}

}  // namespace randcx
