#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "ucycle/error.hpp"

namespace ucycle {

// Exact nonnegative counts. Denominators such as C(k^n, s) quickly outgrow 64 bits.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& v) { return v.str(); }

// C(m, r) with the zero convention: 0 whenever r < 0, r > m or m < 0.
inline BigCount binomial(std::int64_t m, std::int64_t r) {
  if (m < 0 || r < 0 || r > m) return 0;
  if (r > m - r) r = m - r;
  BigCount acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc *= m - r + i;
    acc /= i;
  }
  return acc;
}

inline BigCount power(std::int64_t base, int exp) {
  BigCount acc = 1;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

inline BigCount factorial(std::int64_t m) {
  BigCount acc = 1;
  for (std::int64_t i = 2; i <= m; ++i) acc *= i;
  return acc;
}

// Reduced fraction with a positive denominator.
class ExactRational {
 public:
  ExactRational() : num_(0), den_(1) {}
  ExactRational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT: implicit by design of arithmetic
  ExactRational(BigCount v) : num_(std::move(v)), den_(1) {}  // NOLINT
  ExactRational(BigCount num, BigCount den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw InvalidArgument("ExactRational: zero denominator");
    normalize();
  }

  const BigCount& numerator() const { return num_; }
  const BigCount& denominator() const { return den_; }

  // "p/q", or just "p" when the value is an integer ("0", "1").
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  // Accepts "p", "-p" and "p/q"; the result is reduced.
  static ExactRational parse(std::string_view text) {
    auto parse_int = [&](std::string_view t) -> BigCount {
      if (t.empty()) throw InvalidArgument("ExactRational: empty integer in '" + std::string(text) + "'");
      std::size_t i = (t[0] == '-') ? 1 : 0;
      if (i == t.size()) throw InvalidArgument("ExactRational: bad integer '" + std::string(t) + "'");
      for (std::size_t j = i; j < t.size(); ++j)
        if (t[j] < '0' || t[j] > '9')
          throw InvalidArgument("ExactRational: bad integer '" + std::string(t) + "'");
      return BigCount(std::string(t));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRational(parse_int(text));
    return ExactRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.num_ == 0) throw InvalidArgument("ExactRational: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    BigCount lhs = a.num_ * b.den_;
    BigCount rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigCount g = boost::multiprecision::gcd(num_ < 0 ? BigCount(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigCount num_;
  BigCount den_;
};

}  // namespace ucycle
