#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace apap {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar with arbitrary-precision numerator and denominator.
/// Always stored reduced with positive denominator, so equality is
/// structural equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  // Accepts "p" or "p/q" with an optional leading sign on p.
  static Rational parse(std::string_view text) {
    const std::string_view original = text;
    auto fail = [&original]() -> Rational {
      throw std::invalid_argument("invalid rational: '" +
                                  std::string(original) + "'");
    };
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
      negative = text.front() == '-';
      text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    if (num_part.empty() || !all_digits(num_part)) return fail();
    BigInt num{std::string(num_part)};
    if (negative) num = -num;
    if (slash == std::string_view::npos) return Rational(std::move(num));
    const std::string_view den_part = text.substr(slash + 1);
    if (den_part.empty() || !all_digits(den_part)) return fail();
    BigInt den{std::string(den_part)};
    return Rational(std::move(num), std::move(den));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  friend Rational operator-(const Rational& a) {
    return Rational(-a.num_, a.den_, reduced_tag{});
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  struct reduced_tag {};
  Rational(BigInt n, BigInt d, reduced_tag)
      : num_(std::move(n)), den_(std::move(d)) {}

  static bool all_digits(std::string_view s) {
    for (const char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

inline Rational half(const Rational& r) { return r / Rational(2); }

}  // namespace apap
