#pragma once

// Exact rational scalar used for slopes, Toledo invariants and stability
// parameters. Always stored in lowest terms with a positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace higgsatlas {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : num_(n), den_(1) {}       // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational abs() const { return num_ >= 0 ? *this : -*this; }

  // Valid only when den == 1.
  Int as_integer() const {
    if (den_ != 1) throw std::logic_error("Rational: not an integer: " + str());
    return num_;
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
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
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "num/den" in lowest terms, "num" when den == 1.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const Int g = higgsatlas::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;
};

inline Int floor_int(const Rational& r) {
  // den > 0; truncation of cpp_int division is toward zero.
  if (r.num() >= 0) return r.num() / r.den();
  return -((-r.num() + r.den() - 1) / r.den());
}

inline Int ceil_int(const Rational& r) { return -floor_int(-r); }

}  // namespace higgsatlas
