#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

namespace p3hc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact element of Q(sqrt 5), stored as p + q*phi where phi = (1+sqrt5)/2.
// Closure under multiplication comes from phi^2 = 1 + phi, so no floating
// point enters any arithmetic or comparison.
class Golden {
 public:
  Golden() = default;
  Golden(long v) : p_(v) {}  // NOLINT: implicit by design, enables 2 - phi()
  Golden(Rational v) : p_(std::move(v)) {}
  Golden(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  static Golden phi() { return {0, 1}; }
  // Builds a + b*sqrt5 as an element of Z[phi]: a - b + 2b*phi.
  static Golden from_sqrt5(const Rational& a, const Rational& b) {
    return {a - b, 2 * b};
  }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  bool is_rational() const { return q_.is_zero(); }

  Golden operator-() const { return {-p_, -q_}; }
  Golden& operator+=(const Golden& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  Golden& operator-=(const Golden& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  Golden& operator*=(const Golden& o) {
    // (p + q phi)(P + Q phi) = pP + qQ + (pQ + qP + qQ) phi
    Rational cross = p_ * o.q_ + q_ * o.p_;
    Rational qq = q_ * o.q_;
    p_ = p_ * o.p_ + qq;
    q_ = std::move(cross) + std::move(qq);
    return *this;
  }

  friend Golden operator+(Golden a, const Golden& b) { return a += b; }
  friend Golden operator-(Golden a, const Golden& b) { return a -= b; }
  friend Golden operator*(Golden a, const Golden& b) { return a *= b; }

  // Galois conjugate (sqrt5 -> -sqrt5, i.e. phi -> 1 - phi).
  Golden conj() const { return {p_ + q_, -q_}; }
  // Field norm x * conj(x); rational, zero iff x is zero.
  Rational field_norm() const { return p_ * p_ + p_ * q_ - q_ * q_; }

  Golden inverse() const;
  friend Golden operator/(const Golden& a, const Golden& b) {
    return a * b.inverse();
  }

  // Exact sign. Writes the value as a + b*sqrt5 and, when the two parts
  // disagree in sign, settles it by comparing a^2 against 5 b^2.
  int sign() const {
    if (q_.is_zero()) return p_.sign();
    Rational a = p_ + q_ / 2;  // value = a + (q/2) sqrt5
    int sa = a.sign();
    int sb = q_.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational a2 = a * a;
    Rational b2 = 5 * (q_ / 2) * (q_ / 2);
    return a2 > b2 ? sa : sb;  // equality impossible: sqrt5 is irrational
  }

  friend bool operator==(const Golden& a, const Golden& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Golden& a, const Golden& b) {
    int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const;
  std::string str() const;

 private:
  Rational p_, q_;
};

std::ostream& operator<<(std::ostream& os, const Golden& g);

}  // namespace p3hc
