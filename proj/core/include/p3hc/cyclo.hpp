#pragma once

#include "p3hc/golden.hpp"

#include <boost/functional/hash.hpp>

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>

namespace p3hc {

// Point of Z[zeta], zeta = exp(2*pi*i/5), written a0 + a1 z + a2 z^2 + a3 z^3
// over the basis {1, zeta, zeta^2, zeta^3}; zeta^4 = -(1+zeta+zeta^2+zeta^3).
// Every vertex of every tiling generation lives in this ring, so all geometry
// stays in integer arithmetic.
class Cyclo {
 public:
  std::array<BigInt, 4> a{};

  Cyclo() = default;
  Cyclo(BigInt a0, BigInt a1, BigInt a2, BigInt a3)
      : a{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  static Cyclo one() { return {1, 0, 0, 0}; }
  // zeta^k for any integer k (k mod 5; the power 4 is expanded in the basis).
  static Cyclo zeta(int k) {
    k = ((k % 5) + 5) % 5;
    if (k == 4) return {-1, -1, -1, -1};
    Cyclo z;
    z.a[k] = 1;
    return z;
  }

  bool is_zero() const {
    return a[0].is_zero() && a[1].is_zero() && a[2].is_zero() && a[3].is_zero();
  }

  Cyclo operator-() const { return {-a[0], -a[1], -a[2], -a[3]}; }
  Cyclo& operator+=(const Cyclo& o) {
    for (int i = 0; i < 4; ++i) a[i] += o.a[i];
    return *this;
  }
  Cyclo& operator-=(const Cyclo& o) {
    for (int i = 0; i < 4; ++i) a[i] -= o.a[i];
    return *this;
  }
  friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
  friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
  friend Cyclo operator*(const BigInt& s, const Cyclo& z) {
    return {s * z.a[0], s * z.a[1], s * z.a[2], s * z.a[3]};
  }

  // Ring product, reduced by zeta^4 = -(1+...+zeta^3), zeta^5 = 1.
  friend Cyclo operator*(const Cyclo& x, const Cyclo& y) {
    std::array<BigInt, 7> p{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) p[i + j] += x.a[i] * y.a[j];
    Cyclo r;
    r.a[0] = p[0] + p[5] - p[4];
    r.a[1] = p[1] + p[6] - p[4];
    r.a[2] = p[2] - p[4];
    r.a[3] = p[3] - p[4];
    return r;
  }

  // Multiplication by zeta: a shift in the basis.
  Cyclo mul_zeta() const { return {-a[3], a[0] - a[3], a[1] - a[3], a[2] - a[3]}; }

  // Rotation by k*36 degrees about the origin: multiplication by (-zeta^3)^k,
  // carried out as (-1)^k times a zeta-shift. Exact and cheap.
  Cyclo rot(int k) const {
    k = ((k % 10) + 10) % 10;
    Cyclo r = *this;
    int shifts = (3 * k) % 5;
    for (int i = 0; i < shifts; ++i) r = r.mul_zeta();
    return (k % 2) ? -r : r;
  }

  // Complex conjugation (reflection across the real axis): zeta -> zeta^4.
  Cyclo conj() const {
    return {a[0] - a[1], -a[1], a[3] - a[1], a[2] - a[1]};
  }

  // Scaling by phi = -zeta^2 - zeta^3 stays inside the ring, as does the
  // inverse scaling by 1/phi = phi - 1.
  Cyclo mul_phi() const {
    Cyclo z2 = mul_zeta().mul_zeta();
    return -(z2 + z2.mul_zeta());
  }
  Cyclo mul_inv_phi() const { return mul_phi() - *this; }

  // Exact squared modulus. With c_d = sum_j a_j a_{j+d mod 5} (a4 = 0),
  // |z|^2 = (c0 - c1) + (c1 - c2) phi.
  Golden norm2() const {
    std::array<BigInt, 5> ext{a[0], a[1], a[2], a[3], 0};
    std::array<BigInt, 3> c{};
    for (int d = 0; d < 3; ++d)
      for (int j = 0; j < 5; ++j) c[d] += ext[j] * ext[(j + d) % 5];
    return {Rational(c[0] - c[1]), Rational(c[1] - c[2])};
  }

  // Cartesian coordinates. x is exact in (1/2)Z[phi]; y equals sin36 times an
  // exact element of Z[phi], so sign predicates never need the sin36 factor.
  Golden real_part() const {
    return {Rational(2 * a[0] - a[1]) / 2, Rational(a[1] - a[2] - a[3]) / 2};
  }
  Golden imag_coeff() const { return {Rational(a[2] - a[3]), Rational(a[1])}; }

  double x() const { return real_part().to_double(); }
  double y() const;

  friend bool operator==(const Cyclo& x, const Cyclo& y) { return x.a == y.a; }
  friend bool operator!=(const Cyclo& x, const Cyclo& y) { return !(x == y); }
  // Deterministic total order (lexicographic on coordinates), used to pick
  // canonical roots and stable output orderings.
  friend bool operator<(const Cyclo& x, const Cyclo& y) {
    for (int i = 0; i < 4; ++i) {
      if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
    }
    return false;
  }

  friend std::size_t hash_value(const Cyclo& z) {
    std::size_t seed = 0;
    for (const auto& c : z.a) boost::hash_combine(seed, c);
    return seed;
  }

  std::string str() const;
};

struct CycloHash {
  std::size_t operator()(const Cyclo& z) const { return hash_value(z); }
};

// cross(u, v) / sin36: same sign as the true 2D cross product u x v.
inline Golden cross_coeff(const Cyclo& u, const Cyclo& v) {
  return u.real_part() * v.imag_coeff() - v.real_part() * u.imag_coeff();
}

// Exact dot product; sin36^2 = (3 - phi)/4 closes it over Q(phi).
inline Golden dot_exact(const Cyclo& u, const Cyclo& v) {
  static const Golden sin36_sq{Rational(3, 4), Rational(-1, 4)};
  return u.real_part() * v.real_part() +
         u.imag_coeff() * v.imag_coeff() * sin36_sq;
}

// Strict angular order on nonzero direction vectors, angles taken in [0, 2pi)
// from the positive x axis. Collinear same-sense rays compare equal.
inline bool ccw_less(const Cyclo& d1, const Cyclo& d2) {
  auto upper = [](const Cyclo& d) {
    int iy = d.imag_coeff().sign();
    return iy > 0 || (iy == 0 && d.real_part().sign() > 0);
  };
  bool u1 = upper(d1), u2 = upper(d2);
  if (u1 != u2) return u1;
  return cross_coeff(d1, d2).sign() > 0;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& z);

}  // namespace p3hc
