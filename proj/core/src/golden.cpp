#include "p3hc/golden.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace p3hc {

Golden Golden::inverse() const {
  Rational n = field_norm();
  if (n.is_zero()) throw std::domain_error("Golden: inverse of zero");
  Golden c = conj();
  return {c.p_ / n, c.q_ / n};
}

double Golden::to_double() const {
  // Evaluate a + b*sqrt5 in 50-digit floats so that cancellation between
  // large p and q cannot poison the double result.
  using F = boost::multiprecision::cpp_bin_float_50;
  static const F sqrt5 = sqrt(F(5));
  F a = F(p_) + F(q_) / 2;
  F b = F(q_) / 2;
  return static_cast<double>(a + b * sqrt5);
}

std::string Golden::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Golden& g) {
  if (g.q().is_zero()) return os << g.p();
  if (!g.p().is_zero()) os << g.p() << (g.q().sign() > 0 ? "+" : "");
  if (g.q() == 1) return os << "phi";
  if (g.q() == -1) return os << "-phi";
  return os << g.q() << "*phi";
}

}  // namespace p3hc
