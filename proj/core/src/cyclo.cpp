#include "p3hc/cyclo.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace p3hc {

double Cyclo::y() const {
  static const double sin36 = std::sqrt((3.0 - (1.0 + std::sqrt(5.0)) / 2.0) / 4.0);
  return imag_coeff().to_double() * sin36;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& z) {
  os << "(" << z.a[0];
  for (int i = 1; i < 4; ++i) os << "," << z.a[i];
  return os << ")";
}

}  // namespace p3hc
