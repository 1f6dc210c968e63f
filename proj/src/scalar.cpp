#include "kahler/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kahler {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num) / Rational(den);
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << mp::numerator(q);
  if (mp::denominator(q) != 1) os << '/' << mp::denominator(q);
  return os.str();
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("GaussianRational division by zero");
  // a / b = a * conj(b) / |b|^2
  *this *= conj(o);
  re_ /= n;
  im_ /= n;
  return *this;
}

Rational abs2(const GaussianRational& z) { return z.norm(); }

GaussianRational pow(const GaussianRational& z, unsigned e) {
  GaussianRational result(1);
  GaussianRational base = z;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string to_string(const GaussianRational& z) {
  if (z.imag().is_zero()) return to_string(z.real());
  std::string im;
  if (z.imag() == 1) {
    im = "i";
  } else if (z.imag() == -1) {
    im = "-i";
  } else {
    im = to_string(z.imag()) + "i";
  }
  if (z.real().is_zero()) return im;
  if (z.imag() > 0) return to_string(z.real()) + "+" + im;
  return to_string(z.real()) + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

}  // namespace kahler
