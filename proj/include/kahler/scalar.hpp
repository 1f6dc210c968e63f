#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <functional>
#include <iosfwd>
#include <iterator>
#include <string>

// Boost 1.74 probes every constructor argument for a byte container through
// C::const_iterator; Eigen 3.4 expressions declare const_iterator as void,
// which turns the probe into a hard error. Types without a usable iterator
// are simply not byte containers.
namespace boost::multiprecision::detail {
template <class C>
  requires(!requires { typename std::iterator_traits<typename C::const_iterator>::value_type; })
struct is_byte_container<C> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace kahler {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer. Expression templates are disabled so that
/// `auto` always yields a value.
using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

/// Exact complex number re + im*i with rational parts, i.e. an element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  /// |z|^2 = z * conj(z), always a nonnegative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re_), Rational(-a.im_)}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational conj(const GaussianRational& z) { return {z.real(), Rational(-z.imag())}; }
inline const Rational& real(const GaussianRational& z) { return z.real(); }
inline const Rational& imag(const GaussianRational& z) { return z.imag(); }
/// Eigen only needs abs() for pivot heuristics; exact code never calls it.
Rational abs2(const GaussianRational& z);

/// Integer power, exponent >= 0.
GaussianRational pow(const GaussianRational& z, unsigned e);

std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace kahler

namespace Eigen {

template <>
struct NumTraits<kahler::GaussianRational> : GenericNumTraits<kahler::GaussianRational> {
  using Real = kahler::GaussianRational;
  using NonInteger = kahler::GaussianRational;
  using Nested = kahler::GaussianRational;
  using Literal = kahler::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

template <>
struct NumTraits<kahler::BigInt> : GenericNumTraits<kahler::BigInt> {
  using Real = kahler::BigInt;
  using NonInteger = kahler::Rational;
  using Nested = kahler::BigInt;
  using Literal = kahler::BigInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 32
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

template <>
struct NumTraits<kahler::Rational> : GenericNumTraits<kahler::Rational> {
  using Real = kahler::Rational;
  using NonInteger = kahler::Rational;
  using Nested = kahler::Rational;
  using Literal = kahler::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

}  // namespace Eigen
