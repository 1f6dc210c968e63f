#pragma once

#include "kahler/scalar.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace kahler {

/// c_0 + c_1 t + ... with trailing zeros trimmed; the zero polynomial has no
/// coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of t^k; zero past the end.
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

std::string to_string(const IntPolynomial& p);

/// Morse indices of the critical points of a Morse function, with their
/// critical values when known.
struct MorseProfile {
  std::vector<int> indices;
  std::vector<double> values;
};

/// Coefficient of t^i is the number of critical points of index i.
IntPolynomial morse_polynomial(const MorseProfile& p);

/// Q with M - P = Q (1 + t) and every coefficient of Q nonnegative, if it
/// exists.
std::optional<IntPolynomial> morse_inequality_check(const IntPolynomial& m, const IntPolynomial& p);

struct WeakInequalityReport {
  bool passes = true;
  std::string first_violation;  // empty when passing
};

/// b_k <= mu_k for all k, and for every k the alternating partial sums
/// b_k - b_{k-1} + ... +- b_0 <= mu_k - mu_{k-1} + ... +- mu_0.
WeakInequalityReport weak_inequalities(const IntPolynomial& m, const IntPolynomial& p);

/// L_q(p) = |p - q|^2 restricted to the round sphere of the given center and
/// radius in R^{m+1}. The critical points are the two points of the sphere on
/// the line through the center and q; each index is the number of negative
/// eigenvalues of I - A_xi, xi = q - p, with A_xi = -(<xi, nu>/radius) I for
/// the outward normal nu. Throws std::invalid_argument for q at the center
/// (every point is critical), a nonpositive radius or mismatched dimensions.
MorseProfile sphere_distance_morse(const Eigen::VectorXd& center, double radius, const Eigen::VectorXd& q);

}  // namespace kahler
