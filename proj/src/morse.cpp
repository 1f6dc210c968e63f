#include "kahler/morse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kahler {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    BigInt c = p.coeff(k);
    if (c == 0) continue;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << '-';
      c = -c;
    }
    first = false;
    if (k == 0 || c != 1) os << c;
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntPolynomial morse_polynomial(const MorseProfile& p) {
  std::vector<BigInt> c;
  for (int i : p.indices) {
    if (i < 0) throw std::invalid_argument("negative Morse index");
    if (c.size() <= static_cast<std::size_t>(i)) c.resize(static_cast<std::size_t>(i) + 1, BigInt(0));
    c[static_cast<std::size_t>(i)] += 1;
  }
  return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> morse_inequality_check(const IntPolynomial& m, const IntPolynomial& p) {
  const IntPolynomial diff = m - p;
  if (diff.is_zero()) return IntPolynomial();
  // Synthetic division by 1 + t: q_i = d_i - q_{i-1}, remainder d_N - q_{N-1}.
  const std::size_t n = diff.coeffs().size();
  std::vector<BigInt> q(n - 1);
  BigInt prev = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    q[i] = diff.coeff(i) - prev;
    prev = q[i];
  }
  if (diff.coeff(n - 1) != prev) return std::nullopt;
  for (const auto& c : q) {
    if (c < 0) return std::nullopt;
  }
  return IntPolynomial(std::move(q));
}

WeakInequalityReport weak_inequalities(const IntPolynomial& m, const IntPolynomial& p) {
  const std::size_t top = std::max(m.coeffs().size(), p.coeffs().size());
  WeakInequalityReport rep;
  auto fail = [&rep](const std::string& what) {
    rep.passes = false;
    rep.first_violation = what;
  };
  BigInt alt_b = 0;
  BigInt alt_mu = 0;
  for (std::size_t k = 0; k < top; ++k) {
    alt_b = p.coeff(k) - alt_b;
    alt_mu = m.coeff(k) - alt_mu;
    std::ostringstream os;
    if (p.coeff(k) > m.coeff(k)) {
      os << "b_" << k << " = " << p.coeff(k) << " > mu_" << k << " = " << m.coeff(k);
      fail(os.str());
      break;
    }
    if (alt_b > alt_mu) {
      os << "alternating sum at k = " << k << ": " << alt_b << " > " << alt_mu;
      fail(os.str());
      break;
    }
  }
  return rep;
}

MorseProfile sphere_distance_morse(const Eigen::VectorXd& center, double radius, const Eigen::VectorXd& q) {
  if (!(radius > 0)) throw std::invalid_argument("sphere radius must be positive");
  if (center.size() < 2) throw std::invalid_argument("sphere needs an ambient space of dimension at least 2");
  if (q.size() != center.size()) throw std::invalid_argument("query point has the wrong dimension");
  const double dist = (q - center).norm();
  if (dist <= 1e-12 * std::max(1.0, radius)) {
    throw std::invalid_argument("query point at the center: L_q is constant on the sphere, not Morse");
  }
  const Eigen::Index m = center.size() - 1;
  const Eigen::VectorXd u = (q - center) / dist;
  MorseProfile out;
  for (double side : {1.0, -1.0}) {
    const Eigen::VectorXd p = center + side * radius * u;
    const Eigen::VectorXd nu = side * u;
    const Eigen::VectorXd xi = q - p;
    // I - A_xi is the scalar 1 + <xi, nu>/radius on the m-dimensional tangent space.
    const double eig = 1 + xi.dot(nu) / radius;
    if (std::abs(eig) < 1e-12) throw std::invalid_argument("degenerate critical point");
    out.indices.push_back(eig < 0 ? static_cast<int>(m) : 0);
    out.values.push_back(xi.squaredNorm());
  }
  return out;
}

}  // namespace kahler
