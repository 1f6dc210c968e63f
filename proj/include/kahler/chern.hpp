#pragma once

// Chern classes in the truncated ring Z[h]/(h^{m+1}) ~ H^even(P^m, Z), with
// h the hyperplane class and the normalization  integral of h^m over P^m = 1.

#include "kahler/linalg.hpp"

#include <string>
#include <vector>

namespace kahler {

/// a_0 + a_1 h + ... + a_m h^m in Z[h]/(h^{m+1}).
class CohClass {
 public:
  /// Zero class. Throws std::invalid_argument for m < 0.
  explicit CohClass(int m);
  /// Coefficients beyond h^m are dropped; missing ones are zero.
  CohClass(int m, const std::vector<BigInt>& coeffs);

  static CohClass one(int m);
  /// h^k (zero when k > m).
  static CohClass h_power(int m, int k);
  /// 1 + d h, the total Chern class of O(d).
  static CohClass line_bundle(int m, const BigInt& d);

  int truncation() const { return m_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of h^k; zero outside 0..m.
  BigInt coeff(int k) const;
  /// Constant term 1: a valid total Chern class.
  bool is_chern_series() const { return coeffs_[0] == 1; }

  /// Throw std::invalid_argument on truncation mismatch.
  CohClass& operator+=(const CohClass& o);
  CohClass& operator*=(const CohClass& o);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator*(CohClass a, const CohClass& b) { return a *= b; }
  friend bool operator==(const CohClass&, const CohClass&) = default;

 private:
  int m_;
  std::vector<BigInt> coeffs_;
};

std::string to_string(const CohClass& c);

/// c(E + F) = c(E) c(F). Throws std::invalid_argument unless both have
/// constant term 1 and equal truncation.
CohClass whitney_product(const CohClass& a, const CohClass& b);

/// c(P^n) = c(O(1))^{n+1}, by repeated Whitney products. Requires n >= 1.
CohClass chern_pn(int n);

/// Multiplicative inverse of a class with constant term 1.
CohClass series_inverse(const CohClass& a);

/// c(T_Y) = (1+h)^{m+1} prod_j (1 + d_j h)^{-1} for the complete intersection
/// Y of hypersurfaces of the given degrees in P^m. Throws std::invalid_argument
/// for nonpositive degrees or more than m of them.
CohClass chern_complete_intersection(int m, const std::vector<int>& degrees);

/// K_Y = O(sum d_j - m - 1)|_Y.
BigInt canonical_degree(int m, const std::vector<int>& degrees);

/// Topological Euler characteristic as the top Chern number: the h^m
/// coefficient of c(T_Y) (prod d_j) h^k, k = number of hypersurfaces.
BigInt euler_characteristic(int m, const std::vector<int>& degrees);

/// [P_1(B), ..., P_r(B)] with det(I + tB) = 1 + sum_k P_k(B) t^k. Throws
/// std::invalid_argument for a non-square matrix.
std::vector<GaussianRational> chern_forms_from_matrix(const ExactMatrix& b);

}  // namespace kahler
