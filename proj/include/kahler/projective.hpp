#pragma once

// Line bundles O(k) on P^n and numerical Fubini-Study geometry in affine
// charts. Everything numeric here is binary64; the symbolic modules stay exact.
//
// Normalization: omega_FS = (i/2pi) del delbar log(1 + |w|^2), so that the
// integral over P^1 is 1 and [omega_FS] = h generates H^2(P^n, Z).

#include "kahler/linalg.hpp"

#include <Eigen/Core>

#include <complex>
#include <limits>
#include <utility>
#include <vector>

namespace kahler {

using Complex = std::complex<double>;

/// O(k) on P^n.
struct LineBundleClass {
  int n = 1;
  int k = 0;

  /// Throws std::invalid_argument for n < 1.
  LineBundleClass(int n_, int k_);
  friend bool operator==(const LineBundleClass&, const LineBundleClass&) = default;
};

/// O(a) x O(b) = O(a + b). Throws std::invalid_argument on ambient mismatch.
LineBundleClass tensor(const LineBundleClass& a, const LineBundleClass& b);
LineBundleClass dual(const LineBundleClass& a);

/// dim H^0(P^n, O(k)) = binomial(n + k, n) for k >= 0, else 0.
BigInt h0_dim(int n, int k);

/// O(sum a_i d_i) for the divisor sum a_i D_i, where D_i has degree d_i > 0.
/// Components are (degree, multiplicity) pairs.
LineBundleClass divisor_class(int n, const std::vector<std::pair<int, int>>& components);

/// H_i(P^n, Z), i = 0..2n, from the cellular chain complex with one cell in
/// each even dimension.
std::vector<IntegerGroup> cw_homology_pn(int n);

/// Point of P^n in the affine chart U_i = {z_i != 0}, with w the remaining
/// homogeneous coordinates divided by z_i, in index order.
struct ChartPoint {
  int chart = 0;
  Eigen::VectorXcd w;

  int n() const { return static_cast<int>(w.size()); }
  /// (z_0, ..., z_n) with z_chart = 1.
  Eigen::VectorXcd homogeneous() const;
};

/// |coordinate| above this is treated as nonzero for chart membership.
inline constexpr double kChartThreshold = 1e-10;

/// The same point in chart j. Throws std::domain_error if z_j vanishes there.
ChartPoint to_chart(const ChartPoint& p, int j);

/// phi_ij = (z_j / z_i)^k on U_i n U_j. Throws std::domain_error if p is not
/// in the double overlap and std::invalid_argument for a bad chart index.
Complex cocycle_eval(const LineBundleClass& bundle, int i, int j, const ChartPoint& p);

/// h_ab with omega_FS = (i/2) sum h_ab dw_a ^ dwbar_b at p:
/// h_ab = (1/pi) [delta_ab / (1 + |w|^2) - wbar_a w_b / (1 + |w|^2)^2].
Eigen::MatrixXcd fubini_study_matrix(const ChartPoint& p);

struct FsReport {
  double min_eigenvalue = 0;
  double closedness_residual = 0;  // max over components of d omega by central differences
  bool positive = false;
  bool closed = false;
  bool passes() const { return positive && closed; }
};

FsReport fs_checks(const ChartPoint& p, double step = 1e-4, double tol = 1e-5);

/// (1/pi) times the integral of (1 + x^2 + y^2)^{-2} over the disc of radius
/// `radius` (infinite by default), by adaptive Gauss-Legendre after r = tan t.
/// Throws std::runtime_error if the tolerance is not reached.
double fs_integral_p1(double tol = 1e-10, double radius = std::numeric_limits<double>::infinity());

/// The same integral over all of C by a fixed composite 3-point Gauss-Legendre
/// rule on `panels` equal panels of [0, pi/2].
double fs_integral_p1_composite(int panels);

/// h_i = (1 + sum_{a != i} |z_a / z_i|^2)^{-1}, the metric on O(1) in chart i.
double o1_metric(const ChartPoint& p);

struct CurvatureReport {
  double max_deviation = 0;
  bool passes = false;
};

/// Curvature F = delbar del log h^k of the metric h^k on O(k), by central
/// differences, compared with k omega_FS: the matrix of (i/2pi) F against
/// k * fubini_study_matrix(p).
CurvatureReport chern_curvature_check(const ChartPoint& p, double step = 1e-4, double tol = 1e-6, int twist = 1);

/// Whether multiplication by h^{n-k} maps H^k(P^n) bijectively onto
/// H^{2n-k}(P^n) in the truncated ring. Throws std::invalid_argument unless
/// 0 <= k <= n.
bool hard_lefschetz_ring(int n, int k);

}  // namespace kahler
