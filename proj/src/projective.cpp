#include "kahler/projective.hpp"

#include "kahler/chern.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <functional>
#include <stdexcept>

namespace kahler {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

void check_chart(const ChartPoint& p, int i) {
  if (i < 0 || i > p.n()) throw std::invalid_argument("chart index out of range");
}

// w displaced by t along real coordinate r: x_c for r < n, y_c for r >= n.
Eigen::VectorXcd displaced(const Eigen::VectorXcd& w, Eigen::Index r, double t) {
  Eigen::VectorXcd out = w;
  const Eigen::Index n = w.size();
  out(r % n) += r < n ? Complex(t, 0) : Complex(0, t);
  return out;
}

// Radial integrand after r = tan t: 2 sin t cos t.
double radial(double t) { return 2 * std::sin(t) * std::cos(t); }

using Rule = boost::math::quadrature::gauss<double, 7>;

double adaptive(const std::function<double(double)>& f, double a, double b, double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = Rule::integrate(f, a, mid);
  const double right = Rule::integrate(f, mid, b);
  if (std::abs(left + right - whole) <= tol) return left + right;
  if (depth == 0) throw std::runtime_error("quadrature did not converge");
  return adaptive(f, a, mid, left, tol / 2, depth - 1) + adaptive(f, mid, b, right, tol / 2, depth - 1);
}

}  // namespace

LineBundleClass::LineBundleClass(int n_, int k_) : n(n_), k(k_) {
  if (n_ < 1) throw std::invalid_argument("projective dimension must be at least 1");
}

LineBundleClass tensor(const LineBundleClass& a, const LineBundleClass& b) {
  if (a.n != b.n) throw std::invalid_argument("line bundles on different projective spaces");
  return {a.n, a.k + b.k};
}

LineBundleClass dual(const LineBundleClass& a) { return {a.n, -a.k}; }

BigInt h0_dim(int n, int k) {
  if (n < 1) throw std::invalid_argument("projective dimension must be at least 1");
  if (k < 0) return 0;
  // binomial(n + k, n), built up so every intermediate quotient is exact.
  BigInt r = 1;
  for (int i = 1; i <= n; ++i) r = r * (k + i) / i;
  return r;
}

LineBundleClass divisor_class(int n, const std::vector<std::pair<int, int>>& components) {
  int total = 0;
  for (const auto& [degree, mult] : components) {
    if (degree <= 0) throw std::invalid_argument("divisor component degrees must be positive");
    total += degree * mult;
  }
  return {n, total};
}

std::vector<IntegerGroup> cw_homology_pn(int n) {
  if (n < 0) throw std::invalid_argument("negative projective dimension");
  const int top = 2 * n;
  auto cells = [](int i) -> Eigen::Index { return i % 2 == 0 ? 1 : 0; };
  // Cellular boundary d_i : C_i -> C_{i-1}; every one vanishes since the
  // cells sit in even dimensions only.
  auto boundary = [&](int i) -> IntMatrix {
    const Eigen::Index rows = (i >= 1 && i <= top + 1) ? cells(i - 1) : 0;
    const Eigen::Index cols = (i >= 0 && i <= top) ? cells(i) : 0;
    return IntMatrix::Zero(rows, cols);
  };
  std::vector<IntegerGroup> out;
  for (int i = 0; i <= top; ++i) out.push_back(subquotient(cells(i), boundary(i + 1), boundary(i)));
  return out;
}

Eigen::VectorXcd ChartPoint::homogeneous() const {
  if (chart < 0 || chart > n()) throw std::invalid_argument("chart index out of range");
  Eigen::VectorXcd z(n() + 1);
  for (int a = 0, src = 0; a <= n(); ++a) z(a) = a == chart ? Complex(1, 0) : w(src++);
  return z;
}

ChartPoint to_chart(const ChartPoint& p, int j) {
  check_chart(p, j);
  const Eigen::VectorXcd z = p.homogeneous();
  if (std::abs(z(j)) <= kChartThreshold) throw std::domain_error("point is not in the target chart");
  ChartPoint q{j, Eigen::VectorXcd(p.n())};
  for (int a = 0, dst = 0; a <= p.n(); ++a) {
    if (a != j) q.w(dst++) = z(a) / z(j);
  }
  return q;
}

Complex cocycle_eval(const LineBundleClass& bundle, int i, int j, const ChartPoint& p) {
  if (bundle.n != p.n()) throw std::invalid_argument("point and bundle live on different projective spaces");
  check_chart(p, i);
  check_chart(p, j);
  const Eigen::VectorXcd z = p.homogeneous();
  if (std::abs(z(i)) <= kChartThreshold || std::abs(z(j)) <= kChartThreshold) {
    throw std::domain_error("point is not in the double overlap");
  }
  if (i == j) return 1;
  return std::pow(z(j) / z(i), bundle.k);
}

Eigen::MatrixXcd fubini_study_matrix(const ChartPoint& p) {
  const Eigen::VectorXcd& w = p.w;
  const double s = 1 + w.squaredNorm();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(p.n(), p.n()) / s;
  h -= w.conjugate() * w.transpose() / (s * s);
  return h / kPi;
}

FsReport fs_checks(const ChartPoint& p, double step, double tol) {
  if (!(step > 0)) throw std::invalid_argument("finite-difference step must be positive");
  const int n = p.n();
  FsReport rep;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(fubini_study_matrix(p), Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = eig.eigenvalues().minCoeff();
  rep.positive = rep.min_eigenvalue > 0;

  // Wirtinger derivatives of every coefficient: del_c h and delbar_c h.
  std::vector<Eigen::MatrixXcd> dh, dbh;
  for (int c = 0; c < n; ++c) {
    auto diff = [&](Eigen::Index r) {
      ChartPoint plus{p.chart, displaced(p.w, r, step)};
      ChartPoint minus{p.chart, displaced(p.w, r, -step)};
      return Eigen::MatrixXcd((fubini_study_matrix(plus) - fubini_study_matrix(minus)) / (2 * step));
    };
    const Eigen::MatrixXcd dx = diff(c);
    const Eigen::MatrixXcd dy = diff(c + n);
    const Complex i(0, 1);
    dh.push_back(0.5 * (dx - i * dy));
    dbh.push_back(0.5 * (dx + i * dy));
  }
  // d omega = 0 iff del_c h_ab = del_a h_cb and delbar_c h_ab = delbar_b h_ac.
  double res = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        res = std::max(res, std::abs(dh[c](a, b) - dh[a](c, b)));
        res = std::max(res, std::abs(dbh[c](a, b) - dbh[b](a, c)));
      }
    }
  }
  rep.closedness_residual = res;
  rep.closed = res <= tol;
  return rep;
}

double fs_integral_p1(double tol, double radius) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (!(radius >= 0)) throw std::invalid_argument("radius must be nonnegative");
  const double upper = std::isinf(radius) ? kPi / 2 : std::atan(radius);
  const std::function<double(double)> f = radial;
  return adaptive(f, 0, upper, Rule::integrate(f, 0.0, upper), tol, 40);
}

double fs_integral_p1_composite(int panels) {
  if (panels < 1) throw std::invalid_argument("need at least one panel");
  const double width = kPi / 2 / panels;
  double total = 0;
  for (int j = 0; j < panels; ++j) {
    total += boost::math::quadrature::gauss<double, 3>::integrate(radial, j * width, (j + 1) * width);
  }
  return total;
}

double o1_metric(const ChartPoint& p) { return 1 / (1 + p.w.squaredNorm()); }

CurvatureReport chern_curvature_check(const ChartPoint& p, double step, double tol, int twist) {
  if (!(step > 0)) throw std::invalid_argument("finite-difference step must be positive");
  const int n = p.n();
  auto f = [&](const Eigen::VectorXcd& w) { return twist * std::log(o1_metric({p.chart, w})); };
  // Second partials in the real coordinates x_1..x_n, y_1..y_n.
  auto second = [&](Eigen::Index r, Eigen::Index s) {
    if (r == s) {
      return (f(displaced(p.w, r, step)) - 2 * f(p.w) + f(displaced(p.w, r, -step))) / (step * step);
    }
    auto at = [&](double sr, double ss) { return f(displaced(displaced(p.w, r, sr * step), s, ss * step)); };
    return (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * step * step);
  };
  // (i/2pi) delbar del log h = (i/2) sum M_ab dw_a ^ dwbar_b with
  // M_ab = -(1/pi) del_a delbar_b log h.
  Eigen::MatrixXcd m(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Complex ddbar = 0.25 * Complex(second(a, b) + second(a + n, b + n), second(a, b + n) - second(a + n, b));
      m(a, b) = -ddbar / kPi;
    }
  }
  CurvatureReport rep;
  rep.max_deviation = (m - static_cast<double>(twist) * fubini_study_matrix(p)).cwiseAbs().maxCoeff();
  rep.passes = rep.max_deviation <= tol;
  return rep;
}

bool hard_lefschetz_ring(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("hard_lefschetz_ring requires 0 <= k <= n");
  // H^{2j}(P^n) = Z h^j for 0 <= j <= n; odd groups vanish.
  auto rank_of = [n](int deg) { return deg % 2 == 0 && deg >= 0 && deg <= 2 * n ? 1 : 0; };
  const int target = 2 * n - k;
  IntMatrix map = IntMatrix::Zero(rank_of(target), rank_of(k));
  if (map.size() == 1) map(0, 0) = (CohClass::h_power(n, k / 2) * CohClass::h_power(n, n - k)).coeff(target / 2);
  return map.rows() == map.cols() && rank(map) == map.rows();
}

}  // namespace kahler
