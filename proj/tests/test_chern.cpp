#include "kahler/chern.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace kahler;

namespace {

CohClass cls(int m, std::vector<long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return {m, b};
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficient of h^s in (1+h)^{m+1} prod_j (1 + d_j h)^{-1}, by summing over
// exponent splits a + b_1 + ... + b_k = s directly.
long long ci_coefficient(int m, const std::vector<int>& ds, int s) {
  std::function<long long(std::size_t, int)> go = [&](std::size_t j, int left) -> long long {
    if (j == ds.size()) return binom(m + 1, left);
    long long total = 0;
    long long p = 1;
    for (int b = 0; b <= left; ++b) {
      total += p * go(j + 1, left - b);
      p *= -ds[j];
    }
    return total;
  };
  return go(0, s);
}

// Smooth degree-d hypersurface of dimension n: ((1-d)^{n+2} - 1)/d + n + 2.
long long hypersurface_euler(int n, int d) {
  long long p = 1;
  for (int i = 0; i < n + 2; ++i) p *= (1 - d);
  return (p - 1) / d + n + 2;
}

GaussianRational laplace_det(const ExactMatrix& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  GaussianRational s = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    ExactMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = a(r, c);
      }
    }
    const GaussianRational term = a(0, j) * laplace_det(minor);
    s += (j % 2 == 0) ? term : -term;
  }
  return s;
}

// Sum of principal k x k minors.
GaussianRational principal_minor_sum(const ExactMatrix& b, int k) {
  const int r = static_cast<int>(b.rows());
  GaussianRational s = 0;
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<Eigen::Index> idx;
    for (int i = 0; i < r; ++i) {
      if ((mask >> i) & 1U) idx.push_back(i);
    }
    ExactMatrix sub(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) sub(i, j) = b(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    s += laplace_det(sub);
  }
  return s;
}

ExactMatrix random_matrix(std::mt19937& rng, int r) {
  std::uniform_int_distribution<long> c(-3, 3);
  ExactMatrix m(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m(i, j) = GaussianRational(make_rational(c(rng)), make_rational(c(rng), 2));
  }
  return m;
}

}  // namespace

TEST_CASE("truncated ring arithmetic") {
  CHECK(cls(2, {1, 1}) * cls(2, {1, 2}) == cls(2, {1, 3, 2}));
  CHECK(whitney_product(cls(3, {1, 4, 0, 7}), CohClass::one(3)) == cls(3, {1, 4, 0, 7}));
  CHECK(CohClass::h_power(2, 3) == CohClass(2));
  CHECK_THROWS_AS(whitney_product(cls(2, {1}), cls(3, {1})), std::invalid_argument);
  CHECK_THROWS_AS(whitney_product(cls(2, {2}), cls(2, {1})), std::invalid_argument);
  CHECK(to_string(cls(3, {1, -2, 0, 1})) == "1 - 2h + h^3");
  CHECK(to_string(CohClass(2)) == "0");

  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int t = 0; t < 50; ++t) {
    const CohClass a = cls(4, {1, c(rng), c(rng), c(rng), c(rng)});
    const CohClass b = cls(4, {1, c(rng), c(rng), c(rng), c(rng)});
    CHECK(whitney_product(a, b) == whitney_product(b, a));
    CHECK(a * series_inverse(a) == CohClass::one(4));
    CHECK(series_inverse(series_inverse(a)) == a);
  }
}

TEST_CASE("series_inverse of 1 + dh") {
  CHECK(series_inverse(CohClass::one(3)) == CohClass::one(3));
  for (long d = -3; d <= 5; ++d) CHECK(series_inverse(cls(2, {1, d})) == cls(2, {1, -d, d * d}));
  CHECK_THROWS_AS(series_inverse(cls(2, {3, 1})), std::invalid_argument);
}

TEST_CASE("chern_pn") {
  CHECK(chern_pn(1) == cls(1, {1, 2}));
  CHECK(chern_pn(2) == cls(2, {1, 3, 3}));
  for (int n = 1; n <= 8; ++n) {
    const CohClass c = chern_pn(n);
    for (int k = 0; k <= n; ++k) CHECK(c.coeff(k) == binom(n + 1, k));
    CHECK(c.coeff(1) == n + 1);
    CHECK(canonical_degree(n, {}) == -(n + 1));
    CHECK(whitney_product(CohClass::one(n), c) == c);
  }
  CHECK_THROWS_AS(chern_pn(0), std::invalid_argument);
}

TEST_CASE("complete intersections") {
  CHECK(chern_complete_intersection(3, {4}) == cls(3, {1, 0, 6, -20}));
  CHECK(chern_complete_intersection(2, {}) == chern_pn(2));
  CHECK(chern_complete_intersection(3, {2}).coeff(1) == 2);
  CHECK(canonical_degree(3, {4}) == 0);
  CHECK(canonical_degree(4, {2, 3}) == 0);
  CHECK_THROWS_AS(chern_complete_intersection(2, {2, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(chern_complete_intersection(3, {0}), std::invalid_argument);

  for (int m = 1; m <= 6; ++m) {
    for (const std::vector<int>& ds : std::vector<std::vector<int>>{{}, {1}, {2}, {3}, {2, 2}, {2, 3}, {1, 4}, {3, 3, 2}}) {
      if (static_cast<int>(ds.size()) > m) continue;
      const CohClass c = chern_complete_intersection(m, ds);
      for (int s = 0; s <= m; ++s) CHECK(c.coeff(s) == ci_coefficient(m, ds, s));
      long long sum = 0;
      for (int d : ds) sum += d;
      CHECK(c.coeff(1) == m + 1 - sum);
    }
  }
}

TEST_CASE("euler characteristics") {
  CHECK(euler_characteristic(2, {}) == 3);
  CHECK(euler_characteristic(3, {4}) == 24);
  CHECK(euler_characteristic(2, {3}) == 0);
  for (int m = 1; m <= 7; ++m) {
    CHECK(euler_characteristic(m, {}) == m + 1);
    CHECK(euler_characteristic(m, {1}) == m);
  }
  for (int d = 1; d <= 8; ++d) CHECK(euler_characteristic(2, {d}) == 2 - (d - 1) * (d - 2));
  for (int n = 0; n <= 5; ++n) {
    for (int d = 1; d <= 6; ++d) CHECK(euler_characteristic(n + 1, {d}) == hypersurface_euler(n, d));
  }
  // K3 as a (2,3) complete intersection in P^4; curve (2,2) in P^3 is elliptic.
  CHECK(euler_characteristic(4, {2, 3}) == 24);
  CHECK(euler_characteristic(3, {2, 2}) == 0);
}

TEST_CASE("chern_forms_from_matrix") {
  CHECK(chern_forms_from_matrix(ExactMatrix::Zero(3, 3)) == std::vector<GaussianRational>(3, GaussianRational(0)));
  CHECK(chern_forms_from_matrix(ExactMatrix::Identity(2, 2)) == std::vector<GaussianRational>{2, 1});
  ExactMatrix d = ExactMatrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  CHECK(chern_forms_from_matrix(d) == std::vector<GaussianRational>{3, 2});
  CHECK_THROWS_AS(chern_forms_from_matrix(ExactMatrix::Zero(2, 3)), std::invalid_argument);

  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    const int r = 1 + t % 4;
    const ExactMatrix b = random_matrix(rng, r);
    const auto p = chern_forms_from_matrix(b);
    for (int k = 1; k <= r; ++k) CHECK(p[static_cast<std::size_t>(k - 1)] == principal_minor_sum(b, k));

    ExactMatrix c = random_matrix(rng, r);
    while (laplace_det(c).is_zero()) c = random_matrix(rng, r);
    // Inverse by solving c x = e_j column by column.
    ExactMatrix inv(r, r);
    for (int j = 0; j < r; ++j) {
      ExactVector x;
      REQUIRE(solve_linear(c, ExactVector(ExactMatrix::Identity(r, r).col(j)), x));
      inv.col(j) = x;
    }
    CHECK(chern_forms_from_matrix(c * b * inv) == p);
  }
}
