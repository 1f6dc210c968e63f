#include "kahler/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace kahler;

namespace {

ExactMatrix exact(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  ExactMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = GaussianRational(v);
    ++i;
  }
  return m;
}

IntMatrix integer(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = BigInt(v);
    ++i;
  }
  return m;
}

GaussianRational random_gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

bool is_unimodular(const IntMatrix& m) {
  const BigInt d = determinant(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("GaussianRational arithmetic") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(conj(conj(GaussianRational(make_rational(3, 4), make_rational(-2, 5)))) ==
        GaussianRational(make_rational(3, 4), make_rational(-2, 5)));
  CHECK(GaussianRational(1) / i == -i);
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(mp::denominator(make_rational(3, -6)) == 2);
  CHECK(to_string(GaussianRational(make_rational(1, 2), Rational(-1))) == "1/2-i");
}

TEST_CASE("GaussianRational norm is multiplicative") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_gaussian(rng);
    const auto b = random_gaussian(rng);
    const auto ab = a * b;
    CHECK(ab * conj(ab) == (a * conj(a)) * (b * conj(b)));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rank") {
  CHECK(rank(ExactMatrix(ExactMatrix::Identity(3, 3))) == 3);
  CHECK(rank(ExactMatrix(ExactMatrix::Zero(2, 5))) == 0);
  CHECK(rank(exact({{1, 2, 3}, {2, 4, 6}})) == 1);
  ExactMatrix complex_rank_one(2, 2);
  const GaussianRational i = GaussianRational::i();
  complex_rank_one << GaussianRational(1), i, i, GaussianRational(-1);
  CHECK(rank(complex_rank_one) == 1);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(ExactMatrix(ExactMatrix::Identity(3, 3))).empty());
  CHECK(kernel_basis(ExactMatrix(ExactMatrix::Zero(2, 2))).size() == 2);
  const auto k = kernel_basis(exact({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0](0) == -k[0](1));
  CHECK(!k[0](0).is_zero());
}

TEST_CASE("rank-nullity and kernel vectors on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> sparse(0, 2);
  for (int t = 0; t < 60; ++t) {
    const int r = dim(rng);
    const int c = dim(rng);
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) m(i, j) = sparse(rng) == 0 ? GaussianRational(0) : random_gaussian(rng);
    }
    // Force dependent rows sometimes.
    if (r > 1 && t % 3 == 0) m.row(r - 1) = m.row(0) * GaussianRational(make_rational(2, 3));
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + static_cast<Eigen::Index>(ker.size()) == c);
    for (const auto& v : ker) {
      const ExactVector prod = m * v;
      for (Eigen::Index i = 0; i < prod.size(); ++i) CHECK(prod(i).is_zero());
    }
    if (!ker.empty()) {
      ExactMatrix stacked(c, static_cast<Eigen::Index>(ker.size()));
      for (std::size_t j = 0; j < ker.size(); ++j) stacked.col(static_cast<Eigen::Index>(j)) = ker[j];
      CHECK(rank(stacked) == static_cast<Eigen::Index>(ker.size()));
    }
  }
}

TEST_CASE("smith_normal_form examples") {
  {
    const IntMatrix id = IntMatrix::Identity(3, 3);
    const auto s = smith_normal_form(id);
    CHECK(s.D == id);
  }
  {
    const IntMatrix m = integer({{2, 4}, {6, 8}});
    const auto s = smith_normal_form(m);
    CHECK(s.D == integer({{2, 0}, {0, 4}}));
    CHECK(IntMatrix(s.U * m * s.V) == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
  }
  {
    const IntMatrix z = IntMatrix::Zero(2, 3);
    CHECK(smith_normal_form(z).D == z);
    CHECK(smith_normal_form(z).invariant_factors().empty());
  }
}

TEST_CASE("smith_normal_form invariants on random matrices") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<long> entry(-12, 12);
  for (int t = 0; t < 80; ++t) {
    const int r = dim(rng);
    const int c = dim(rng);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) m(i, j) = BigInt(entry(rng));
    }
    const auto s = smith_normal_form(m);
    CHECK(IntMatrix(s.U * m * s.V) == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    const auto f = s.invariant_factors();
    for (Eigen::Index i = 0; i < s.D.rows(); ++i) {
      for (Eigen::Index j = 0; j < s.D.cols(); ++j) {
        if (i != j) CHECK(s.D(i, j).is_zero());
      }
    }
    for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK((f[i + 1] % f[i]).is_zero());
    for (const auto& d : f) CHECK(d > 0);
    CHECK(s.rank() == rank(m));

    // Permuting rows must not change the invariant factors.
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix pm(r, c);
    for (int i = 0; i < r; ++i) pm.row(i) = m.row(perm[static_cast<std::size_t>(i)]);
    CHECK(smith_normal_form(pm).invariant_factors() == f);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(integer({{2, 4}, {6, 8}})) == -8);
  CHECK(determinant(integer({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(integer({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
}
