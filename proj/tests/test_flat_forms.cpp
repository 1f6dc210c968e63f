#include "kahler/flat_forms.hpp"

#include <doctest.h>

#include <random>

using namespace kahler;

namespace {

const GaussianRational I = GaussianRational::i();

PolyForm one(int n) { return PolyForm(ExtForm::constant(n, 1)); }
PolyForm dz(int n, int k) { return PolyForm(ExtForm::dz(n, k)); }
PolyForm dzbar(int n, int k) { return PolyForm(ExtForm::dzbar(n, k)); }

PolyForm random_poly_form(std::mt19937& rng, int n, int max_deg) {
  const auto pool = monomial_forms(n, max_deg);
  PolyForm out(n);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int t = 0; t < 4; ++t) out += GaussianRational(make_rational(c(rng), 1), make_rational(c(rng), 2)) * pool[pick(rng)];
  return out;
}

void check_all(const std::vector<IdentityResult>& results) {
  for (const auto& r : results) {
    INFO(r.name);
    CHECK(r.holds);
  }
}

}  // namespace

TEST_CASE("del, delbar and d on coordinate examples") {
  const int n = 2;
  const PolyForm z1 = PolyForm::z(n, 1);
  const PolyForm zb1 = PolyForm::zbar(n, 1);
  CHECK(del(z1) == dz(n, 1));
  CHECK(delbar(z1).is_zero());
  // Leibniz by hand.
  CHECK(d(wedge(z1, zb1)) == wedge(zb1, dz(n, 1)) + wedge(z1, dzbar(n, 1)));
  // delbar(zbar1^2 dz2) = 2 zbar1 dzbar1 ^ dz2.
  const PolyForm a = wedge(wedge(zb1, zb1), dz(n, 2));
  CHECK(delbar(a) == GaussianRational(2) * wedge(zb1, wedge(dzbar(n, 1), dz(n, 2))));
  CHECK(d(one(n)).is_zero());
}

TEST_CASE("del_star and delbar_star examples") {
  CHECK(del_star(dz(2, 1)).is_zero());
  CHECK(delbar_star(one(2)).is_zero());
  // By hand: -sum dbar_k i_k (z1 dz1) = -dbar_1(2 z1) = 0 and
  // -sum dbar_k i_k (zbar1 dz1) = -dbar_1(2 zbar1) = -2.
  CHECK(del_star(wedge(PolyForm::z(1, 1), dz(1, 1))).is_zero());
  CHECK(del_star(wedge(PolyForm::zbar(1, 1), dz(1, 1))) == GaussianRational(-2) * one(1));
  CHECK(del_star_ladder(wedge(PolyForm::zbar(1, 1), dz(1, 1))) == GaussianRational(-2) * one(1));
}

TEST_CASE("laplacians") {
  const Laplacians l1 = laplacians(one(2));
  CHECK(l1.full.is_zero());
  CHECK(l1.del.is_zero());
  CHECK(l1.delbar.is_zero());

  // z zbar = x^2 + y^2 on C^1. With d* = -*d* the Laplacian is the positive
  // one, -(d_xx + d_yy), so the value is -4 and Delta_delbar = -2.
  const PolyForm r2 = wedge(PolyForm::z(1, 1), PolyForm::zbar(1, 1));
  const Laplacians l = laplacians(r2);
  CHECK(l.full == GaussianRational(-4) * one(1));
  CHECK(l.full == GaussianRational(2) * l.delbar);
  CHECK(l.full == GaussianRational(2) * l.del);

  const PolyForm a = wedge(PolyForm::zbar(2, 1), dz(2, 1));
  const Laplacians la = laplacians(a);
  CHECK(la.del == la.delbar);
}

TEST_CASE("creation_annihilation") {
  const PolyForm a = wedge(PolyForm::z(2, 2), dzbar(2, 1));
  CHECK(creation_annihilation(1, Ladder::e, a) == wedge(PolyForm::z(2, 2), wedge(dz(2, 1), dzbar(2, 1))));
  CHECK(creation_annihilation(1, Ladder::ibar, a) == GaussianRational(2) * PolyForm::z(2, 2));
  CHECK_THROWS_AS(creation_annihilation(3, Ladder::e, a), std::invalid_argument);
  CHECK_THROWS_AS(creation_annihilation(0, Ladder::i, a), std::invalid_argument);
  for (int n = 1; n <= 3; ++n) CHECK(ladder_anticommutators_hold(n));
}

TEST_CASE("kahler_identity_check examples") {
  check_all(kahler_identity_check(dz(2, 1) + GaussianRational(3) * dzbar(2, 2)));
  CHECK(del_star(dz(2, 1)).is_zero());
  check_all(kahler_identity_check(wedge(PolyForm::z(2, 1), dzbar(2, 2))));

  // a = zbar1 dz1 on C^2, both sides expanded independently by hand:
  // delbar a = -dz1^dzbar1, Lambda(dz1^dzbar1) = -2i, Lambda a = 0, so
  // [Lambda, delbar] a = 2i; del* a = -2, so -i del* a = 2i.
  const PolyForm a = wedge(PolyForm::zbar(2, 1), dz(2, 1));
  const PolyForm lhs = lefschetz_dual(delbar(a)) - delbar(lefschetz_dual(a));
  CHECK(lhs == GaussianRational(Rational(0), Rational(2)) * one(2));
  CHECK(-I * del_star(a) == lhs);
  check_all(kahler_identity_check(a));
}

TEST_CASE("structural identities on random polynomial forms") {
  std::mt19937 rng(31);
  for (int t = 0; t < 25; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const PolyForm a = random_poly_form(rng, n, 3);
    check_all(structural_check(a));
    check_all(kahler_identity_check(a));
  }
}

TEST_CASE("monomial_forms enumeration") {
  // Coefficient monomials of degree <= 1 in 2 variables: 3; basis forms: 4.
  CHECK(monomial_forms(1, 1).size() == 12);
  // n = 3, degree <= 3: C(9,3) = 84 monomials times 64 basis forms.
  CHECK(monomial_forms(3, 3).size() == 84 * 64);
}
