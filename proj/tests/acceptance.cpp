// Acceptance run: one PASS/FAIL line per criterion, with wall-clock time.
// Expected values come from small oracles written here, independent of the
// library code paths they check.

#include "kahler/cech.hpp"
#include "kahler/chern.hpp"
#include "kahler/exterior.hpp"
#include "kahler/flat_forms.hpp"
#include "kahler/hodge.hpp"
#include "kahler/morse.hpp"
#include "kahler/projective.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace kahler;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of monomials of degree k in v variables, by enumeration.
long long count_monomials(int v, int k) {
  if (v == 1) return 1;
  long long total = 0;
  for (int e = 0; e <= k; ++e) total += count_monomials(v - 1, k - e);
  return total;
}

// Truncated power series in h, long long coefficients.
using Series = std::vector<long long>;

Series series_mul(const Series& a, const Series& b) {
  Series c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// 1 / (1 + d h) = sum (-d)^k h^k.
Series geometric(int d, std::size_t len) {
  Series s(len, 0);
  long long p = 1;
  for (auto& c : s) {
    c = p;
    p *= -d;
  }
  return s;
}

// chi of a hypersurface of degree d in P^m: coefficient of h^m in
// (1 + h)^{m+1} / (1 + d h) * d h.
long long hypersurface_chi(int m, int d) {
  Series top(static_cast<std::size_t>(m + 1), 0);
  for (int i = 0; i <= m; ++i) top[static_cast<std::size_t>(i)] = binom(m + 1, i);
  const Series c = series_mul(top, geometric(d, top.size()));
  return d * c[static_cast<std::size_t>(m - 1)];
}

// Simplicial coboundary ranks over Q and F_p, computed from the raw facet
// list: the oracle for the Cech criteria.
struct SimplicialComplex {
  std::vector<std::vector<std::vector<int>>> cells;  // by dimension, sorted

  explicit SimplicialComplex(const std::vector<std::vector<int>>& facets) {
    std::set<std::vector<int>> all;
    for (const auto& f : facets) {
      const int n = static_cast<int>(f.size());
      for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i) {
          if (mask & (1 << i)) s.push_back(f[static_cast<std::size_t>(i)]);
        }
        all.insert(s);
      }
    }
    for (const auto& s : all) {
      if (cells.size() < s.size()) cells.resize(s.size());
      cells[s.size() - 1].push_back(s);
    }
  }

  // delta^k as a dense integer matrix (rows: k+1 cells, cols: k cells).
  std::vector<std::vector<long long>> coboundary(std::size_t k) const {
    if (k + 1 >= cells.size()) return {};
    const auto& rows = cells[k + 1];
    const auto& cols = cells[k];
    std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t j = 0; j < rows[r].size(); ++j) {
        auto f = rows[r];
        f.erase(f.begin() + static_cast<long>(j));
        const auto c = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), f) - cols.begin());
        m[r][c] += (j % 2 == 0) ? 1 : -1;
      }
    }
    return m;
  }
};

long long mod_pow(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  for (; e; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

// Rank modulo a prime p. With a large p this equals the rank over Q for the
// small 0/+-1 matrices used here.
std::size_t rank_mod(std::vector<std::vector<long long>> m, long long p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (auto& row : m) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const long long inv = mod_pow(m[rank][c], p - 2, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long f = m[r][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<long long> betti_mod(const SimplicialComplex& x, long long p) {
  std::vector<long long> b;
  for (std::size_t k = 0; k < x.cells.size(); ++k) {
    const auto out = rank_mod(x.coboundary(k), p);
    const auto in = k == 0 ? 0 : rank_mod(x.coboundary(k - 1), p);
    b.push_back(static_cast<long long>(x.cells[k].size() - out - in));
  }
  return b;
}

constexpr long long kBigPrime = 1000000007;

const std::vector<std::vector<int>> kCircle{{0, 1}, {0, 2}, {1, 2}};
const std::vector<std::vector<int>> kRp2{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};

std::vector<std::vector<int>> torus_facets() {
  std::vector<std::vector<int>> f;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> a{i, (i + 1) % 7, (i + 3) % 7};
    std::vector<int> b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    f.push_back(a);
    f.push_back(b);
  }
  return f;
}

Nerve to_nerve(int opens, const std::vector<std::vector<int>>& facets) {
  return Nerve::from_facets(opens, std::vector<Simplex>(facets.begin(), facets.end()));
}

std::vector<long long> as_ll(const std::vector<Eigen::Index>& v) { return {v.begin(), v.end()}; }

Verdict pn_diamonds() {
  Verdict v;
  for (int n = 0; n <= 6; ++n) {
    const HodgeDiamond d = diamond_pn(n);
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) v.expect(d(p, q) == (p == q ? 1 : 0), "h^{p,q}(P^" + std::to_string(n) + ")");
    }
  }
  return v;
}

Verdict sections() {
  Verdict v;
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= 10; ++k) {
      const BigInt h = h0_dim(n, k);
      v.expect(h == binom(n + k, n), "binomial n=" + std::to_string(n) + " k=" + std::to_string(k));
      v.expect(h == count_monomials(n + 1, k), "enumeration n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    for (int k = -5; k < 0; ++k) v.expect(h0_dim(n, k) == 0, "negative k");
  }
  return v;
}

Verdict chern_classes() {
  Verdict v;
  for (int n = 1; n <= 6; ++n) {
    const CohClass c = chern_pn(n);
    for (int i = 0; i <= n; ++i) v.expect(c.coeff(i) == binom(n + 1, i), "c_i(P^" + std::to_string(n) + ")");
    v.expect(canonical_degree(n, {}) == -(n + 1), "c_1(K)");
  }
  return v;
}

Verdict quartic() {
  Verdict v;
  const long long chi = hypersurface_chi(3, 4);
  v.expect(chi == 24, "series oracle");
  v.expect(canonical_degree(3, {4}) == 0, "canonical degree");
  v.expect(euler_characteristic(3, {4}) == chi, "euler characteristic");
  v.expect(hypersurface_betti(2, 4) == BettiVector{1, 0, 22, 0, 1}, "betti");
  return v;
}

Verdict genus() {
  Verdict v;
  for (int d = 1; d <= 8; ++d) {
    const BigInt g = plane_curve_genus(d);
    v.expect(g == (d - 1) * (d - 2) / 2, "closed form d=" + std::to_string(d));
    v.expect(2 * g == 2 - euler_characteristic(2, {d}), "chern route d=" + std::to_string(d));
    v.expect(2 - 2 * g == hypersurface_chi(2, d), "series oracle d=" + std::to_string(d));
  }
  return v;
}

Verdict fs_integral() {
  Verdict v;
  const double val = fs_integral_p1();
  v.expect(std::abs(val - 1) <= 1e-6, "integral = " + std::to_string(val));
  return v;
}

Verdict curvature() {
  Verdict v;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int n = 1; n <= 3; ++n) {
    std::uniform_int_distribution<int> chart(0, n);
    for (int i = 0; i < 100; ++i) {
      ChartPoint p{chart(rng), Eigen::VectorXcd(n)};
      for (int a = 0; a < n; ++a) p.w(a) = Complex(u(rng), u(rng));
      const CurvatureReport r = chern_curvature_check(p, 1e-4, 1e-4);
      v.expect(r.passes, "n=" + std::to_string(n) + " deviation " + std::to_string(r.max_deviation));
    }
  }
  return v;
}

Verdict sl2() {
  Verdict v;
  for (int n = 1; n <= 4; ++n) {
    v.expect(verify_sl2(n).all(), "sl2 relations n=" + std::to_string(n));
    for (int k = 0; k <= n; ++k) v.expect(hard_lefschetz_check(n, k), "hard Lefschetz");
    ExtForm power = ExtForm::constant(n, GaussianRational(1));
    long fact = 1;
    for (int i = 1; i <= n; ++i) {
      power = wedge(power, kahler_form(n));
      fact *= i;
    }
    v.expect(power == GaussianRational(fact) * volume_form(n), "omega^n/n! = vol");
  }
  return v;
}

Verdict identities() {
  Verdict v;
  for (int n = 1; n <= 3; ++n) {
    for (const PolyForm& f : monomial_forms(n, 3)) {
      for (const auto& r : kahler_identity_check(f)) v.expect(r.holds, r.name);
      for (const auto& r : structural_check(f)) v.expect(r.holds, r.name);
    }
    v.expect(ladder_anticommutators_hold(n), "ladder anticommutators");
  }
  return v;
}

Verdict cech() {
  Verdict v;
  const auto circle = to_nerve(3, kCircle);
  const auto torus = to_nerve(7, torus_facets());
  const auto rp2 = to_nerve(6, kRp2);
  const auto q = [](const Nerve& n) { return as_ll(cohomology_dims(constant_sheaf_complex(n, 1))); };

  v.expect(q(circle) == std::vector<long long>{1, 1}, "circle");
  v.expect(q(circle) == betti_mod(SimplicialComplex(kCircle), kBigPrime), "circle oracle");
  v.expect(q(torus) == std::vector<long long>{1, 2, 1}, "torus");
  v.expect(q(torus) == betti_mod(SimplicialComplex(torus_facets()), kBigPrime), "torus oracle");

  // Universal coefficients: Z/2 in H^2 shows up as one extra class mod 2 in
  // H^1 and H^2, and nowhere mod odd primes.
  const SimplicialComplex x(kRp2);
  v.expect(betti_mod(x, kBigPrime) == std::vector<long long>{1, 0, 0}, "RP2 over Q");
  v.expect(betti_mod(x, 2) == std::vector<long long>{1, 1, 1}, "RP2 mod 2");
  for (long long p : {3, 5, 7}) v.expect(betti_mod(x, p) == std::vector<long long>{1, 0, 0}, "RP2 mod odd p");
  const auto z = integer_cohomology(rp2);
  v.expect(z.size() == 3 && to_string(z[0]) == "Z" && to_string(z[1]) == "0" && to_string(z[2]) == "Z/2",
           "RP2 integer cohomology");
  return v;
}

Verdict morse() {
  Verdict v;
  for (int n = 1; n <= 6; ++n) {
    MorseProfile prof;
    for (int i = 0; i <= n; ++i) prof.indices.push_back(2 * i);
    const BettiVector b = betti_from_diamond(diamond_pn(n));
    const auto q = morse_inequality_check(morse_polynomial(prof), IntPolynomial(b));
    v.expect(q && q->is_zero(), "P^n perfect");
  }
  for (int m = 1; m <= 5; ++m) {
    Eigen::VectorXd q = Eigen::VectorXd::Zero(m + 1);
    q(m) = 3;
    const MorseProfile prof = sphere_distance_morse(Eigen::VectorXd::Zero(m + 1), 1.0, q);
    v.expect(prof.indices == std::vector<int>{0, m}, "sphere indices");
    std::vector<BigInt> b(static_cast<std::size_t>(m + 1), BigInt(0));
    b.front() = 1;
    b.back() = 1;
    const auto res = morse_inequality_check(morse_polynomial(prof), IntPolynomial(b));
    v.expect(res && res->is_zero(), "sphere Q = 0");
  }
  // M - P = 2t leaves remainder -2 on division by 1 + t.
  const IntPolynomial m(std::vector<BigInt>{1, 2, 1});
  const IntPolynomial p(std::vector<BigInt>{1, 0, 1});
  v.expect(!morse_inequality_check(m, p).has_value(), "non-divisible case accepted");
  return v;
}

Verdict lefschetz() {
  Verdict v;
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= 6; ++d) {
      const auto r = lefschetz_pattern_check(betti_from_diamond(diamond_pn(n + 1)), hypersurface_betti(n, d), n);
      v.expect(r.passes, "n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  for (int m = 3; m <= 7; ++m) {
    for (int c = 1; c <= m - 2; ++c) {
      for (int d = 1; d <= 4; ++d) {
        std::vector<int> ds(static_cast<std::size_t>(c), d);
        ds[0] = 2;
        v.expect(complete_intersection_betti(m, ds)[1] == 0, "b_1 of a complete intersection");
      }
    }
  }
  return v;
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // 0: no time limit
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Hodge diamond of P^n, n <= 6", 1, pn_diamonds},
      {2, "h0(P^n, O(k)) against binomials and monomial enumeration", 0, sections},
      {3, "c(P^n) = (1+h)^(n+1) and c_1(K) = -(n+1), n <= 6", 0, chern_classes},
      {4, "quartic surface: K = 0, chi = 24, Betti (1,0,22,0,1)", 0, quartic},
      {5, "plane curve genus against (2 - chi)/2, d <= 8", 0, genus},
      {6, "integral of omega_FS over P^1 is 1", 1, fs_integral},
      {7, "curvature of O(1) equals omega_FS at 100 points, n <= 3", 10, curvature},
      {8, "sl(2) relations, hard Lefschetz, omega^n/n! = vol, n <= 4", 30, sl2},
      {9, "Kahler identities and Laplacians on monomial forms, n <= 3", 60, identities},
      {10, "Cech cohomology: circle, torus, RP2", 0, cech},
      {11, "Morse inequalities: P^n, spheres, a non-divisible case", 0, morse},
      {12, "Lefschetz hyperplane pattern and b_1 = 0 for complete intersections", 0, lefschetz},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) v.expect(false, "over the " + std::to_string(c.budget_s) + " s budget");
    std::printf("%s  criterion %2d: %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                v.ok ? "" : " -- ", v.note.c_str());
    failed += v.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
