#include "kahler/flat_forms.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kahler {

namespace {

void check_same_dim(const PolyForm& a, const PolyForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("polynomial forms of different ambient dimension");
}

void check_index(int dim, int k) {
  if (k < 1 || k > dim) throw std::invalid_argument("coordinate index out of range");
}

PolyForm sum_over_coordinates(int dim, const std::function<PolyForm(int)>& term) {
  PolyForm out(dim);
  for (int k = 1; k <= dim; ++k) out += term(k);
  return out;
}

// [A, B] a = A(B a) - B(A a)
using Op = std::function<PolyForm(const PolyForm&)>;
PolyForm commutator(const Op& a, const Op& b, const PolyForm& x) { return a(b(x)) - b(a(x)); }

const GaussianRational kI = GaussianRational::i();

}  // namespace

PolyForm::PolyForm(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxExteriorDim) throw std::invalid_argument("polynomial form dimension out of range");
}

PolyForm::PolyForm(const ExtForm& form) : PolyForm(Exponents(static_cast<std::size_t>(2 * form.dim()), 0), form) {}

PolyForm::PolyForm(Exponents exps, const ExtForm& form) : PolyForm(form.dim()) {
  if (exps.size() != static_cast<std::size_t>(2 * dim_)) throw std::invalid_argument("exponent vector has wrong length");
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
  add(exps, form);
}

PolyForm PolyForm::z(int dim, int k) {
  check_index(dim, k);
  Exponents e(static_cast<std::size_t>(2 * dim), 0);
  e[static_cast<std::size_t>(k - 1)] = 1;
  return {e, ExtForm::constant(dim, 1)};
}

PolyForm PolyForm::zbar(int dim, int k) {
  check_index(dim, k);
  Exponents e(static_cast<std::size_t>(2 * dim), 0);
  e[static_cast<std::size_t>(dim + k - 1)] = 1;
  return {e, ExtForm::constant(dim, 1)};
}

int PolyForm::polynomial_degree() const {
  int best = -1;
  for (const auto& [e, f] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

void PolyForm::add(const Exponents& exps, const ExtForm& form) {
  if (form.dim() != dim_) throw std::invalid_argument("polynomial forms of different ambient dimension");
  if (form.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, form);
  if (!inserted) {
    it->second += form;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  check_same_dim(*this, o);
  for (const auto& [e, f] : o.terms_) add(e, f);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  check_same_dim(*this, o);
  for (const auto& [e, f] : o.terms_) add(e, -f);
  return *this;
}

PolyForm& PolyForm::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, f] : terms_) f *= c;
  return *this;
}

std::string to_string(const PolyForm& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, f] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '[';
    bool any = false;
    for (int k = 0; k < 2 * a.dim(); ++k) {
      const int p = e[static_cast<std::size_t>(k)];
      if (p == 0) continue;
      if (any) os << ' ';
      any = true;
      os << (k < a.dim() ? "z" : "zb") << (k % a.dim() + 1);
      if (p > 1) os << '^' << p;
    }
    if (!any) os << '1';
    os << "] " << to_string(f);
  }
  return os.str();
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  check_same_dim(a, b);
  PolyForm out(a.dim());
  for (const auto& [ea, fa] : a.terms()) {
    for (const auto& [eb, fb] : b.terms()) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, wedge(fa, fb));
    }
  }
  return out;
}

PolyForm pointwise(const PolyForm& a, const std::function<ExtForm(const ExtForm&)>& op) {
  PolyForm out(a.dim());
  for (const auto& [e, f] : a.terms()) out.add(e, op(f));
  return out;
}

PolyForm partial(const PolyForm& a, int k, bool holomorphic) {
  check_index(a.dim(), k);
  const auto slot = static_cast<std::size_t>(holomorphic ? k - 1 : a.dim() + k - 1);
  PolyForm out(a.dim());
  for (const auto& [e, f] : a.terms()) {
    const int p = e[slot];
    if (p == 0) continue;
    Exponents lowered = e;
    --lowered[slot];
    out.add(lowered, GaussianRational(p) * f);
  }
  return out;
}

PolyForm creation_annihilation(int k, Ladder which, const PolyForm& a) {
  check_index(a.dim(), k);
  return pointwise(a, [k, which](const ExtForm& f) { return ladder(which, k, f); });
}

PolyForm del(const PolyForm& a) {
  return sum_over_coordinates(a.dim(), [&a](int k) { return creation_annihilation(k, Ladder::e, partial(a, k, true)); });
}

PolyForm delbar(const PolyForm& a) {
  return sum_over_coordinates(a.dim(),
                              [&a](int k) { return creation_annihilation(k, Ladder::ebar, partial(a, k, false)); });
}

PolyForm d(const PolyForm& a) { return del(a) + delbar(a); }

namespace {
PolyForm star(const PolyForm& a) { return pointwise(a, [](const ExtForm& f) { return hodge_star(f); }); }
}  // namespace

PolyForm del_star(const PolyForm& a) { return -star(delbar(star(a))); }
PolyForm delbar_star(const PolyForm& a) { return -star(del(star(a))); }
PolyForm d_star(const PolyForm& a) { return -star(d(star(a))); }

PolyForm del_star_ladder(const PolyForm& a) {
  return -sum_over_coordinates(a.dim(),
                               [&a](int k) { return partial(creation_annihilation(k, Ladder::i, a), k, false); });
}

PolyForm delbar_star_ladder(const PolyForm& a) {
  return -sum_over_coordinates(a.dim(),
                               [&a](int k) { return partial(creation_annihilation(k, Ladder::ibar, a), k, true); });
}

Laplacians laplacians(const PolyForm& a) {
  return {d(d_star(a)) + d_star(d(a)), del(del_star(a)) + del_star(del(a)),
          delbar(delbar_star(a)) + delbar_star(delbar(a))};
}

PolyForm lefschetz_L(const PolyForm& a) {
  return pointwise(a, [](const ExtForm& f) { return lefschetz_L(f); });
}

PolyForm lefschetz_dual(const PolyForm& a) {
  return pointwise(a, [](const ExtForm& f) { return lefschetz_dual(f); });
}

PolyForm counting_H(const PolyForm& a) {
  return pointwise(a, [](const ExtForm& f) { return counting_H(f); });
}

std::vector<IdentityResult> kahler_identity_check(const PolyForm& a) {
  const Op L = [](const PolyForm& x) { return lefschetz_L(x); };
  const Op Lam = [](const PolyForm& x) { return lefschetz_dual(x); };
  const Op D = [](const PolyForm& x) { return del(x); };
  const Op Db = [](const PolyForm& x) { return delbar(x); };
  const Op Ds = [](const PolyForm& x) { return del_star(x); };
  const Op Dbs = [](const PolyForm& x) { return delbar_star(x); };

  return {
      {"[L,del] = 0", commutator(L, D, a).is_zero()},
      {"[L,delbar] = 0", commutator(L, Db, a).is_zero()},
      {"[Lambda,del*] = 0", commutator(Lam, Ds, a).is_zero()},
      {"[Lambda,delbar*] = 0", commutator(Lam, Dbs, a).is_zero()},
      {"[Lambda,delbar] = -i del*", commutator(Lam, Db, a) == -kI * Ds(a)},
      {"[Lambda,del] = i delbar*", commutator(Lam, D, a) == kI * Dbs(a)},
      {"[delbar*,L] = i del", commutator(Dbs, L, a) == kI * D(a)},
      {"[del*,L] = -i delbar", commutator(Ds, L, a) == -kI * Db(a)},
  };
}

std::vector<IdentityResult> structural_check(const PolyForm& a) {
  const Laplacians lap = laplacians(a);
  const GaussianRational two(2);
  const PolyForm db = del(a);
  const PolyForm dbb = delbar(a);
  return {
      {"del^2 = 0", del(db).is_zero()},
      {"delbar^2 = 0", delbar(dbb).is_zero()},
      {"del delbar = -delbar del", del(dbb) == -delbar(db)},
      {"del* routes agree", del_star(a) == del_star_ladder(a)},
      {"delbar* routes agree", delbar_star(a) == delbar_star_ladder(a)},
      {"Delta = 2 Delta_del", lap.full == two * lap.del},
      {"Delta = 2 Delta_delbar", lap.full == two * lap.delbar},
      {"[L,Lambda] = H", lefschetz_L(lefschetz_dual(a)) - lefschetz_dual(lefschetz_L(a)) == counting_H(a)},
  };
}

namespace {

void enumerate_exponents(std::size_t slot, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (slot == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (int p = 0; p <= remaining; ++p) {
    cur[slot] = p;
    enumerate_exponents(slot + 1, remaining - p, cur, out);
  }
  cur[slot] = 0;
}

}  // namespace

std::vector<PolyForm> monomial_forms(int dim, int max_degree) {
  std::vector<Exponents> exps;
  Exponents cur(static_cast<std::size_t>(2 * dim), 0);
  enumerate_exponents(0, max_degree, cur, exps);
  std::vector<PolyForm> out;
  const Monomial top = (Monomial{1} << (2 * dim)) - 1;
  for (const auto& e : exps) {
    for (Monomial m = 0; m <= top; ++m) out.emplace_back(e, ExtForm(dim, m));
  }
  return out;
}

bool ladder_anticommutators_hold(int dim) {
  const Monomial top = (Monomial{1} << (2 * dim)) - 1;
  for (Monomial m = 0; m <= top; ++m) {
    const ExtForm a(dim, m);
    for (int k = 1; k <= dim; ++k) {
      for (int l = 1; l <= dim; ++l) {
        const ExtForm expected = k == l ? GaussianRational(2) * a : ExtForm(dim);
        auto anti = [&](Ladder x, int xi, Ladder y, int yi) {
          return ladder(x, xi, ladder(y, yi, a)) + ladder(y, yi, ladder(x, xi, a));
        };
        if (anti(Ladder::e, k, Ladder::i, l) != expected) return false;
        if (anti(Ladder::ebar, k, Ladder::ibar, l) != expected) return false;
        if (!anti(Ladder::e, k, Ladder::ibar, l).is_zero()) return false;
        if (!anti(Ladder::ebar, k, Ladder::i, l).is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace kahler
