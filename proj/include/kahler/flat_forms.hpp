#pragma once

#include "kahler/exterior.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace kahler {

/// Exponents of z_1..z_n followed by those of zbar_1..zbar_n.
using Exponents = std::vector<int>;

/// Differential form on flat C^n whose coefficients are polynomials in z and
/// zbar over Q(i). Stored as sum over coefficient monomials z^a zbar^b of a
/// constant-coefficient exterior form; empty exterior parts are dropped.
class PolyForm {
 public:
  using Terms = std::map<Exponents, ExtForm>;

  explicit PolyForm(int dim);
  PolyForm(const ExtForm& form);  // NOLINT(google-explicit-constructor): constant coefficients
  PolyForm(Exponents exps, const ExtForm& form);

  static PolyForm z(int dim, int k);
  static PolyForm zbar(int dim, int k);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total polynomial degree among the terms, or -1 for zero.
  int polynomial_degree() const;

  void add(const Exponents& exps, const ExtForm& form);

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const GaussianRational& c);

  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator-(PolyForm a) { return a *= GaussianRational(-1); }
  friend PolyForm operator*(const GaussianRational& c, PolyForm a) { return a *= c; }
  friend bool operator==(const PolyForm& a, const PolyForm& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }
  friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }

 private:
  int dim_;
  Terms terms_;
};

std::string to_string(const PolyForm& a);

/// Product of coefficients and wedge of the form parts.
PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// Applies a C-linear operator on the exterior algebra coefficient-wise.
PolyForm pointwise(const PolyForm& a, const std::function<ExtForm(const ExtForm&)>& op);

/// d/dz_k (holomorphic = true) or d/dzbar_k on the coefficients.
PolyForm partial(const PolyForm& a, int k, bool holomorphic);

PolyForm del(const PolyForm& a);
PolyForm delbar(const PolyForm& a);
PolyForm d(const PolyForm& a);

/// del* = -* delbar *, delbar* = -* del *, d* = -* d *.
PolyForm del_star(const PolyForm& a);
PolyForm delbar_star(const PolyForm& a);
PolyForm d_star(const PolyForm& a);

/// The same adjoints assembled from the ladder operators:
/// del* = -sum_k dbar_k i_k, delbar* = -sum_k d_k ibar_k.
PolyForm del_star_ladder(const PolyForm& a);
PolyForm delbar_star_ladder(const PolyForm& a);

struct Laplacians {
  PolyForm full;     // d d* + d* d
  PolyForm del;      // del del* + del* del
  PolyForm delbar;   // delbar delbar* + delbar* delbar
};

Laplacians laplacians(const PolyForm& a);

/// e_k, ebar_k, i_k, ibar_k applied pointwise. Throws std::invalid_argument
/// for k outside 1..n.
PolyForm creation_annihilation(int k, Ladder which, const PolyForm& a);

PolyForm lefschetz_L(const PolyForm& a);
PolyForm lefschetz_dual(const PolyForm& a);
PolyForm counting_H(const PolyForm& a);

struct IdentityResult {
  std::string name;
  bool holds = false;
};

/// Evaluates both sides of every Kahler identity on `a`:
/// [L,del] = [L,delbar] = 0, [Lambda,del*] = [Lambda,delbar*] = 0,
/// [Lambda,delbar] = -i del*, [Lambda,del] = i delbar*,
/// [delbar*,L] = i del, [del*,L] = -i delbar.
std::vector<IdentityResult> kahler_identity_check(const PolyForm& a);

/// del^2 = delbar^2 = 0, del delbar = -delbar del, both adjoint routes agree,
/// Laplacian relation full = 2 del = 2 delbar, and [L, Lambda] = H.
std::vector<IdentityResult> structural_check(const PolyForm& a);

/// Every z^a zbar^b dz_I ^ dzbar_J with |a| + |b| <= max_degree.
std::vector<PolyForm> monomial_forms(int dim, int max_degree);

/// Ladder anticommutators on all constant basis forms of C^n:
/// e_k i_l + i_l e_k = 2 delta_kl, e_k ibar_l + ibar_l e_k = 0, and the
/// conjugate relations.
bool ladder_anticommutators_hold(int dim);

}  // namespace kahler
