#pragma once

#include "kahler/linalg.hpp"
#include "kahler/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kahler {

/// Largest ambient complex dimension supported by the exterior algebra.
inline constexpr int kMaxExteriorDim = 8;

/// A basis monomial dz_I ^ dzbar_J as a bit mask over 2n slots: bit k-1 is
/// dz_k, bit n+k-1 is dzbar_k. Monomials are always read in the canonical
/// order dz_1 < ... < dz_n < dzbar_1 < ... < dzbar_n.
using Monomial = std::uint32_t;

struct Bidegree {
  int p = 0;
  int q = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Sign (+1 / -1) of the permutation that sorts the concatenation a, b of two
/// disjoint monomials into canonical order.
int merge_sign(Monomial a, Monomial b);

int degree(Monomial m);
Bidegree bidegree(int dim, Monomial m);
Monomial holomorphic_bit(int dim, int k);
Monomial antiholomorphic_bit(int dim, int k);
/// All monomials of total degree k, ascending.
std::vector<Monomial> monomials_of_degree(int dim, int k);
std::vector<Monomial> monomials_of_bidegree(int dim, Bidegree bd);

/// Element of the complexified exterior algebra of C^n, as a sparse map from
/// basis monomials to exact scalars. Zero coefficients are never stored.
class ExtForm {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  explicit ExtForm(int dim);
  ExtForm(int dim, Monomial m, GaussianRational c = GaussianRational(1));

  static ExtForm constant(int dim, GaussianRational c);
  static ExtForm dz(int dim, int k);
  static ExtForm dzbar(int dim, int k);
  /// dz_{holo[0]} ^ ... ^ dzbar_{anti[0]} ^ ..., in the given (1-based, possibly
  /// unsorted) order; the sign of sorting is applied.
  static ExtForm from_indices(int dim, std::span<const int> holo, std::span<const int> anti,
                              GaussianRational c = GaussianRational(1));

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coeff(Monomial m) const;

  void add(Monomial m, const GaussianRational& c);

  /// Total degree if every term has the same degree.
  std::optional<int> homogeneous_degree() const;
  std::optional<Bidegree> homogeneous_bidegree() const;
  ExtForm degree_part(int k) const;
  ExtForm bidegree_part(Bidegree bd) const;

  ExtForm& operator+=(const ExtForm& o);
  ExtForm& operator-=(const ExtForm& o);
  ExtForm& operator*=(const GaussianRational& c);

  friend ExtForm operator+(ExtForm a, const ExtForm& b) { return a += b; }
  friend ExtForm operator-(ExtForm a, const ExtForm& b) { return a -= b; }
  friend ExtForm operator-(ExtForm a) { return a *= GaussianRational(-1); }
  friend ExtForm operator*(const GaussianRational& c, ExtForm a) { return a *= c; }
  friend ExtForm operator*(ExtForm a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const ExtForm& a, const ExtForm& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }
  friend bool operator!=(const ExtForm& a, const ExtForm& b) { return !(a == b); }

 private:
  int dim_;
  Terms terms_;
};

std::string to_string(const ExtForm& a);

/// Graded product. Throws std::invalid_argument on dimension mismatch.
ExtForm wedge(const ExtForm& a, const ExtForm& b);

/// Complex conjugation: dz_k <-> dzbar_k, coefficients conjugated.
ExtForm conj(const ExtForm& a);

/// Hermitian product, conjugate-linear in the second slot. The real coframe
/// {dx_k, dy_k} is orthonormal, so |dz_I ^ dzbar_J|^2 = 2^(|I|+|J|).
GaussianRational inner(const ExtForm& a, const ExtForm& b);

/// omega = (i/2) sum_k dz_k ^ dzbar_k.
ExtForm kahler_form(int dim);
/// dx_1 ^ dy_1 ^ ... ^ dx_n ^ dy_n, assembled from dx = (dz + dzbar)/2 and
/// dy = (dz - dzbar)/(2i).
ExtForm volume_form(int dim);

/// C-linear Hodge star fixed by a ^ *conj(b) = <a, b> vol.
/// Maps bidegree (p,q) to (n-q, n-p).
ExtForm hodge_star(const ExtForm& a);
ExtForm hodge_star_inverse(const ExtForm& a);

/// Creation/annihilation operators on the exterior algebra. `e` and `ebar`
/// wedge dz_k / dzbar_k on the left; `i` and `ibar` are their pointwise
/// adjoints.
enum class Ladder { e, ebar, i, ibar };
ExtForm ladder(Ladder which, int k, const ExtForm& a);

ExtForm lefschetz_L(const ExtForm& a);
/// Adjoint of L, computed as -(i/2) sum_k ibar_k i_k.
ExtForm lefschetz_dual(const ExtForm& a);
/// The same operator through *^-1 L *. Kept as an independent route.
ExtForm lefschetz_dual_via_star(const ExtForm& a);
/// Scales each degree-k component by (k - n).
ExtForm counting_H(const ExtForm& a);

struct PrimitivePiece {
  int power;      // j in L^j beta_j
  ExtForm beta;   // primitive, degree k - 2j
};

/// Lefschetz decomposition a = sum_j L^j beta_j with every beta_j primitive.
/// Only nonzero pieces are returned, ordered by j. Throws
/// std::invalid_argument if a is not homogeneous in total degree.
std::vector<PrimitivePiece> primitive_decompose(const ExtForm& a);

ExtForm reconstruct(int dim, const std::vector<PrimitivePiece>& pieces);

struct Sl2Report {
  int dim = 0;
  std::size_t basis_size = 0;
  bool h_l = true;       // [H, L] = 2L
  bool h_lambda = true;  // [H, Lambda] = -2 Lambda
  bool l_lambda = true;  // [L, Lambda] = H
  bool all() const { return h_l && h_lambda && l_lambda; }
};

Sl2Report verify_sl2(int dim);

/// True iff L^(n-k): degree k -> degree 2n-k has full rank. Throws
/// std::invalid_argument if k > n.
bool hard_lefschetz_check(int dim, int k);

/// Matrix of a linear operator between degree-`from` and degree-`to`
/// monomial bases (columns indexed by the domain basis).
ExactMatrix operator_matrix(int dim, int from, int to, const std::function<ExtForm(const ExtForm&)>& op);

}  // namespace kahler
