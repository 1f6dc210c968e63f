#pragma once

// Cech cohomology of a sheaf given as linear-algebra data on a finite cover.
//
// Covers are abstract. The nerve and the sections over each nonempty
// intersection are taken as given; nothing here can check that the cover is
// good (that every intersection is contractible), and for a cover that is
// not good the output is the cohomology of that cover, which may differ from
// the sheaf cohomology of the space. The caller asserts goodness.

#include "kahler/linalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kahler {

/// Strictly increasing open-set indices i_0 < ... < i_k, naming U_{i_0...i_k}.
using Simplex = std::vector<int>;

/// Nonempty intersections of a finite cover, grouped by k and sorted
/// lexicographically within each group.
class Nerve {
 public:
  /// Throws std::invalid_argument unless every simplex is strictly
  /// increasing, within [0, num_opens), and every face is listed.
  Nerve(int num_opens, std::vector<Simplex> simplices);

  /// Downward closure of the given facets.
  static Nerve from_facets(int num_opens, const std::vector<Simplex>& facets);

  int num_opens() const { return num_opens_; }
  /// Largest k with a nonempty (k+1)-fold intersection, or -1 if empty.
  int top_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
  const std::vector<Simplex>& simplices(int k) const;
  std::vector<Simplex> all_simplices() const;
  /// Position of s within simplices(|s| - 1); -1 if absent.
  int index_of(const Simplex& s) const;

 private:
  int num_opens_;
  std::vector<std::vector<Simplex>> by_degree_;
  std::map<Simplex, int> index_;
};

/// Face of s with the j-th index removed.
Simplex face(const Simplex& s, std::size_t j);

/// Sections over each listed intersection and restriction maps
/// F(face) -> F(simplex), with rows = dim F(simplex), cols = dim F(face).
struct SheafData {
  std::map<Simplex, int> dims;
  std::map<std::pair<Simplex, Simplex>, ExactMatrix> restrictions;  // key: (simplex, face)
};

class CechComplex {
 public:
  /// Validates shapes and the composition rule along every chain of faces,
  /// assembles the coboundaries and asserts delta o delta = 0. Throws
  /// std::invalid_argument on inconsistent sheaf data.
  CechComplex(Nerve nerve, SheafData sheaf);

  const Nerve& nerve() const { return nerve_; }
  const SheafData& sheaf() const { return sheaf_; }
  /// dim C^k for k = 0..top.
  const std::vector<Eigen::Index>& cochain_dims() const { return cochain_dims_; }
  /// delta^k : C^k -> C^{k+1}. Zero (possibly 0 x n) past the top degree.
  ExactMatrix coboundary(int k) const;

 private:
  Nerve nerve_;
  SheafData sheaf_;
  std::vector<Eigen::Index> cochain_dims_;
  std::vector<std::vector<Eigen::Index>> offsets_;
  std::vector<ExactMatrix> delta_;
};

/// Rank-r constant sheaf: every section space has dimension r and every
/// restriction is the identity.
CechComplex constant_sheaf_complex(const Nerve& nerve, int rank);

/// dim H^k = dim ker delta^k - rank delta^{k-1}, k = 0..top.
std::vector<Eigen::Index> cohomology_dims(const CechComplex& c);

/// Integer delta^k for the constant sheaf Z.
IntMatrix integer_coboundary(const Nerve& nerve, int k);

/// H^k(nerve; Z) from the Smith normal forms of the integer coboundaries.
std::vector<IntegerGroup> integer_cohomology(const Nerve& nerve);

/// Barycentric subdivision: vertices are the simplices of the input, facets
/// are maximal chains under inclusion.
Nerve barycentric_subdivision(const Nerve& nerve);

}  // namespace kahler
