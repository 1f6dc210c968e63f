#pragma once

#include "kahler/linalg.hpp"

#include <string>
#include <vector>

namespace kahler {

/// b_0, ..., b_{2n}.
using BettiVector = std::vector<BigInt>;

/// h^{p,q} for 0 <= p, q <= n; grid(p, q) = h^{p,q}.
class HodgeDiamond {
 public:
  /// All-zero diamond. Throws std::invalid_argument for n < 0.
  explicit HodgeDiamond(int n);
  /// Throws std::invalid_argument unless grid is square with nonnegative entries.
  explicit HodgeDiamond(IntMatrix grid);

  int dim() const { return static_cast<int>(grid_.rows()) - 1; }
  const IntMatrix& grid() const { return grid_; }
  const BigInt& operator()(int p, int q) const { return grid_(p, q); }
  /// Throws std::invalid_argument on a negative value.
  void set(int p, int q, const BigInt& value);

  friend bool operator==(const HodgeDiamond& a, const HodgeDiamond& b) { return a.grid_ == b.grid_; }

 private:
  IntMatrix grid_;
};

/// h^{p,q}(P^n) = 1 if p = q, else 0.
HodgeDiamond diamond_pn(int n);

/// b_k = sum_{p+q=k} h^{p,q}.
BettiVector betti_from_diamond(const HodgeDiamond& d);

/// Human-readable violations of h^{p,q} = h^{q,p}, h^{p,q} = h^{n-p,n-q},
/// b_k even for odd k, and h^{p,p} >= 1. Empty iff all hold.
std::vector<std::string> validate_diamond(const HodgeDiamond& d);

/// Betti numbers of a smooth complete intersection Y of the given degrees in
/// P^m: b_i = 1 for even i != dim Y, 0 for odd i != dim Y, and the middle one
/// from the Euler characteristic. Throws std::invalid_argument if dim Y < 1 or
/// the degrees are invalid, std::logic_error if the middle number comes out
/// negative.
BettiVector complete_intersection_betti(int m, const std::vector<int>& degrees);

/// Smooth degree-d hypersurface of dimension n in P^{n+1}.
BettiVector hypersurface_betti(int n, int d);

struct LefschetzReport {
  bool passes = true;
  std::vector<std::string> failures;
};

/// For Y a hyperplane-type section of X with dim Y = nY (so dim X = nY + 1):
/// b_i(X) = b_i(Y) for i < nY and b_nY(X) <= b_nY(Y).
LefschetzReport lefschetz_pattern_check(const BettiVector& bx, const BettiVector& by, int ny);

/// g = (d-1)(d-2)/2. Throws std::invalid_argument for d < 1.
BigInt plane_curve_genus(int d);

std::string to_string(const BettiVector& b);

}  // namespace kahler
