#include "kahler/hodge.hpp"

#include "kahler/chern.hpp"

#include <sstream>
#include <stdexcept>

namespace kahler {

HodgeDiamond::HodgeDiamond(int n) {
  if (n < 0) throw std::invalid_argument("negative diamond dimension");
  grid_ = IntMatrix::Zero(n + 1, n + 1);
}

HodgeDiamond::HodgeDiamond(IntMatrix grid) : grid_(std::move(grid)) {
  if (grid_.rows() != grid_.cols() || grid_.rows() == 0) throw std::invalid_argument("Hodge diamond grid must be square");
  for (Eigen::Index p = 0; p < grid_.rows(); ++p) {
    for (Eigen::Index q = 0; q < grid_.cols(); ++q) {
      if (grid_(p, q) < 0) throw std::invalid_argument("Hodge numbers must be nonnegative");
    }
  }
}

void HodgeDiamond::set(int p, int q, const BigInt& value) {
  if (p < 0 || q < 0 || p > dim() || q > dim()) throw std::invalid_argument("Hodge index out of range");
  if (value < 0) throw std::invalid_argument("Hodge numbers must be nonnegative");
  grid_(p, q) = value;
}

HodgeDiamond diamond_pn(int n) {
  HodgeDiamond d(n);
  for (int p = 0; p <= n; ++p) d.set(p, p, 1);
  return d;
}

BettiVector betti_from_diamond(const HodgeDiamond& d) {
  const int n = d.dim();
  BettiVector b(static_cast<std::size_t>(2 * n + 1), BigInt(0));
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) b[static_cast<std::size_t>(p + q)] += d(p, q);
  }
  return b;
}

std::vector<std::string> validate_diamond(const HodgeDiamond& d) {
  const int n = d.dim();
  std::vector<std::string> out;
  auto h = [](int p, int q) { return "h^{" + std::to_string(p) + "," + std::to_string(q) + "}"; };
  for (int p = 0; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      if (d(p, q) != d(q, p)) out.push_back("conjugation symmetry: " + h(p, q) + " != " + h(q, p));
    }
  }
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      const int sp = n - p;
      const int sq = n - q;
      // Report each unordered pair once.
      if (std::make_pair(p, q) < std::make_pair(sp, sq) && d(p, q) != d(sp, sq)) {
        out.push_back("Serre duality: " + h(p, q) + " != " + h(sp, sq));
      }
    }
  }
  const BettiVector b = betti_from_diamond(d);
  for (std::size_t k = 1; k < b.size(); k += 2) {
    if (b[k] % 2 != 0) out.push_back("odd Betti number b_" + std::to_string(k) + " is odd");
  }
  for (int p = 0; p <= n; ++p) {
    if (d(p, p) < 1) out.push_back("Kahler class: " + h(p, p) + " < 1");
  }
  return out;
}

BettiVector complete_intersection_betti(int m, const std::vector<int>& degrees) {
  const int n = m - static_cast<int>(degrees.size());
  if (n < 1) throw std::invalid_argument("complete intersection must have dimension at least 1");
  const BigInt chi = euler_characteristic(m, degrees);
  BettiVector b(static_cast<std::size_t>(2 * n + 1), BigInt(0));
  BigInt rest = 0;
  for (int i = 0; i <= 2 * n; ++i) {
    if (i == n) continue;
    b[static_cast<std::size_t>(i)] = i % 2 == 0 ? 1 : 0;
    rest += i % 2 == 0 ? b[static_cast<std::size_t>(i)] : -b[static_cast<std::size_t>(i)];
  }
  // chi = sum (-1)^i b_i.
  BigInt middle = chi - rest;
  if (n % 2 != 0) middle = -middle;
  if (middle < 0) throw std::logic_error("negative middle Betti number");
  b[static_cast<std::size_t>(n)] = middle;
  return b;
}

BettiVector hypersurface_betti(int n, int d) {
  if (n < 1) throw std::invalid_argument("hypersurface dimension must be at least 1");
  return complete_intersection_betti(n + 1, {d});
}

LefschetzReport lefschetz_pattern_check(const BettiVector& bx, const BettiVector& by, int ny) {
  if (ny < 0) throw std::invalid_argument("negative dimension");
  LefschetzReport rep;
  auto at = [](const BettiVector& b, int i) { return i < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(i)] : BigInt(0); };
  for (int i = 0; i <= ny; ++i) {
    const BigInt x = at(bx, i);
    const BigInt y = at(by, i);
    std::ostringstream os;
    if (i < ny && x != y) {
      os << "b_" << i << ": " << x << " (ambient) != " << y << " (section)";
    } else if (i == ny && x > y) {
      os << "b_" << i << ": " << x << " (ambient) > " << y << " (section), restriction cannot be injective";
    } else {
      continue;
    }
    rep.passes = false;
    rep.failures.push_back(os.str());
  }
  return rep;
}

BigInt plane_curve_genus(int d) {
  if (d < 1) throw std::invalid_argument("curve degree must be positive");
  return BigInt(d - 1) * (d - 2) / 2;
}

std::string to_string(const BettiVector& b) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << b[i];
  os << ')';
  return os.str();
}

}  // namespace kahler
