#include "kahler/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace kahler {

namespace {

using Index = Eigen::Index;

// Floor-free division with remainder of the same sign as the dividend;
// sufficient for Euclid steps since only |remainder| < |divisor| matters.
BigInt quotient(const BigInt& a, const BigInt& b) { return a / b; }

struct SmithWork {
  IntMatrix a;
  IntMatrix u;
  IntMatrix v;

  void swap_rows(Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
  }
  void swap_cols(Index i, Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
  }
  // row_dst -= q * row_src
  void sub_row(Index dst, Index src, const BigInt& q) {
    for (Index c = 0; c < a.cols(); ++c) a(dst, c) -= q * a(src, c);
    for (Index c = 0; c < u.cols(); ++c) u(dst, c) -= q * u(src, c);
  }
  void sub_col(Index dst, Index src, const BigInt& q) {
    for (Index r = 0; r < a.rows(); ++r) a(r, dst) -= q * a(r, src);
    for (Index r = 0; r < v.rows(); ++r) v(r, dst) -= q * v(r, src);
  }
  void negate_row(Index i) {
    a.row(i) = -a.row(i);
    u.row(i) = -u.row(i);
  }

  // Smallest |entry| among the nonzero entries of the trailing block.
  bool find_pivot(Index t, Index& pr, Index& pc) const {
    bool found = false;
    BigInt best;
    for (Index r = t; r < a.rows(); ++r) {
      for (Index c = t; c < a.cols(); ++c) {
        if (a(r, c).is_zero()) continue;
        BigInt m = mp::abs(a(r, c));
        if (!found || m < best) {
          best = m;
          pr = r;
          pc = c;
          found = true;
        }
      }
    }
    return found;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  SmithWork w{m, IntMatrix::Identity(rows, rows), IntMatrix::Identity(cols, cols)};

  const Index diag = std::min(rows, cols);
  for (Index t = 0; t < diag; ++t) {
    Index pr = t;
    Index pc = t;
    if (!w.find_pivot(t, pr, pc)) break;
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    for (;;) {
      bool dirty = false;
      for (Index r = t + 1; r < rows; ++r) {
        if (w.a(r, t).is_zero()) continue;
        w.sub_row(r, t, quotient(w.a(r, t), w.a(t, t)));
        if (!w.a(r, t).is_zero()) dirty = true;
      }
      for (Index c = t + 1; c < cols; ++c) {
        if (w.a(t, c).is_zero()) continue;
        w.sub_col(c, t, quotient(w.a(t, c), w.a(t, t)));
        if (!w.a(t, c).is_zero()) dirty = true;
      }
      if (dirty) {
        // A nonzero remainder is smaller than the pivot; bring the smallest
        // entry of row t / column t to the corner and repeat.
        Index br = t;
        Index bc = t;
        BigInt best = mp::abs(w.a(t, t));
        for (Index r = t + 1; r < rows; ++r) {
          if (!w.a(r, t).is_zero() && mp::abs(w.a(r, t)) < best) {
            best = mp::abs(w.a(r, t));
            br = r;
            bc = t;
          }
        }
        for (Index c = t + 1; c < cols; ++c) {
          if (!w.a(t, c).is_zero() && mp::abs(w.a(t, c)) < best) {
            best = mp::abs(w.a(t, c));
            br = t;
            bc = c;
          }
        }
        w.swap_rows(t, br);
        w.swap_cols(t, bc);
        continue;
      }

      // Row and column t are clear; enforce divisibility of the rest.
      Index bad_r = -1;
      for (Index r = t + 1; r < rows && bad_r < 0; ++r) {
        for (Index c = t + 1; c < cols; ++c) {
          if (!(w.a(r, c) % w.a(t, t)).is_zero()) {
            bad_r = r;
            break;
          }
        }
      }
      if (bad_r < 0) break;
      // row_t += row_bad, then re-clear.
      w.sub_row(t, bad_r, BigInt(-1));
    }
    if (w.a(t, t) < 0) w.negate_row(t);
  }
  return SmithForm{std::move(w.u), std::move(w.a), std::move(w.v)};
}

std::vector<BigInt> SmithForm::invariant_factors() const {
  std::vector<BigInt> out;
  const Index diag = std::min(D.rows(), D.cols());
  for (Index i = 0; i < diag; ++i) {
    if (D(i, i).is_zero()) break;
    out.push_back(D(i, i));
  }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return BigInt(1);
  IntMatrix a = m;
  BigInt sign(1);
  BigInt prev(1);
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k).is_zero()) {
      Index p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return BigInt(0);
      a.row(p).swap(a.row(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Eigen::Index rank(const IntMatrix& m) { return rank(to_exact(m)); }

ExactMatrix to_exact(const IntMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) out(r, c) = GaussianRational(Rational(m(r, c)));
  }
  return out;
}

std::string to_string(const IntegerGroup& g) {
  std::ostringstream os;
  bool any = false;
  if (g.free_rank > 0) {
    os << 'Z';
    if (g.free_rank > 1) os << '^' << g.free_rank;
    any = true;
  }
  for (const auto& t : g.torsion) {
    if (any) os << " + ";
    os << "Z/" << t;
    any = true;
  }
  if (!any) os << '0';
  return os.str();
}

IntegerGroup subquotient(Eigen::Index dim, const IntMatrix& incoming, const IntMatrix& outgoing) {
  if (incoming.rows() != dim || outgoing.cols() != dim) throw std::invalid_argument("subquotient: shape mismatch");
  IntegerGroup g;
  const auto in = smith_normal_form(incoming).invariant_factors();
  g.free_rank = dim - rank(outgoing) - static_cast<Eigen::Index>(in.size());
  for (const auto& d : in) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

}  // namespace kahler
