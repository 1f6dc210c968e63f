#include "kahler/exterior.hpp"

#include <array>
#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kahler {

namespace {

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxExteriorDim) {
    throw std::invalid_argument("exterior algebra dimension out of range: " + std::to_string(dim));
  }
}

void check_same_dim(const ExtForm& a, const ExtForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("exterior forms of different ambient dimension");
}

Monomial full_mask(int dim) { return (Monomial{1} << (2 * dim)) - 1; }

GaussianRational power_of_two(int e) { return GaussianRational(Rational(BigInt(1) << e)); }

// Per-dimension table of the Hodge star on monomials: *m = coeff * target.
struct StarTable {
  std::vector<Monomial> target;
  std::vector<GaussianRational> coeff;
};

StarTable build_star_table(int dim) {
  const ExtForm vol = volume_form(dim);
  const Monomial top = full_mask(dim);
  const GaussianRational vol_coeff = vol.coeff(top);
  const std::size_t size = std::size_t{1} << (2 * dim);
  StarTable t{std::vector<Monomial>(size), std::vector<GaussianRational>(size)};
  for (Monomial m = 0; m <= top; ++m) {
    // For basis b = conj(m) only: conj(m) ^ *m = |conj m|^2 vol and every
    // other monomial wedges *m to zero, so *m is a multiple of the
    // complement of conj(m).
    const ExtForm cm = conj(ExtForm(dim, m));
    const Monomial conj_mono = cm.terms().begin()->first;
    const Monomial comp = top ^ conj_mono;
    const GaussianRational w = wedge(cm, ExtForm(dim, comp)).coeff(top);
    t.target[m] = comp;
    t.coeff[m] = power_of_two(degree(m)) * vol_coeff / w;
  }
  return t;
}

const StarTable& star_table(int dim) {
  check_dim(dim);
  static std::array<std::once_flag, kMaxExteriorDim + 1> flags;
  static std::array<StarTable, kMaxExteriorDim + 1> tables;
  std::call_once(flags[static_cast<std::size_t>(dim)],
                 [dim] { tables[static_cast<std::size_t>(dim)] = build_star_table(dim); });
  return tables[static_cast<std::size_t>(dim)];
}

}  // namespace

int merge_sign(Monomial a, Monomial b) {
  int swaps = 0;
  while (b != 0) {
    const int y = std::countr_zero(b);
    swaps += std::popcount(a >> (y + 1));
    b &= b - 1;
  }
  return (swaps & 1) != 0 ? -1 : 1;
}

int degree(Monomial m) { return std::popcount(m); }

Bidegree bidegree(int dim, Monomial m) {
  const Monomial holo = m & ((Monomial{1} << dim) - 1);
  return {std::popcount(holo), std::popcount(m >> dim)};
}

Monomial holomorphic_bit(int dim, int k) {
  if (k < 1 || k > dim) throw std::invalid_argument("coordinate index out of range");
  return Monomial{1} << (k - 1);
}

Monomial antiholomorphic_bit(int dim, int k) {
  if (k < 1 || k > dim) throw std::invalid_argument("coordinate index out of range");
  return Monomial{1} << (dim + k - 1);
}

std::vector<Monomial> monomials_of_degree(int dim, int k) {
  check_dim(dim);
  std::vector<Monomial> out;
  for (Monomial m = 0; m <= full_mask(dim); ++m) {
    if (degree(m) == k) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> monomials_of_bidegree(int dim, Bidegree bd) {
  check_dim(dim);
  std::vector<Monomial> out;
  for (Monomial m = 0; m <= full_mask(dim); ++m) {
    if (bidegree(dim, m) == bd) out.push_back(m);
  }
  return out;
}

ExtForm::ExtForm(int dim) : dim_(dim) { check_dim(dim); }

ExtForm::ExtForm(int dim, Monomial m, GaussianRational c) : dim_(dim) {
  check_dim(dim);
  if ((m & ~full_mask(dim)) != 0) throw std::invalid_argument("monomial outside the ambient dimension");
  add(m, c);
}

ExtForm ExtForm::constant(int dim, GaussianRational c) { return ExtForm(dim, 0, std::move(c)); }
ExtForm ExtForm::dz(int dim, int k) { return ExtForm(dim, holomorphic_bit(dim, k)); }
ExtForm ExtForm::dzbar(int dim, int k) { return ExtForm(dim, antiholomorphic_bit(dim, k)); }

ExtForm ExtForm::from_indices(int dim, std::span<const int> holo, std::span<const int> anti, GaussianRational c) {
  ExtForm out = constant(dim, std::move(c));
  for (int k : holo) out = wedge(out, dz(dim, k));
  for (int k : anti) out = wedge(out, dzbar(dim, k));
  return out;
}

GaussianRational ExtForm::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void ExtForm::add(Monomial m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> ExtForm::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int k = degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (degree(m) != k) return std::nullopt;
  }
  return k;
}

std::optional<Bidegree> ExtForm::homogeneous_bidegree() const {
  if (terms_.empty()) return std::nullopt;
  const Bidegree bd = bidegree(dim_, terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (bidegree(dim_, m) != bd) return std::nullopt;
  }
  return bd;
}

ExtForm ExtForm::degree_part(int k) const {
  ExtForm out(dim_);
  for (const auto& [m, c] : terms_) {
    if (degree(m) == k) out.terms_.emplace(m, c);
  }
  return out;
}

ExtForm ExtForm::bidegree_part(Bidegree bd) const {
  ExtForm out(dim_);
  for (const auto& [m, c] : terms_) {
    if (bidegree(dim_, m) == bd) out.terms_.emplace(m, c);
  }
  return out;
}

ExtForm& ExtForm::operator+=(const ExtForm& o) {
  check_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ExtForm& ExtForm::operator-=(const ExtForm& o) {
  check_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ExtForm& ExtForm::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string to_string(const ExtForm& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    if (m == 0) continue;
    for (int k = 1; k <= a.dim(); ++k) {
      if ((m & holomorphic_bit(a.dim(), k)) != 0) os << " dz" << k;
    }
    for (int k = 1; k <= a.dim(); ++k) {
      if ((m & antiholomorphic_bit(a.dim(), k)) != 0) os << " dzb" << k;
    }
  }
  return os.str();
}

ExtForm wedge(const ExtForm& a, const ExtForm& b) {
  check_same_dim(a, b);
  ExtForm out(a.dim());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma & mb) != 0) continue;
      GaussianRational c = ca * cb;
      if (merge_sign(ma, mb) < 0) c = -c;
      out.add(ma | mb, c);
    }
  }
  return out;
}

ExtForm conj(const ExtForm& a) {
  const int n = a.dim();
  const Monomial low = (Monomial{1} << n) - 1;
  ExtForm out(n);
  for (const auto& [m, c] : a.terms()) {
    const Monomial holo = m & low;
    const Monomial anti = m >> n;
    // conj(dz_I ^ dzbar_J) = dzbar_I ^ dz_J = (-1)^{|I||J|} dz_J ^ dzbar_I
    GaussianRational v = conj(c);
    if ((std::popcount(holo) * std::popcount(anti)) % 2 != 0) v = -v;
    out.add(anti | (holo << n), v);
  }
  return out;
}

GaussianRational inner(const ExtForm& a, const ExtForm& b) {
  check_same_dim(a, b);
  GaussianRational sum(0);
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(m);
    if (it == b.terms().end()) continue;
    sum += c * conj(it->second) * power_of_two(degree(m));
  }
  return sum;
}

ExtForm kahler_form(int dim) {
  ExtForm omega(dim);
  const GaussianRational half_i(Rational(0), make_rational(1, 2));
  for (int k = 1; k <= dim; ++k) omega += half_i * wedge(ExtForm::dz(dim, k), ExtForm::dzbar(dim, k));
  return omega;
}

ExtForm volume_form(int dim) {
  ExtForm vol = ExtForm::constant(dim, 1);
  const GaussianRational half(make_rational(1, 2));
  const GaussianRational inv_two_i = GaussianRational(1) / GaussianRational(Rational(0), Rational(2));
  for (int k = 1; k <= dim; ++k) {
    const ExtForm dx = half * (ExtForm::dz(dim, k) + ExtForm::dzbar(dim, k));
    const ExtForm dy = inv_two_i * (ExtForm::dz(dim, k) - ExtForm::dzbar(dim, k));
    vol = wedge(wedge(vol, dx), dy);
  }
  return vol;
}

ExtForm hodge_star(const ExtForm& a) {
  const StarTable& t = star_table(a.dim());
  ExtForm out(a.dim());
  for (const auto& [m, c] : a.terms()) out.add(t.target[m], c * t.coeff[m]);
  return out;
}

ExtForm hodge_star_inverse(const ExtForm& a) {
  const StarTable& t = star_table(a.dim());
  const Monomial top = full_mask(a.dim());
  ExtForm out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    // * sends source s to target(s) = top ^ conj-monomial(s), so the source
    // of m is the conjugate monomial of its complement.
    const Monomial comp = top ^ m;
    const Monomial src = (comp >> a.dim()) | ((comp & ((Monomial{1} << a.dim()) - 1)) << a.dim());
    out.add(src, c / t.coeff[src]);
  }
  return out;
}

ExtForm ladder(Ladder which, int k, const ExtForm& a) {
  const int n = a.dim();
  const bool holo = which == Ladder::e || which == Ladder::i;
  const Monomial bit = holo ? holomorphic_bit(n, k) : antiholomorphic_bit(n, k);
  ExtForm out(n);
  if (which == Ladder::e || which == Ladder::ebar) {
    for (const auto& [m, c] : a.terms()) {
      if ((m & bit) != 0) continue;
      out.add(m | bit, merge_sign(bit, m) < 0 ? -c : c);
    }
    return out;
  }
  // Adjoint of the creation operator: i(dz_k ^ rest) = |dz_k|^2 rest = 2 rest.
  const GaussianRational two(2);
  for (const auto& [m, c] : a.terms()) {
    if ((m & bit) == 0) continue;
    const Monomial rest = m & ~bit;
    GaussianRational v = two * c;
    if (merge_sign(bit, rest) < 0) v = -v;
    out.add(rest, v);
  }
  return out;
}

ExtForm lefschetz_L(const ExtForm& a) { return wedge(kahler_form(a.dim()), a); }

ExtForm lefschetz_dual(const ExtForm& a) {
  const GaussianRational minus_half_i(Rational(0), make_rational(-1, 2));
  ExtForm out(a.dim());
  for (int k = 1; k <= a.dim(); ++k) out += ladder(Ladder::ibar, k, ladder(Ladder::i, k, a));
  return minus_half_i * out;
}

ExtForm lefschetz_dual_via_star(const ExtForm& a) { return hodge_star_inverse(lefschetz_L(hodge_star(a))); }

ExtForm counting_H(const ExtForm& a) {
  ExtForm out(a.dim());
  for (const auto& [m, c] : a.terms()) out.add(m, c * GaussianRational(degree(m) - a.dim()));
  return out;
}

namespace {

ExtForm L_power(const ExtForm& a, int j) {
  ExtForm out = a;
  for (int i = 0; i < j; ++i) out = lefschetz_L(out);
  return out;
}

// Decomposition of a form of pure bidegree (p,q). Unknowns are the
// coefficients of beta_j in bidegree (p-j, q-j); equations are
// sum_j L^j beta_j = a together with Lambda beta_j = 0.
std::vector<PrimitivePiece> decompose_bidegree(const ExtForm& a, Bidegree bd) {
  const int n = a.dim();
  struct Block {
    int j;
    std::vector<Monomial> basis;
    Eigen::Index offset;
  };
  std::vector<Block> blocks;
  Eigen::Index unknowns = 0;
  for (int j = 0; j <= std::min(bd.p, bd.q); ++j) {
    const Bidegree sub{bd.p - j, bd.q - j};
    if (sub.p + sub.q > n) continue;  // no primitive forms above degree n
    auto basis = monomials_of_bidegree(n, sub);
    blocks.push_back({j, std::move(basis), unknowns});
    unknowns += static_cast<Eigen::Index>(blocks.back().basis.size());
  }

  const auto target = monomials_of_bidegree(n, bd);
  std::map<Monomial, Eigen::Index> target_row;
  for (std::size_t r = 0; r < target.size(); ++r) target_row[target[r]] = static_cast<Eigen::Index>(r);

  // Rows: reconstruction equations, then primitivity equations per block.
  Eigen::Index rows = static_cast<Eigen::Index>(target.size());
  std::vector<std::map<Monomial, Eigen::Index>> prim_rows(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Bidegree sub{bd.p - blocks[b].j - 1, bd.q - blocks[b].j - 1};
    if (sub.p < 0 || sub.q < 0) continue;
    for (Monomial m : monomials_of_bidegree(n, sub)) prim_rows[b][m] = rows++;
  }

  ExactMatrix sys = ExactMatrix::Zero(rows, unknowns);
  ExactVector rhs = ExactVector::Zero(rows);
  for (const auto& [m, c] : a.terms()) rhs(target_row.at(m)) = c;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Block& blk = blocks[b];
    for (std::size_t u = 0; u < blk.basis.size(); ++u) {
      const Eigen::Index col = blk.offset + static_cast<Eigen::Index>(u);
      const ExtForm e(n, blk.basis[u]);
      const ExtForm raised = L_power(e, blk.j);
      const ExtForm lowered = lefschetz_dual(e);
      for (const auto& [m, c] : raised.terms()) sys(target_row.at(m), col) = c;
      for (const auto& [m, c] : lowered.terms()) sys(prim_rows[b].at(m), col) = c;
    }
  }

  ExactVector x;
  if (!solve_linear(sys, rhs, x)) {
    throw std::logic_error("Lefschetz decomposition system is inconsistent");
  }
  std::vector<PrimitivePiece> out;
  for (const Block& blk : blocks) {
    ExtForm beta(n);
    for (std::size_t u = 0; u < blk.basis.size(); ++u) {
      beta.add(blk.basis[u], x(blk.offset + static_cast<Eigen::Index>(u)));
    }
    out.push_back({blk.j, std::move(beta)});
  }
  return out;
}

}  // namespace

std::vector<PrimitivePiece> primitive_decompose(const ExtForm& a) {
  if (a.is_zero()) return {};
  if (!a.homogeneous_degree()) throw std::invalid_argument("primitive_decompose needs a homogeneous form");
  std::map<int, ExtForm> by_power;
  std::map<Bidegree, bool> seen;
  for (const auto& [m, c] : a.terms()) seen[bidegree(a.dim(), m)] = true;
  for (const auto& [bd, unused] : seen) {
    for (auto& piece : decompose_bidegree(a.bidegree_part(bd), bd)) {
      auto [it, inserted] = by_power.try_emplace(piece.power, a.dim());
      it->second += piece.beta;
    }
  }
  std::vector<PrimitivePiece> out;
  for (auto& [j, beta] : by_power) {
    if (!beta.is_zero()) out.push_back({j, std::move(beta)});
  }
  return out;
}

ExtForm reconstruct(int dim, const std::vector<PrimitivePiece>& pieces) {
  ExtForm out(dim);
  for (const auto& piece : pieces) out += L_power(piece.beta, piece.power);
  return out;
}

Sl2Report verify_sl2(int dim) {
  if (dim < 1) throw std::invalid_argument("verify_sl2 needs n >= 1");
  check_dim(dim);
  Sl2Report rep;
  rep.dim = dim;
  for (Monomial m = 0; m <= full_mask(dim); ++m) {
    const ExtForm e(dim, m);
    const ExtForm Le = lefschetz_L(e);
    const ExtForm Ae = lefschetz_dual(e);
    const ExtForm He = counting_H(e);
    if (counting_H(Le) - lefschetz_L(He) != GaussianRational(2) * Le) rep.h_l = false;
    if (counting_H(Ae) - lefschetz_dual(He) != GaussianRational(-2) * Ae) rep.h_lambda = false;
    if (lefschetz_L(Ae) - lefschetz_dual(Le) != He) rep.l_lambda = false;
    ++rep.basis_size;
  }
  return rep;
}

ExactMatrix operator_matrix(int dim, int from, int to, const std::function<ExtForm(const ExtForm&)>& op) {
  const auto dom = monomials_of_degree(dim, from);
  const auto cod = monomials_of_degree(dim, to);
  std::map<Monomial, Eigen::Index> row;
  for (std::size_t r = 0; r < cod.size(); ++r) row[cod[r]] = static_cast<Eigen::Index>(r);
  ExactMatrix mat = ExactMatrix::Zero(static_cast<Eigen::Index>(cod.size()), static_cast<Eigen::Index>(dom.size()));
  for (std::size_t c = 0; c < dom.size(); ++c) {
    const ExtForm image = op(ExtForm(dim, dom[c]));
    for (const auto& [m, v] : image.terms()) {
      auto it = row.find(m);
      if (it == row.end()) throw std::logic_error("operator left the declared codomain degree");
      mat(it->second, static_cast<Eigen::Index>(c)) = v;
    }
  }
  return mat;
}

bool hard_lefschetz_check(int dim, int k) {
  if (k < 0 || k > dim) throw std::invalid_argument("hard Lefschetz needs 0 <= k <= n");
  const int power = dim - k;
  const ExactMatrix mat = operator_matrix(dim, k, 2 * dim - k, [power](const ExtForm& e) { return L_power(e, power); });
  return mat.rows() == mat.cols() && rank(mat) == mat.cols();
}

}  // namespace kahler
