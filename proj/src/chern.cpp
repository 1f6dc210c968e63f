#include "kahler/chern.hpp"

#include <sstream>
#include <stdexcept>

namespace kahler {

namespace {

void check_same_truncation(const CohClass& a, const CohClass& b) {
  if (a.truncation() != b.truncation()) throw std::invalid_argument("cohomology classes with different truncation");
}

void check_degrees(int m, const std::vector<int>& degrees) {
  if (m < 1) throw std::invalid_argument("ambient projective dimension must be at least 1");
  for (int d : degrees) {
    if (d <= 0) throw std::invalid_argument("hypersurface degrees must be positive");
  }
  if (static_cast<int>(degrees.size()) > m) throw std::invalid_argument("more hypersurfaces than the ambient dimension");
}

}  // namespace

CohClass::CohClass(int m) : m_(m) {
  if (m < 0) throw std::invalid_argument("negative truncation degree");
  coeffs_.assign(static_cast<std::size_t>(m + 1), BigInt(0));
}

CohClass::CohClass(int m, const std::vector<BigInt>& coeffs) : CohClass(m) {
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = coeffs[i];
}

CohClass CohClass::one(int m) { return h_power(m, 0); }

CohClass CohClass::h_power(int m, int k) {
  CohClass c(m);
  if (k < 0) throw std::invalid_argument("negative power of h");
  if (k <= m) c.coeffs_[static_cast<std::size_t>(k)] = 1;
  return c;
}

CohClass CohClass::line_bundle(int m, const BigInt& d) { return CohClass(m, {BigInt(1), d}); }

BigInt CohClass::coeff(int k) const {
  if (k < 0 || k > m_) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

CohClass& CohClass::operator+=(const CohClass& o) {
  check_same_truncation(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CohClass& CohClass::operator*=(const CohClass& o) {
  check_same_truncation(*this, o);
  std::vector<BigInt> prod(coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  return *this;
}

std::string to_string(const CohClass& c) {
  std::ostringstream os;
  bool any = false;
  for (int k = 0; k <= c.truncation(); ++k) {
    BigInt a = c.coeff(k);
    if (a == 0) continue;
    if (any) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << '-';
      a = -a;
    }
    any = true;
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << 'h';
    if (k >= 2) os << '^' << k;
  }
  if (!any) os << '0';
  return os.str();
}

CohClass whitney_product(const CohClass& a, const CohClass& b) {
  if (!a.is_chern_series() || !b.is_chern_series()) throw std::invalid_argument("total Chern class must start with 1");
  return a * b;
}

CohClass chern_pn(int n) {
  if (n < 1) throw std::invalid_argument("chern_pn requires n >= 1");
  CohClass c = CohClass::one(n);
  for (int i = 0; i <= n; ++i) c = whitney_product(c, CohClass::line_bundle(n, 1));
  return c;
}

CohClass series_inverse(const CohClass& a) {
  if (!a.is_chern_series()) throw std::invalid_argument("series_inverse requires constant term 1");
  const int m = a.truncation();
  std::vector<BigInt> inv(static_cast<std::size_t>(m + 1), BigInt(0));
  inv[0] = 1;
  for (int k = 1; k <= m; ++k) {
    BigInt s = 0;
    for (int j = 1; j <= k; ++j) s += a.coeff(j) * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -s;
  }
  return CohClass(m, inv);
}

CohClass chern_complete_intersection(int m, const std::vector<int>& degrees) {
  check_degrees(m, degrees);
  CohClass c = chern_pn(m);
  for (int d : degrees) c = whitney_product(c, series_inverse(CohClass::line_bundle(m, d)));
  return c;
}

BigInt canonical_degree(int m, const std::vector<int>& degrees) {
  check_degrees(m, degrees);
  BigInt s = -(m + 1);
  for (int d : degrees) s += d;
  return s;
}

BigInt euler_characteristic(int m, const std::vector<int>& degrees) {
  const CohClass c = chern_complete_intersection(m, degrees);
  BigInt deg = 1;
  for (int d : degrees) deg *= d;
  // [Y] = (prod d_j) h^k in P^m.
  const CohClass fundamental = CohClass(m, {deg}) * CohClass::h_power(m, static_cast<int>(degrees.size()));
  return (c * fundamental).coeff(m);
}

std::vector<GaussianRational> chern_forms_from_matrix(const ExactMatrix& b) {
  if (b.rows() != b.cols()) throw std::invalid_argument("chern_forms_from_matrix needs a square matrix");
  const Eigen::Index r = b.rows();
  // Faddeev-LeVerrier: det(tI - B) = sum_k c_k t^{r-k}, c_0 = 1.
  ExactMatrix m = ExactMatrix::Zero(r, r);
  GaussianRational c = 1;
  std::vector<GaussianRational> out;
  for (Eigen::Index k = 1; k <= r; ++k) {
    m = b * m;
    for (Eigen::Index i = 0; i < r; ++i) m(i, i) += c;
    const ExactMatrix bm = b * m;
    GaussianRational tr = 0;
    for (Eigen::Index i = 0; i < r; ++i) tr += bm(i, i);
    c = -tr / GaussianRational(static_cast<long>(k));
    // det(I + tB) has coefficient (-1)^k c_k at t^k.
    out.push_back(k % 2 == 0 ? c : -c);
  }
  return out;
}

}  // namespace kahler
