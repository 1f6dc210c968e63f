#include "kahler/cech.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kahler {

namespace {

using Index = Eigen::Index;

std::string simplex_name(const Simplex& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ')';
  return os.str();
}

bool is_zero_matrix(const ExactMatrix& m) {
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

Simplex face(const Simplex& s, std::size_t j) {
  Simplex out;
  out.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != j) out.push_back(s[i]);
  }
  return out;
}

Nerve::Nerve(int num_opens, std::vector<Simplex> simplices) : num_opens_(num_opens) {
  if (num_opens < 0) throw std::invalid_argument("negative number of open sets");
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  std::set<Simplex> listed(simplices.begin(), simplices.end());
  for (const auto& s : simplices) {
    if (s.empty()) throw std::invalid_argument("empty index tuple in nerve");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= num_opens) throw std::invalid_argument("open-set index out of range in " + simplex_name(s));
      if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("indices not strictly increasing in " + simplex_name(s));
    }
    if (s.size() > 1) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (!listed.count(face(s, j))) {
          throw std::invalid_argument("nerve not closed under faces: missing face of " + simplex_name(s));
        }
      }
    }
    const std::size_t k = s.size() - 1;
    if (by_degree_.size() <= k) by_degree_.resize(k + 1);
    by_degree_[k].push_back(s);
  }
  for (auto& group : by_degree_) {
    std::sort(group.begin(), group.end());
    for (std::size_t i = 0; i < group.size(); ++i) index_[group[i]] = static_cast<int>(i);
  }
}

Nerve Nerve::from_facets(int num_opens, const std::vector<Simplex>& facets) {
  std::set<Simplex> all;
  for (Simplex f : facets) {
    std::sort(f.begin(), f.end());
    const std::size_t n = f.size();
    if (n == 0 || n > 20) throw std::invalid_argument("facet size out of range");
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) s.push_back(f[i]);
      }
      all.insert(std::move(s));
    }
  }
  return Nerve(num_opens, std::vector<Simplex>(all.begin(), all.end()));
}

const std::vector<Simplex>& Nerve::simplices(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k >= static_cast<int>(by_degree_.size())) return empty;
  return by_degree_[static_cast<std::size_t>(k)];
}

std::vector<Simplex> Nerve::all_simplices() const {
  std::vector<Simplex> out;
  for (const auto& group : by_degree_) out.insert(out.end(), group.begin(), group.end());
  return out;
}

int Nerve::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

CechComplex::CechComplex(Nerve nerve, SheafData sheaf) : nerve_(std::move(nerve)), sheaf_(std::move(sheaf)) {
  const int top = nerve_.top_degree();
  auto dim_of = [this](const Simplex& s) {
    auto it = sheaf_.dims.find(s);
    if (it == sheaf_.dims.end()) throw std::invalid_argument("no section dimension for " + simplex_name(s));
    if (it->second < 0) throw std::invalid_argument("negative section dimension for " + simplex_name(s));
    return static_cast<Index>(it->second);
  };
  auto restriction = [this](const Simplex& s, const Simplex& f) -> const ExactMatrix& {
    auto it = sheaf_.restrictions.find({s, f});
    if (it == sheaf_.restrictions.end()) {
      throw std::invalid_argument("missing restriction " + simplex_name(f) + " -> " + simplex_name(s));
    }
    return it->second;
  };

  // Cochain layout: lexicographic simplices, each contributing dim F(s).
  offsets_.resize(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    Index total = 0;
    for (const auto& s : nerve_.simplices(k)) {
      offsets_[static_cast<std::size_t>(k)].push_back(total);
      total += dim_of(s);
    }
    cochain_dims_.push_back(total);
  }

  for (int k = 1; k <= top; ++k) {
    for (const auto& s : nerve_.simplices(k)) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        const ExactMatrix& r = restriction(s, face(s, j));
        if (r.rows() != dim_of(s) || r.cols() != dim_of(face(s, j))) {
          throw std::invalid_argument("restriction " + simplex_name(face(s, j)) + " -> " + simplex_name(s) +
                                      " has the wrong shape");
        }
      }
      // Composition along both routes of every codimension-two face.
      for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size() && k >= 2; ++b) {
          const Simplex fa = face(s, a);
          const Simplex fb = face(s, b);
          const Simplex fab = face(fa, b - 1);
          const ExactMatrix via_a = restriction(s, fa) * restriction(fa, fab);
          const ExactMatrix via_b = restriction(s, fb) * restriction(fb, fab);
          if (via_a != via_b) {
            throw std::invalid_argument("restrictions do not compose consistently at " + simplex_name(s));
          }
        }
      }
    }
  }

  for (int k = 0; k < top; ++k) {
    ExactMatrix delta = ExactMatrix::Zero(cochain_dims_[static_cast<std::size_t>(k + 1)],
                                          cochain_dims_[static_cast<std::size_t>(k)]);
    const auto& rows = nerve_.simplices(k + 1);
    for (std::size_t ti = 0; ti < rows.size(); ++ti) {
      const Simplex& t = rows[ti];
      const Index row0 = offsets_[static_cast<std::size_t>(k + 1)][ti];
      for (std::size_t j = 0; j < t.size(); ++j) {
        const Simplex f = face(t, j);
        const Index col0 = offsets_[static_cast<std::size_t>(k)][static_cast<std::size_t>(nerve_.index_of(f))];
        const ExactMatrix& r = restriction(t, f);
        const GaussianRational sign((j % 2 == 0) ? 1 : -1);
        delta.block(row0, col0, r.rows(), r.cols()) += sign * r;
      }
    }
    delta_.push_back(std::move(delta));
  }
  for (std::size_t k = 0; k + 1 < delta_.size(); ++k) {
    if (!is_zero_matrix(delta_[k + 1] * delta_[k])) throw std::logic_error("Cech coboundary does not square to zero");
  }
}

ExactMatrix CechComplex::coboundary(int k) const {
  if (k < 0) throw std::invalid_argument("negative cochain degree");
  if (k < static_cast<int>(delta_.size())) return delta_[static_cast<std::size_t>(k)];
  const Index cols = k < static_cast<int>(cochain_dims_.size()) ? cochain_dims_[static_cast<std::size_t>(k)] : 0;
  return ExactMatrix::Zero(0, cols);
}

CechComplex constant_sheaf_complex(const Nerve& nerve, int rank) {
  if (rank < 0) throw std::invalid_argument("negative sheaf rank");
  SheafData data;
  const ExactMatrix id = ExactMatrix::Identity(rank, rank);
  for (const auto& s : nerve.all_simplices()) {
    data.dims[s] = rank;
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) data.restrictions[{s, face(s, j)}] = id;
  }
  return CechComplex(nerve, std::move(data));
}

std::vector<Eigen::Index> cohomology_dims(const CechComplex& c) {
  const auto& dims = c.cochain_dims();
  std::vector<Index> ranks;
  for (std::size_t k = 0; k < dims.size(); ++k) ranks.push_back(rank(c.coboundary(static_cast<int>(k))));
  std::vector<Index> out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const Index kernel = dims[k] - ranks[k];
    const Index image = k == 0 ? 0 : ranks[k - 1];
    out.push_back(kernel - image);
  }
  return out;
}

IntMatrix integer_coboundary(const Nerve& nerve, int k) {
  const auto& cols = nerve.simplices(k);
  const auto& rows = nerve.simplices(k + 1);
  IntMatrix delta = IntMatrix::Zero(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < rows[r].size(); ++j) {
      const int c = nerve.index_of(face(rows[r], j));
      delta(static_cast<Index>(r), c) += BigInt(j % 2 == 0 ? 1 : -1);
    }
  }
  return delta;
}

std::vector<IntegerGroup> integer_cohomology(const Nerve& nerve) {
  std::vector<IntegerGroup> out;
  for (int k = 0; k <= nerve.top_degree(); ++k) {
    const auto dim = static_cast<Index>(nerve.simplices(k).size());
    const IntMatrix incoming = k == 0 ? IntMatrix::Zero(dim, 0) : integer_coboundary(nerve, k - 1);
    out.push_back(subquotient(dim, incoming, integer_coboundary(nerve, k)));
  }
  return out;
}

Nerve barycentric_subdivision(const Nerve& nerve) {
  const auto verts = nerve.all_simplices();
  std::map<Simplex, int> id;
  for (std::size_t i = 0; i < verts.size(); ++i) id[verts[i]] = static_cast<int>(i);
  auto contains = [](const Simplex& big, const Simplex& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  // Chains s_0 < s_1 < ... under proper inclusion; grow them depth-first.
  std::vector<Simplex> chains;
  std::vector<std::vector<Simplex>> stack;
  for (const auto& v : verts) stack.push_back({v});
  while (!stack.empty()) {
    auto chain = std::move(stack.back());
    stack.pop_back();
    Simplex ids;
    for (const auto& s : chain) ids.push_back(id[s]);
    std::sort(ids.begin(), ids.end());
    chains.push_back(ids);
    for (const auto& v : verts) {
      if (v.size() > chain.back().size() && contains(v, chain.back())) {
        auto next = chain;
        next.push_back(v);
        stack.push_back(std::move(next));
      }
    }
  }
  return Nerve(static_cast<int>(verts.size()), std::move(chains));
}

}  // namespace kahler
