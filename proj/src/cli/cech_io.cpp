#include "kahler/cli/cech_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kahler::cli {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const auto slash = s.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        const long long n = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return Rational(n);
      }
      const std::string num = s.substr(0, slash);
      const std::string den = s.substr(slash + 1);
      const long long p = std::stoll(num, &used);
      if (used != num.size()) throw std::invalid_argument(s);
      const long long q = std::stoll(den, &used);
      if (used != den.size() || q == 0) throw std::invalid_argument(s);
      return Rational(BigInt(p), BigInt(q));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed rational \"" + s + "\"");
    }
  }
  throw std::invalid_argument("matrix entries must be integers, \"p/q\" strings or [re, im] pairs");
}

Simplex parse_simplex(const std::string& key) {
  Simplex s;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      s.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed index tuple \"" + key + "\"");
    }
  }
  if (s.empty()) throw std::invalid_argument("empty index tuple key");
  return s;
}

Simplex simplex_from_json(const json& v) {
  if (!v.is_array()) throw std::invalid_argument("nerve entries must be arrays of open-set indices");
  Simplex s;
  for (const auto& i : v) {
    if (!i.is_number_integer()) throw std::invalid_argument("open-set indices must be integers");
    s.push_back(i.get<int>());
  }
  return s;
}

ExactMatrix matrix_from_json(const json& v, const std::string& where) {
  if (!v.is_array()) throw std::invalid_argument("restriction " + where + " must be a list of rows");
  const auto rows = static_cast<Eigen::Index>(v.size());
  Eigen::Index cols = -1;
  for (const auto& row : v) {
    if (!row.is_array()) throw std::invalid_argument("restriction " + where + " must be a list of rows");
    if (cols >= 0 && static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("restriction " + where + " has ragged rows");
    }
    cols = static_cast<Eigen::Index>(row.size());
  }
  // An empty list of rows is a 0 x 0 matrix.
  ExactMatrix m(rows, std::max<Eigen::Index>(cols, 0));
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = scalar_from_json(v[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return m;
}

}  // namespace

GaussianRational scalar_from_json(const json& v) {
  if (v.is_array()) {
    if (v.size() != 2) throw std::invalid_argument("complex entries must be [re, im]");
    return {rational_from_json(v[0]), rational_from_json(v[1])};
  }
  return GaussianRational(rational_from_json(v));
}

Nerve nerve_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("nerve")) throw std::invalid_argument("Cech input needs a \"nerve\" field");
  const json& n = doc.at("nerve");
  if (!n.is_array()) throw std::invalid_argument("\"nerve\" must be a list of index tuples");
  std::vector<Simplex> facets;
  int top = -1;
  for (const auto& s : n) {
    facets.push_back(simplex_from_json(s));
    for (int i : facets.back()) top = std::max(top, i);
  }
  int opens = top + 1;
  if (doc.contains("opens")) {
    if (!doc.at("opens").is_number_integer()) throw std::invalid_argument("\"opens\" must be an integer");
    opens = doc.at("opens").get<int>();
  }
  for (const auto& f : facets) {
    for (std::size_t i = 1; i < f.size(); ++i) {
      if (f[i] <= f[i - 1]) throw std::invalid_argument("nerve tuples must be strictly increasing");
    }
  }
  return Nerve::from_facets(opens, facets);
}

CechComplex cech_from_json(const json& doc) {
  const Nerve nerve = nerve_from_json(doc);
  if (doc.contains("constant")) {
    if (!doc.at("constant").is_number_integer()) throw std::invalid_argument("\"constant\" must be a rank");
    return constant_sheaf_complex(nerve, doc.at("constant").get<int>());
  }
  if (!doc.contains("dims") || !doc.contains("restrictions")) {
    throw std::invalid_argument("Cech input needs \"constant\" or both \"dims\" and \"restrictions\"");
  }
  SheafData data;
  if (!doc.at("dims").is_object()) throw std::invalid_argument("\"dims\" must map index tuples to dimensions");
  for (const auto& [key, value] : doc.at("dims").items()) {
    if (!value.is_number_integer()) throw std::invalid_argument("dimension for \"" + key + "\" must be an integer");
    const Simplex s = parse_simplex(key);
    if (nerve.index_of(s) < 0) throw std::invalid_argument("dimension given for \"" + key + "\", which is not in the nerve");
    data.dims[s] = value.get<int>();
  }
  if (!doc.at("restrictions").is_object()) throw std::invalid_argument("\"restrictions\" must be an object");
  for (const auto& [key, value] : doc.at("restrictions").items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("restriction key \"" + key + "\" must be \"simplex|face\"");
    const Simplex s = parse_simplex(key.substr(0, bar));
    const Simplex f = parse_simplex(key.substr(bar + 1));
    ExactMatrix m = matrix_from_json(value, key);
    // A 0-row matrix cannot carry its column count; take it from the face.
    if (m.rows() == 0 && data.dims.count(f)) m.resize(0, data.dims.at(f));
    data.restrictions[{s, f}] = std::move(m);
  }
  for (const auto& s : nerve.all_simplices()) {
    if (!data.dims.count(s)) throw std::invalid_argument("missing dimension for an intersection of the nerve");
  }
  return CechComplex(nerve, std::move(data));
}

}  // namespace kahler::cli
