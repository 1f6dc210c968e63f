#include "kahler/cli/cli.hpp"

#include "kahler/cech.hpp"
#include "kahler/chern.hpp"
#include "kahler/cli/cech_io.hpp"
#include "kahler/exterior.hpp"
#include "kahler/flat_forms.hpp"
#include "kahler/hodge.hpp"
#include "kahler/morse.hpp"
#include "kahler/projective.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kahler::cli {

namespace {

using nlohmann::json;

// Unreadable or malformed input, reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json result = json::object();
  std::string table;
  bool ok = true;
};

json big(const BigInt& b) {
  static const BigInt limit = BigInt(1) << 62;
  if (b < limit && b > -limit) return static_cast<long long>(b);
  return b.str();
}

json big_list(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& b : v) out.push_back(big(b));
  return out;
}

std::string join(const std::vector<BigInt>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw InputError("expected an integer for " + what + ", got \"" + s + "\"");
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw InputError("expected a number for " + what + ", got \"" + s + "\"");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

std::vector<int> int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  for (const auto& p : split(s, ',')) out.push_back(parse_int(p, what));
  return out;
}

// "M" or "M d1,d2,..." given as one or two option values.
std::pair<int, std::vector<int>> ambient_and_degrees(const std::vector<std::string>& v) {
  if (v.empty() || v.size() > 2) throw InputError("expected M [d1,d2,...]");
  return {parse_int(v[0], "M"), v.size() == 2 ? int_list(v[1], "degrees") : std::vector<int>{}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void require_one(const std::vector<const CLI::Option*>& modes, const std::string& names) {
  const auto given = std::count_if(modes.begin(), modes.end(), [](const CLI::Option* o) { return o->count() > 0; });
  if (given != 1) throw InputError("give exactly one of " + names);
}

std::string diamond_table(const HodgeDiamond& d) {
  std::ostringstream os;
  const int n = d.dim();
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) os << (q ? " " : "") << std::setw(3) << d(p, q);
    os << '\n';
  }
  return os.str();
}

json diamond_json(const HodgeDiamond& d) {
  json grid = json::array();
  for (int p = 0; p <= d.dim(); ++p) {
    json row = json::array();
    for (int q = 0; q <= d.dim(); ++q) row.push_back(big(d(p, q)));
    grid.push_back(row);
  }
  return grid;
}

HodgeDiamond diamond_from_json(const json& doc) {
  const json& g = doc.is_object() && doc.contains("grid") ? doc.at("grid") : doc;
  if (!g.is_array() || g.empty()) throw InputError("diamond must be a square list of rows");
  const auto n = static_cast<Eigen::Index>(g.size());
  IntMatrix m(n, n);
  for (Eigen::Index p = 0; p < n; ++p) {
    const json& row = g[static_cast<std::size_t>(p)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw InputError("diamond must be square");
    for (Eigen::Index q = 0; q < n; ++q) {
      if (!row[static_cast<std::size_t>(q)].is_number_integer()) throw InputError("Hodge numbers must be integers");
      m(p, q) = row[static_cast<std::size_t>(q)].get<long long>();
    }
  }
  return HodgeDiamond(m);
}

// Betti vector of a complete intersection and the hyperplane-section check
// against the ambient (P^m, or the intersection of all but the last degree).
Outcome betti_outcome(int m, const std::vector<int>& degrees) {
  Outcome o;
  const BettiVector b = complete_intersection_betti(m, degrees);
  const int n = m - static_cast<int>(degrees.size());
  const std::vector<int> outer(degrees.begin(), degrees.end() - (degrees.empty() ? 0 : 1));
  const BettiVector bx = outer.empty() ? betti_from_diamond(diamond_pn(m)) : complete_intersection_betti(m, outer);
  const LefschetzReport lr = lefschetz_pattern_check(bx, b, n);
  BigInt chi = euler_characteristic(m, degrees);

  o.ok = lr.passes;
  o.result["ambient_dimension"] = m;
  o.result["degrees"] = degrees;
  o.result["dimension"] = n;
  o.result["euler_characteristic"] = big(chi);
  o.result["betti"] = big_list(b);
  o.result["lefschetz"] = {{"passes", lr.passes}, {"failures", lr.failures}};
  std::ostringstream os;
  os << "dimension " << n << " in P^" << m << ", euler characteristic " << chi << '\n';
  os << "betti: " << join(b) << '\n';
  os << "lefschetz hyperplane pattern: " << (lr.passes ? "pass" : "FAIL") << '\n';
  for (const auto& f : lr.failures) os << "  " << f << '\n';
  o.table = os.str();
  return o;
}

IntPolynomial polynomial_from_json(const json& doc) {
  if (doc.is_array()) {
    std::vector<BigInt> c;
    for (const auto& v : doc) {
      if (v.is_number_integer()) {
        c.emplace_back(v.get<long long>());
      } else if (v.is_string()) {
        try {
          c.emplace_back(v.get<std::string>());
        } catch (const std::runtime_error&) {
          throw InputError("malformed integer coefficient \"" + v.get<std::string>() + "\"");
        }
      } else {
        throw InputError("polynomial coefficients must be integers");
      }
    }
    return IntPolynomial(std::move(c));
  }
  if (doc.is_object()) {
    if (doc.contains("indices")) {
      MorseProfile p;
      for (const auto& v : doc.at("indices")) {
        if (!v.is_number_integer()) throw InputError("Morse indices must be integers");
        p.indices.push_back(v.get<int>());
      }
      return morse_polynomial(p);
    }
    for (const char* key : {"coefficients", "betti", "morse_polynomial", "result"}) {
      if (doc.contains(key)) return polynomial_from_json(doc.at(key));
    }
  }
  throw InputError("expected a coefficient list, {\"coefficients\": [...]}, {\"indices\": [...]} or a Betti vector");
}

Outcome morse_check_outcome(const IntPolynomial& m, const IntPolynomial& p) {
  Outcome o;
  const auto q = morse_inequality_check(m, p);
  const WeakInequalityReport w = weak_inequalities(m, p);
  o.ok = q.has_value();
  o.result["M"] = big_list(m.coeffs());
  o.result["P"] = big_list(p.coeffs());
  o.result["Q"] = q ? big_list(q->coeffs()) : json(nullptr);
  o.result["weak_inequalities"] = {{"passes", w.passes}, {"first_violation", w.first_violation}};
  std::ostringstream os;
  os << "M(t) = " << to_string(m) << "\nP(t) = " << to_string(p) << '\n';
  if (q) {
    os << "M - P = Q (1 + t) with Q(t) = " << to_string(*q) << '\n';
  } else {
    os << "M - P is not (1 + t) times a polynomial with nonnegative coefficients\n";
  }
  os << "weak inequalities: " << (w.passes ? "pass" : "FAIL: " + w.first_violation) << '\n';
  o.table = os.str();
  return o;
}

ChartPoint random_chart_point(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(-1, 1);
  ChartPoint p{0, Eigen::VectorXcd(n)};
  for (int a = 0; a < n; ++a) {
    Complex c;
    do c = Complex(u(rng), u(rng));
    while (std::abs(c) >= 1);
    p.w(a) = c;
  }
  return p;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Kahler and projective geometry calculator", "kahler"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  // hodge-diamond
  auto* hd = app.add_subcommand("hodge-diamond", "Hodge diamonds and Betti numbers");
  int hd_pn = 0;
  std::vector<std::string> hd_hyp, hd_ci;
  std::string hd_validate;
  auto* hd_pn_opt = hd->add_option("--pn", hd_pn, "Diamond of P^N");
  auto* hd_hyp_opt = hd->add_option("--hypersurface", hd_hyp, "N D: degree-D hypersurface of dimension N")->expected(2);
  auto* hd_ci_opt = hd->add_option("--ci", hd_ci, "M d1,d2,...: complete intersection in P^M")->expected(2);
  auto* hd_val_opt = hd->add_option("--validate", hd_validate, "JSON file with a diamond grid to validate");

  // chern
  auto* ch = app.add_subcommand("chern", "Chern classes on projective space");
  int ch_pn = 0;
  std::vector<std::string> ch_ci, ch_can, ch_eul;
  auto* ch_pn_opt = ch->add_option("--pn", ch_pn, "c(P^N)");
  auto* ch_ci_opt = ch->add_option("--ci", ch_ci, "M [d1,...]: c of a complete intersection")->expected(1, 2);
  auto* ch_can_opt = ch->add_option("--canonical", ch_can, "M [d1,...]: degree of the canonical bundle")->expected(1, 2);
  auto* ch_eul_opt = ch->add_option("--euler", ch_eul, "M [d1,...]: Euler characteristic")->expected(1, 2);

  // h0
  auto* h0 = app.add_subcommand("h0", "dim H^0(P^N, O(K))");
  std::string h0_n, h0_k;
  h0->add_option("N", h0_n)->required();
  h0->add_option("K", h0_k)->required();

  // picard
  auto* pic = app.add_subcommand("picard", "Line bundle of a divisor on P^N");
  std::string pic_n, pic_div;
  pic->add_option("N", pic_n)->required();
  pic->add_option("--divisor", pic_div, "d:a,...: components of degree d with multiplicity a");

  // cech
  auto* ce = app.add_subcommand("cech", "Cech cohomology of a sheaf on a finite cover");
  std::string ce_input;
  bool ce_integers = false;
  ce->add_option("--input", ce_input, "JSON description of the cover and sheaf")->required();
  ce->add_flag("--integers", ce_integers, "Also compute integer cohomology of the constant sheaf");

  // fubini-study
  auto* fs = app.add_subcommand("fubini-study", "Numerical checks of the Fubini-Study metric");
  std::string fs_check;
  int fs_n = 2, fs_points = 100, fs_twist = 1;
  unsigned fs_seed = 1;
  double fs_tol = -1, fs_step = 1e-4;
  fs->add_option("--check", fs_check)->required()->check(CLI::IsMember({"point", "integral", "curvature"}));
  fs->add_option("--n", fs_n, "Projective dimension");
  fs->add_option("--points", fs_points, "Number of sample points (the chart origin is always included)");
  fs->add_option("--tol", fs_tol, "Tolerance (defaults: point 1e-5, integral 1e-6, curvature 1e-4)");
  fs->add_option("--step", fs_step, "Finite-difference step");
  fs->add_option("--seed", fs_seed, "Seed for the sample points");
  fs->add_option("--twist", fs_twist, "Curvature of O(k) for this k");

  // lefschetz
  auto* lf = app.add_subcommand("lefschetz", "Lefschetz sl(2) structure on the exterior algebra of C^N");
  int lf_sl2 = 0, lf_demo = 0;
  std::vector<int> lf_hard;
  auto* lf_sl2_opt = lf->add_option("--sl2", lf_sl2, "Verify the sl(2) relations on C^N");
  auto* lf_hard_opt = lf->add_option("--hard", lf_hard, "N K: is L^(N-K) bijective in degree K")->expected(2);
  auto* lf_demo_opt = lf->add_option("--primitive-demo", lf_demo, "Primitive decomposition of a sample form on C^N");

  // kahler-identities
  auto* ki = app.add_subcommand("kahler-identities", "Kahler identities on polynomial forms on C^N");
  int ki_n = 2, ki_deg = 2;
  ki->add_option("--n", ki_n, "Complex dimension");
  ki->add_option("--max-degree", ki_deg, "Maximal polynomial degree of the coefficients");

  // morse
  auto* mo = app.add_subcommand("morse", "Morse inequalities");
  std::vector<std::string> mo_check, mo_sphere;
  auto* mo_check_opt = mo->add_option("--check", mo_check, "M.json P.json")->expected(2);
  auto* mo_sphere_opt = mo->add_option("--sphere", mo_sphere, "m qx,qy,...: distance squared on the unit m-sphere")->expected(2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  std::string command;
  for (std::size_t i = 0; i < args.size(); ++i) command += (i ? " " : "") + args[i];

  Outcome o;
  try {
    if (hd->parsed()) {
      require_one({hd_pn_opt, hd_hyp_opt, hd_ci_opt, hd_val_opt}, "--pn, --hypersurface, --ci, --validate");
      if (hd_pn_opt->count()) {
        const HodgeDiamond d = diamond_pn(hd_pn);
        const auto bad = validate_diamond(d);
        o.ok = bad.empty();
        o.result = {{"dimension", hd_pn}, {"diamond", diamond_json(d)}, {"betti", big_list(betti_from_diamond(d))},
                    {"violations", bad}};
        o.table = "h^{p,q} of P^" + std::to_string(hd_pn) + " (row p, column q)\n" + diamond_table(d) +
                  "betti: " + join(betti_from_diamond(d)) + '\n';
      } else if (hd_hyp_opt->count()) {
        const int n = parse_int(hd_hyp[0], "N");
        const int d = parse_int(hd_hyp[1], "D");
        if (n < 1) throw InputError("hypersurface dimension must be at least 1");
        o = betti_outcome(n + 1, {d});
      } else if (hd_ci_opt->count()) {
        o = betti_outcome(parse_int(hd_ci[0], "M"), int_list(hd_ci[1], "degrees"));
      } else {
        const HodgeDiamond d = diamond_from_json(read_json_file(hd_validate));
        const auto bad = validate_diamond(d);
        o.ok = bad.empty();
        o.result = {{"dimension", d.dim()}, {"diamond", diamond_json(d)}, {"betti", big_list(betti_from_diamond(d))},
                    {"violations", bad}};
        std::ostringstream os;
        os << diamond_table(d) << "betti: " << join(betti_from_diamond(d)) << '\n';
        if (bad.empty()) os << "all Kahler constraints hold\n";
        for (const auto& v : bad) os << "violation: " << v << '\n';
        o.table = os.str();
      }
    } else if (ch->parsed()) {
      require_one({ch_pn_opt, ch_ci_opt, ch_can_opt, ch_eul_opt}, "--pn, --ci, --canonical, --euler");
      auto total = [&o](int m, const std::vector<int>& ds) {
        const CohClass c = chern_complete_intersection(m, ds);
        o.result = {{"ambient_dimension", m},
                    {"degrees", ds},
                    {"total_chern_class", big_list(c.coeffs())},
                    {"c1", big(c.coeff(1))},
                    {"canonical_degree", big(canonical_degree(m, ds))}};
        o.table = "c = " + to_string(c) + "\n";
      };
      if (ch_pn_opt->count()) {
        total(ch_pn, {});
        o.result["total_chern_class"] = big_list(chern_pn(ch_pn).coeffs());
      } else if (ch_ci_opt->count()) {
        const auto [m, ds] = ambient_and_degrees(ch_ci);
        total(m, ds);
      } else if (ch_can_opt->count()) {
        const auto [m, ds] = ambient_and_degrees(ch_can);
        const BigInt k = canonical_degree(m, ds);
        o.result = {{"ambient_dimension", m}, {"degrees", ds}, {"canonical_degree", big(k)}};
        o.table = "K = O(" + k.str() + ")\n";
      } else {
        const auto [m, ds] = ambient_and_degrees(ch_eul);
        const BigInt chi = euler_characteristic(m, ds);
        o.result = {{"ambient_dimension", m}, {"degrees", ds}, {"euler_characteristic", big(chi)}};
        o.table = chi.str() + "\n";
      }
    } else if (h0->parsed()) {
      const int n = parse_int(h0_n, "N");
      const int k = parse_int(h0_k, "K");
      const BigInt v = h0_dim(n, k);
      o.result = {{"n", n}, {"k", k}, {"h0", big(v)}};
      o.table = v.str() + "\n";
    } else if (pic->parsed()) {
      const int n = parse_int(pic_n, "N");
      std::vector<std::pair<int, int>> comps;
      json comps_json = json::array();
      for (const auto& c : split(pic_div, ',')) {
        const auto parts = split(c, ':');
        if (parts.size() != 2) throw InputError("divisor components look like d:a, got \"" + c + "\"");
        comps.emplace_back(parse_int(parts[0], "degree"), parse_int(parts[1], "multiplicity"));
        comps_json.push_back({{"degree", comps.back().first}, {"multiplicity", comps.back().second}});
      }
      const LineBundleClass l = divisor_class(n, comps);
      o.result = {{"n", n}, {"components", comps_json}, {"twist", l.k}, {"h0", big(h0_dim(n, l.k))}};
      o.table = "O(" + std::to_string(l.k) + ") on P^" + std::to_string(n) + ", h0 = " + h0_dim(n, l.k).str() + "\n";
    } else if (ce->parsed()) {
      const json doc = read_json_file(ce_input);
      const CechComplex c = cech_from_json(doc);
      const auto dims = cohomology_dims(c);
      o.result = {{"cochain_dims", c.cochain_dims()}, {"cohomology_dims", dims}};
      std::ostringstream os;
      os << "cochain dimensions:";
      for (auto d : c.cochain_dims()) os << ' ' << d;
      os << "\ncohomology dimensions:";
      for (auto d : dims) os << ' ' << d;
      os << '\n';
      if (ce_integers) {
        if (!doc.contains("constant")) throw InputError("--integers needs a constant sheaf");
        const int r = doc.at("constant").get<int>();
        json groups = json::array();
        for (std::size_t k = 0; const IntegerGroup& g : integer_cohomology(c.nerve())) {
          // Z^r coefficients: r copies of each summand.
          IntegerGroup gr{g.free_rank * r, {}};
          for (int i = 0; i < r; ++i) gr.torsion.insert(gr.torsion.end(), g.torsion.begin(), g.torsion.end());
          std::sort(gr.torsion.begin(), gr.torsion.end());
          groups.push_back({{"free_rank", gr.free_rank}, {"torsion", big_list(gr.torsion)}, {"group", to_string(gr)}});
          os << "H^" << k++ << "(Z) = " << to_string(gr) << '\n';
        }
        o.result["integer_cohomology"] = groups;
      }
      o.table = os.str();
    } else if (fs->parsed()) {
      if (fs_n < 1) throw InputError("--n must be at least 1");
      if (fs_points < 0) throw InputError("--points must be nonnegative");
      if (!(fs_step > 0)) throw InputError("--step must be positive");
      std::mt19937 rng(fs_seed);
      std::vector<ChartPoint> pts{{0, Eigen::VectorXcd::Zero(fs_n)}};
      for (int i = 1; i < fs_points; ++i) pts.push_back(random_chart_point(rng, fs_n));
      std::ostringstream os;
      if (fs_check == "point") {
        const double tol = fs_tol > 0 ? fs_tol : 1e-5;
        double min_eig = 1e300, max_res = 0;
        bool pos = true, closed = true;
        for (const auto& p : pts) {
          const FsReport r = fs_checks(p, fs_step, tol);
          min_eig = std::min(min_eig, r.min_eigenvalue);
          max_res = std::max(max_res, r.closedness_residual);
          pos = pos && r.positive;
          closed = closed && r.closed;
        }
        o.ok = pos && closed;
        o.result = {{"n", fs_n}, {"points", pts.size()}, {"tol", tol}, {"all_positive", pos}, {"all_closed", closed},
                    {"min_eigenvalue", min_eig}, {"max_closedness_residual", max_res}};
        os << "points: " << pts.size() << ", positive: " << yes(pos) << ", closed: " << yes(closed) << '\n'
           << "min eigenvalue " << min_eig << ", max closedness residual " << max_res << '\n';
      } else if (fs_check == "integral") {
        const double tol = fs_tol > 0 ? fs_tol : 1e-6;
        const double v = fs_integral_p1(std::min(tol, 1e-10));
        o.ok = std::abs(v - 1) <= tol;
        o.result = {{"value", v}, {"error", std::abs(v - 1)}, {"tol", tol}};
        os << std::setprecision(15) << "integral of omega_FS over P^1 = " << v << '\n';
      } else {
        const double tol = fs_tol > 0 ? fs_tol : 1e-4;
        double worst = 0;
        for (const auto& p : pts) worst = std::max(worst, chern_curvature_check(p, fs_step, tol, fs_twist).max_deviation);
        o.ok = worst <= tol;
        o.result = {{"n", fs_n}, {"points", pts.size()}, {"twist", fs_twist}, {"tol", tol}, {"max_deviation", worst}};
        os << "points: " << pts.size() << ", max |(i/2pi)F - k omega_FS| = " << worst << '\n';
      }
      os << (o.ok ? "pass" : "FAIL") << '\n';
      o.table = os.str();
    } else if (lf->parsed()) {
      require_one({lf_sl2_opt, lf_hard_opt, lf_demo_opt}, "--sl2, --hard, --primitive-demo");
      std::ostringstream os;
      if (lf_sl2_opt->count()) {
        const Sl2Report r = verify_sl2(lf_sl2);
        ExtForm power = ExtForm::constant(lf_sl2, GaussianRational(1));
        BigInt fact = 1;
        for (int i = 1; i <= lf_sl2; ++i) {
          power = wedge(power, kahler_form(lf_sl2));
          fact *= i;
        }
        const bool vol = power == GaussianRational(Rational(fact)) * volume_form(lf_sl2);
        json hard = json::array();
        bool all_hard = true;
        for (int k = 0; k <= lf_sl2; ++k) {
          const bool h = hard_lefschetz_check(lf_sl2, k);
          all_hard = all_hard && h;
          hard.push_back(h);
        }
        o.ok = r.all() && vol && all_hard;
        o.result = {{"n", lf_sl2},          {"basis_size", r.basis_size}, {"[H,L]=2L", r.h_l},
                    {"[H,Lambda]=-2Lambda", r.h_lambda}, {"[L,Lambda]=H", r.l_lambda}, {"omega^n/n!=vol", vol},
                    {"hard_lefschetz", hard}};
        os << "basis size " << r.basis_size << "\n[H,L] = 2L: " << yes(r.h_l)
           << "\n[H,Lambda] = -2 Lambda: " << yes(r.h_lambda) << "\n[L,Lambda] = H: " << yes(r.l_lambda)
           << "\nomega^n/n! = vol: " << yes(vol) << "\nL^(n-k) bijective for all k <= n: " << yes(all_hard) << '\n';
      } else if (lf_hard_opt->count()) {
        const int n = lf_hard[0];
        const int k = lf_hard[1];
        if (n < 1 || n > kMaxExteriorDim || k < 0) throw InputError("need 1 <= N <= 8 and K >= 0");
        const bool b = hard_lefschetz_check(n, k);
        o.ok = b;
        o.result = {{"n", n}, {"k", k}, {"bijective", b},
                    {"dimension", monomials_of_degree(n, k).size()}};
        os << "L^" << n - k << ": degree " << k << " -> degree " << 2 * n - k << " bijective: " << yes(b) << '\n';
      } else {
        const int n = lf_demo;
        if (n < 1 || n > kMaxExteriorDim) throw InputError("need 1 <= N <= 8");
        // dz1^dzbar1, plus dz1^dzbar2 when there is room.
        ExtForm a = wedge(ExtForm::dz(n, 1), ExtForm::dzbar(n, 1));
        if (n >= 2) a += wedge(ExtForm::dz(n, 1), ExtForm::dzbar(n, 2));
        const auto pieces = primitive_decompose(a);
        bool primitive = true;
        json pj = json::array();
        os << "a = " << to_string(a) << '\n';
        for (const auto& p : pieces) {
          const bool prim = lefschetz_dual(p.beta).is_zero();
          primitive = primitive && prim;
          pj.push_back({{"power", p.power}, {"beta", to_string(p.beta)}, {"primitive", prim}});
          os << "L^" << p.power << " beta, beta = " << to_string(p.beta) << (prim ? "" : "  (NOT primitive)") << '\n';
        }
        const bool back = reconstruct(n, pieces) == a;
        o.ok = primitive && back;
        o.result = {{"n", n}, {"form", to_string(a)}, {"pieces", pj}, {"reconstructs", back}};
        os << "reconstructs a: " << yes(back) << '\n';
      }
      o.table = os.str();
    } else if (ki->parsed()) {
      if (ki_n < 1 || ki_n > kMaxExteriorDim || ki_deg < 0) throw InputError("need 1 <= n <= 8 and max-degree >= 0");
      std::map<std::string, std::size_t> failures;
      std::size_t count = 0;
      for (const auto& f : monomial_forms(ki_n, ki_deg)) {
        ++count;
        for (const auto& r : kahler_identity_check(f)) failures[r.name] += r.holds ? 0 : 1;
        for (const auto& r : structural_check(f)) failures[r.name] += r.holds ? 0 : 1;
      }
      const bool ladders = ladder_anticommutators_hold(ki_n);
      failures["ladder anticommutators"] = ladders ? 0 : 1;
      o.ok = std::all_of(failures.begin(), failures.end(), [](const auto& kv) { return kv.second == 0; });
      json ids = json::object();
      std::ostringstream os;
      os << count << " monomial forms on C^" << ki_n << " with coefficient degree <= " << ki_deg << '\n';
      for (const auto& [name, bad] : failures) {
        ids[name] = bad == 0;
        os << (bad == 0 ? "  ok    " : "  FAIL  ") << name << (bad ? " (" + std::to_string(bad) + " forms)" : "") << '\n';
      }
      o.result = {{"n", ki_n}, {"max_degree", ki_deg}, {"forms_checked", count}, {"holds", ids}};
      o.table = os.str();
    } else if (mo->parsed()) {
      require_one({mo_check_opt, mo_sphere_opt}, "--check, --sphere");
      if (mo_check_opt->count()) {
        o = morse_check_outcome(polynomial_from_json(read_json_file(mo_check[0])),
                                polynomial_from_json(read_json_file(mo_check[1])));
      } else {
        const int m = parse_int(mo_sphere[0], "m");
        if (m < 1) throw InputError("sphere dimension must be at least 1");
        const auto coords = split(mo_sphere[1], ',');
        if (static_cast<int>(coords.size()) != m + 1) throw InputError("q needs m + 1 coordinates");
        Eigen::VectorXd q(m + 1);
        for (int i = 0; i <= m; ++i) q(i) = parse_double(coords[static_cast<std::size_t>(i)], "q");
        const MorseProfile prof = sphere_distance_morse(Eigen::VectorXd::Zero(m + 1), 1.0, q);
        std::vector<BigInt> b(static_cast<std::size_t>(m + 1), BigInt(0));
        b.front() += 1;
        b.back() += 1;
        o = morse_check_outcome(morse_polynomial(prof), IntPolynomial(b));
        o.result["indices"] = prof.indices;
        o.result["critical_values"] = prof.values;
        std::ostringstream os;
        os << "critical points of |x - q|^2 on S^" << m << ": indices";
        for (int i : prof.indices) os << ' ' << i;
        o.table = os.str() + "\n" + o.table;
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitValidation;
  }

  if (format == "json") {
    const json env = {{"command", command}, {"status", o.ok ? "ok" : "fail"}, {"result", o.result}};
    out << env.dump(2) << '\n';
  } else {
    out << o.table;
  }
  return o.ok ? kExitOk : kExitValidation;
}

}  // namespace kahler::cli
