#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dforge/algebra/reciprocity.hpp"
#include "dforge/io/parse.hpp"
#include "dforge/io/serialize.hpp"

using namespace dforge;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConsistency = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

const GaloisField& field_of_order(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) throw UsageError("--q must be an odd prime power");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q && p == 0; ++d)
    if (q % d == 0) p = d;
  if (p == 0) p = q;
  unsigned m = 0;
  std::uint64_t t = q;
  while (t % p == 0) {
    t /= p;
    ++m;
  }
  if (t != 1) throw UsageError("--q must be an odd prime power");
  return GaloisField::get(static_cast<std::uint32_t>(p), m);
}

/// "2" for prime fields, "[1,2]" (digits of 1, a, ...) otherwise.
Gf element_arg(const std::string& text, const GaloisField& f) {
  try {
    return io::gf_from_json(json::parse(text), f);
  } catch (const json::exception&) {
    throw UsageError("cannot read field element '" + text + "'");
  }
}

FlagPoint<RatFn> flag_arg(const std::string& text, const GaloisField& f) {
  FlagPoint<RatFn> pt;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) pt.coords.emplace_back(parse_upoly(item, f));
  if (pt.coords.empty()) throw UsageError("--flag needs at least one coordinate");
  return pt;
}

std::string matrix_text(const MotiveMatrix<RatFn>& m) {
  std::string out;
  for (const auto& row : m) {
    out += "  [";
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? ", " : "") + row[i].to_string("Y");
    out += "]\n";
  }
  return out;
}

json matrix_json(const MotiveMatrix<RatFn>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.to_string("Y"));
    rows.push_back(r);
  }
  return rows;
}

void emit(const std::string& format, const json& j, const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

struct Options {
  std::string format = "text";
  std::uint64_t q = 3;
  int d = 0;
  std::string constant;
  std::string zeta;
  int sign = 0;
  std::string flag;
  std::string a;
  std::string n = "T^2+1";
  long long prec = 0;
  bool expand_n = false;
  std::string out;
  std::string cover_file;
  int trials = 500;
  std::uint64_t seed = 1;
  std::vector<unsigned> ext_degrees{1, 2, 3, 4};
  std::string group = "psl";
};

int cmd_search_prime(const Options& o) {
  const GaloisField& f = field_of_order(o.q);
  if (o.d < 1) throw UsageError("--d must be positive");
  UPoly p(&f);
  json j;
  if (!o.constant.empty()) {
    if (!o.zeta.empty() || o.sign != 0) throw UsageError("--const excludes --zeta/--sign");
    const Gf xi = element_arg(o.constant, f);
    if (xi.is_zero()) throw UsageError("--const must be nonzero");
    p = hansen_mullen_search(o.d, xi);
  } else {
    if (o.zeta.empty() || (o.sign != 1 && o.sign != -1)) throw UsageError("give --const, or --zeta with --sign +1/-1");
    const Gf z = element_arg(o.zeta, f);
    if (z.is_zero()) throw UsageError("--zeta must be nonzero");
    p = choose_prime(o.d, z, o.sign);
    const UPoly zt = UPoly::constant(z) * UPoly::variable(&f);
    j["character"] = quadratic_character(zt, p);
  }
  j["prime"] = io::to_json(p);
  j["text"] = p.to_string();
  emit(o.format, j, p.to_string() + "\n");
  return kExitOk;
}

int cmd_phi(const Options& o) {
  const GaloisField& f = field_of_order(o.q);
  const auto base = ratfn_base(f);
  const auto pt = flag_arg(o.flag, f);
  const auto dm = flag_to_phi(pt, base);
  json j{{"flag", io::to_json(pt)}, {"phi_T", io::to_json(dm)}, {"text", dm.to_string()}};
  std::string text = "phi_T = " + dm.to_string() + "\n";
  if (!o.a.empty()) {
    const UPoly a = parse_upoly(o.a, f);
    const auto pa = dm.phi(a);
    j["phi_a"] = io::to_json(pa);
    text += "phi_" + a.to_string() + " = " + pa.to_string() + "\n";
  }
  emit(o.format, j, text);
  return kExitOk;
}

int cmd_atkin_lehner(const Options& o) {
  const GaloisField& f = field_of_order(o.q);
  const auto base = ratfn_base(f);
  const auto pt = flag_arg(o.flag, f);
  const auto w = atkin_lehner(pt, base);
  const auto ww = atkin_lehner(w, base);
  const bool involution = ww.projectively_equals(pt);
  const auto u = atkin_lehner_isogeny(pt, base);
  const auto phi = flag_to_phi(pt, base);
  const bool isogeny = w.is_moduli_point() && u * phi.phi_T() == flag_to_phi(w, base).phi_T() * u;
  json j{{"flag", io::to_json(pt)},
         {"image", io::to_json(w)},
         {"isogeny", io::to_json(u)},
         {"involution", involution},
         {"isogeny_verified", isogeny}};
  std::string text = "w" + pt.to_string() + " = " + w.to_string() + "\n" + "u = " + u.to_string() + "\n" +
                     "involution: " + (involution ? "yes" : "NO") + "\n" +
                     "u phi = psi u: " + (isogeny ? "yes" : "NO") + "\n";
  emit(o.format, j, text);
  if (!involution || !isogeny) throw ConsistencyError("Atkin-Lehner checks failed");
  return kExitOk;
}

int cmd_motive_det(const Options& o) {
  const GaloisField& f = field_of_order(o.q);
  const auto base = ratfn_base(f);
  const auto pt = flag_arg(o.flag, f);
  const auto z = motive_det_zeta(pt, base);
  const auto det = determinant(z.matrix);
  json j{{"flag", io::to_json(pt)},
         {"matrix", matrix_json(z.matrix)},
         {"det", det.to_string("Y")},
         {"zeta", io::to_json(z.zeta)},
         {"zeta_is_square", z.zeta_is_square}};
  std::string text = "matrix:\n" + matrix_text(z.matrix) + "det = " + det.to_string("Y") + "\n" +
                     "zeta = " + z.zeta.to_string() + (z.zeta_is_square ? " (square)" : " (non-square)") + "\n";
  emit(o.format, j, text);
  return kExitOk;
}

int cmd_cover(const Options& o) {
  const GaloisField& f = field_of_order(o.q);
  const UPoly n = parse_upoly(o.n, f);
  require_quadratic_prime(n);
  if (!n.constant_term().is_square())
    throw PreconditionError("constant term " + n.constant_term().to_string() + " of N is not a square in F_" +
                            std::to_string(o.q));
  const long long prec = o.prec > 0 ? o.prec : h_precision_cap(o.q);
  const auto rel = relation_poly(n, prec);
  const auto cp = mobius_numerator(rel.p, n);
  const long long round_trip = round_trip_precision(cp, rel.forms);
  const auto descent = verify_descent(cp);
  const bool descends = descent.sqrt_n_free && descent.coefficients_polynomial && descent.y_degree_ok &&
                        descent.irreducible_specialization_found;

  json j = io::to_json(cp, o.expand_n);
  j["checks"] = {{"relation_equations", rel.equations},
                 {"relation_unknowns", rel.unknowns},
                 {"residual_precision", rel.residual_precision},
                 {"round_trip_precision", round_trip},
                 {"descent", descends}, {"irreducible_witness", descent.witness}};
  j["relation"] = io::to_json(rel.p);
  if (!o.out.empty()) {
    std::ofstream os(o.out);
    if (!os) throw UsageError("cannot write " + o.out);
    os << j.dump(2) << "\n";
  }
  emit(o.format, j, cover_to_text(cp, o.expand_n) + "\n");
  if (!descends) throw ConsistencyError("cover polynomial failed the descent check");
  if (round_trip < rel.residual_precision / 2) throw ConsistencyError("Mobius round trip lost precision");
  return kExitOk;
}

int cmd_galois(const Options& o) {
  if (o.trials < 1) throw UsageError("--trials must be positive");
  std::ifstream is(o.cover_file);
  if (!is) throw UsageError("cannot read " + o.cover_file);
  json j;
  try {
    j = json::parse(is);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("cover file is not JSON: ") + e.what(), e.byte);
  }
  const CoverPoly cp = io::cover_from_json(j);
  ChebotarevConfig cfg;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.ext_degrees = o.ext_degrees;
  const std::uint64_t big = cp.q() * cp.q();
  const auto oracle = o.group == "pgl" ? pgl_oracle(big) : psl_oracle(big);
  const auto r = chebotarev_report(cp, cfg, oracle);
  const json rj = io::to_json(r);
  std::ostringstream text;
  text << "group " << r.oracle.label << ", " << r.samples << " samples, " << r.discarded << " discarded\n";
  for (const auto& [ct, n] : r.oracle.classes) {
    const auto it = r.observed.find(ct);
    const std::uint64_t obs = it == r.observed.end() ? 0 : it->second;
    text << "  " << ct.label() << ": observed " << obs << ", expected "
         << static_cast<double>(n) / static_cast<double>(r.oracle.order) * static_cast<double>(r.samples) << "\n";
  }
  for (const auto& ct : r.outside) text << "  " << ct.label() << ": observed " << r.observed.at(ct) << ", OUTSIDE\n";
  text << "containment: " << (r.containment ? "yes" : "no") << "\ncoverage: " << (r.coverage ? "yes" : "no")
       << "\nchi-square: " << r.distance << "\nmax deviation: " << r.max_deviation << "\n";
  emit(o.format, rj, text.str());
  return r.containment && r.coverage ? kExitOk : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"drinfeld-forge: Drinfeld modules, modular forms and explicit PSL(2, q^2) covers over F_q(T)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* sp = app.add_subcommand("search-prime", "Monic irreducible with given constant term or character");
  sp->add_option("--q", o.q, "Field order");
  sp->add_option("--d", o.d, "Degree")->required();
  sp->add_option("--const", o.constant, "Constant term");
  sp->add_option("--zeta", o.zeta, "Constant zeta for the character [zeta T / p]");
  sp->add_option("--sign", o.sign, "Required character value (+1 or -1)");

  auto* ph = app.add_subcommand("phi", "Drinfeld module of a flag point");
  ph->add_option("--q", o.q, "Field order");
  ph->add_option("--flag", o.flag, "Coordinates a_1,...,a_r (polynomials in T)")->required();
  ph->add_option("--a", o.a, "Also print phi_a for this polynomial");

  auto* al = app.add_subcommand("atkin-lehner", "Atkin-Lehner image of a flag point");
  al->add_option("--q", o.q, "Field order");
  al->add_option("--flag", o.flag, "Coordinates a_1,...,a_r (polynomials in T)")->required();

  auto* md = app.add_subcommand("motive-det", "Motive matrix, determinant and zeta of the Atkin-Lehner isogeny");
  md->add_option("--q", o.q, "Field order");
  md->add_option("--flag", o.flag, "Coordinates a_1,...,a_r (polynomials in T)")->required();

  auto* cv = app.add_subcommand("cover", "Explicit cover polynomial for a degree-2 prime N");
  cv->add_option("--q", o.q, "Field order");
  cv->add_option("--N", o.n, "Prime N (monic, degree 2, square constant term)");
  cv->add_option("--prec", o.prec, "s-adic precision of the Hauptmodul expansions");
  cv->add_flag("--expand-N", o.expand_n, "Write N out in the text form");
  cv->add_option("--out", o.out, "Write the JSON artifact to this file");

  auto* ga = app.add_subcommand("galois", "Chebotarev statistics of a cover polynomial");
  ga->add_option("cover", o.cover_file, "Cover JSON written by 'cover --out'")->required();
  ga->add_option("--trials", o.trials, "Number of specializations");
  ga->add_option("--seed", o.seed, "Random seed");
  ga->add_option("--ext-degrees", o.ext_degrees, "Residue field degrees to sample");
  ga->add_option("--group", o.group, "Oracle group")->check(CLI::IsMember({"psl", "pgl"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sp) return cmd_search_prime(o);
    if (*ph) return cmd_phi(o);
    if (*al) return cmd_atkin_lehner(o);
    if (*md) return cmd_motive_det(o);
    if (*cv) return cmd_cover(o);
    if (*ga) return cmd_galois(o);
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
