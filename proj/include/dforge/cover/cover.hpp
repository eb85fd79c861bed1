#ifndef DFORGE_COVER_COVER_HPP
#define DFORGE_COVER_COVER_HPP

#include <cstdint>
#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dforge/algebra/ffpoly.hpp"
#include "dforge/algebra/quadext.hpp"
#include "dforge/algebra/ratfn.hpp"
#include "dforge/modforms/bivar.hpp"
#include "dforge/modforms/hauptmodul.hpp"

namespace dforge {

using QE = QuadExt<RatFn>;

/// Cover polynomial in (x, y) over F_q[T].
struct CoverPoly {
  KBivar poly;
  UPoly n;

  std::uint64_t q() const { return n.context()->order(); }
};

/// Numerator of P(T^{-(q+1)/2}(w+x)/(w-x), (w+y)/(w-y)) with w = sqrt(N), after
/// clearing (w-x)^{deg_x P}, (w-y)^{deg_y P} and powers of T. The result must be
/// free of w; it is divided by its content and scaled so that the coefficient of
/// x^{deg_x P} y^{deg_y P} has leading T-coefficient 1.
inline CoverPoly mobius_numerator(const KBivar& p, const UPoly& n) {
  if (p.is_zero()) throw PreconditionError("zero relation polynomial");
  const GaloisField* ctx = n.context();
  const std::uint64_t q = ctx->order();
  if (q % 2 == 0) throw PreconditionError("q must be odd");
  if (!n.is_monic() || !is_irreducible(n)) throw PreconditionError("N must be monic irreducible");

  using QB = BivarPoly<QE>;
  const auto qc = QE::make_context(RatFn(n));
  const QB w = QB::constant(QE::root(qc));
  const QB xp = w + QB::x(qc), xm = w - QB::x(qc), yp = w + QB::y(qc), ym = w - QB::y(qc);
  const int dx = p.x_degree(), dy = p.y_degree();
  auto powers = [&](const QB& b, int k) {
    std::vector<QB> v{QB::one(qc)};
    for (int i = 1; i <= k; ++i) v.push_back(v.back() * b);
    return v;
  };
  const auto xpp = powers(xp, dx), xmp = powers(xm, dx), ypp = powers(yp, dy), ymp = powers(ym, dy);

  // common denominator of P's coefficients
  UPoly den = UPoly::one(ctx);
  for (const auto& [k, c] : p.terms()) den = den / gcd(den, c.den()) * c.den();
  const RatFn th = power(RatFn::variable(ctx), (q + 1) / 2);

  QB acc(qc);
  for (const auto& [k, c] : p.terms()) {
    const auto [i, j] = k;
    const RatFn coeff = c * RatFn(den) * power(th, static_cast<std::uint64_t>(dx - i));
    acc = acc + (xpp[static_cast<std::size_t>(i)] * xmp[static_cast<std::size_t>(dx - i)] *
                 ypp[static_cast<std::size_t>(j)] * ymp[static_cast<std::size_t>(dy - j)])
                    .scale(QE::embed(qc, coeff));
  }

  KBivar out(ctx);
  for (const auto& [k, c] : acc.terms()) {
    if (!c.radical_part().is_zero())
      throw ConsistencyError("substituted relation keeps a sqrt(N) component at x^" + std::to_string(k.first) + " y^" +
                             std::to_string(k.second));
    if (!c.rational_part().is_polynomial()) throw ConsistencyError("denominators were not cleared");
    out.add_term(k.first, k.second, c.rational_part());
  }
  if (out.is_zero()) throw ConsistencyError("substituted relation vanishes identically");

  UPoly content(ctx);
  for (const auto& [k, c] : out.terms()) content = gcd(content, c.num());
  Gf lead = out.coeff(dx, dy).num().leading();
  if (lead.is_zero()) lead = out.terms().rbegin()->second.num().leading();
  out = out.scale(RatFn(UPoly::constant(lead.inverse()), content.monic()));
  return {std::move(out), n};
}

/// P(x, y) as a series identity: x(s), y(s) from the Hauptmoduln must be a root.
/// Returns the absolute s-precision to which the substituted cover polynomial vanishes.
inline long long round_trip_precision(const CoverPoly& cp, const Hauptmoduls& hm) {
  using QS = TruncSeries<QE>;
  const GaloisField* ctx = cp.n.context();
  const std::uint64_t q = cp.q();
  const auto qc = QE::make_context(RatFn(cp.n));
  auto lift = [&](const SSeries& s) {
    std::vector<QE> c;
    for (const auto& x : s.coeffs()) c.push_back(QE::embed(qc, x));
    return QS(qc, s.valuation(), std::move(c));
  };
  const long long prec = hm.f.rel_prec();
  const QE w = QE::root(qc);
  const QS one = QS::one(qc, prec + 1);
  const QS tf = lift(hm.f_t).scale(QE::embed(qc, power(RatFn::variable(ctx), (q + 1) / 2)));
  const QS x = ((tf - one) / (tf + one)).scale(w);
  const QS f = lift(hm.f);
  const QS y = ((f - one) / (f + one)).scale(w);
  const QS r = cp.poly.eval(x, y, [&](const QS& e, const RatFn& c) { return e.scale(QE::embed(qc, c)); });
  if (!r.is_zero_to_precision()) throw ConsistencyError("cover polynomial does not vanish on the Hauptmodul expansions");
  return r.abs_prec();
}

namespace detail {

/// Element of F_p printed in (-p/2, p/2]; other fields use the default form.
inline std::string signed_gf(const Gf& c, bool& negative) {
  negative = false;
  if (c.field().degree() != 1) return c.to_string();
  const auto p = static_cast<long long>(c.field().characteristic());
  long long v = c.code();
  if (v > p / 2) {
    v = p - v;
    negative = true;
  }
  return std::to_string(v);
}

inline std::string signed_upoly(const UPoly& a) {
  std::string out;
  for (int k = a.degree(); k >= 0; --k) {
    const Gf c = a.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    bool neg = false;
    std::string mag = signed_gf(c, neg);
    std::string mono = k == 0 ? "" : (k == 1 ? "T" : "T^" + std::to_string(k));
    std::string t = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
    if (out.empty()) out = neg ? "-" + t : t;
    else out += neg ? " - " + t : " + " + t;
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// Human-readable form; unless expand_n is set, the largest power of N
/// dividing each coefficient is written symbolically.
inline std::string cover_to_text(const CoverPoly& cp, bool expand_n = false) {
  std::vector<std::pair<KBivar::Key, RatFn>> v(cp.poly.terms().begin(), cp.poly.terms().end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.first.second != b.first.second ? a.first.second > b.first.second : a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [k, c] : v) {
    UPoly r = c.num();
    int nk = 0;
    if (!expand_n)
      while ((r % cp.n).is_zero()) {
        r = r / cp.n;
        ++nk;
      }
    bool neg = false;
    std::string head;
    const bool monomial = r.degree() >= 0 && [&] {
      for (int i = 0; i < r.degree(); ++i)
        if (!r.coeff(static_cast<std::size_t>(i)).is_zero()) return false;
      return true;
    }();
    std::vector<std::string> factors;
    if (monomial) {
      const std::string mag = detail::signed_gf(r.leading(), neg);
      if (mag != "1") factors.push_back(mag);
      if (r.degree() == 1) factors.emplace_back("T");
      else if (r.degree() > 1) factors.push_back("T^" + std::to_string(r.degree()));
    } else {
      factors.push_back("(" + detail::signed_upoly(r) + ")");
    }
    if (nk == 1) factors.emplace_back("N");
    else if (nk > 1) factors.push_back("N^" + std::to_string(nk));
    if (k.first == 1) factors.emplace_back("x");
    else if (k.first > 1) factors.push_back("x^" + std::to_string(k.first));
    if (k.second == 1) factors.emplace_back("y");
    else if (k.second > 1) factors.push_back("y^" + std::to_string(k.second));
    if (factors.empty()) factors.emplace_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) head += (i ? "*" : "") + factors[i];
    if (out.empty()) out = neg ? "-" + head : head;
    else out += neg ? " - " + head : " + " + head;
  }
  return out.empty() ? "0" : out;
}

struct MonomialMismatch {
  int x_exp;
  int y_exp;
  RatFn computed;  // after scaling by the unit
  RatFn reference;
};

struct CoverComparison {
  bool equal_up_to_unit;
  RatFn unit;  // reference = unit * computed where they agree
  std::vector<MonomialMismatch> mismatches;
};

/// Compares with a reference polynomial up to one unit of F_q(T), itemizing
/// every monomial where the scaled computed coefficient differs.
inline CoverComparison compare_cover(const KBivar& computed, const KBivar& reference) {
  const auto ctx = computed.context();
  if (computed.is_zero() || reference.is_zero()) throw PreconditionError("comparison with the zero polynomial");
  // unit from the reference's leading monomial (descending y, then x), or any shared monomial
  std::optional<RatFn> unit;
  for (auto it = reference.terms().rbegin(); it != reference.terms().rend() && !unit; ++it) {
    const RatFn c = computed.coeff(it->first.first, it->first.second);
    if (!c.is_zero()) unit = it->second / c;
  }
  CoverComparison out{false, unit.value_or(RatFn::one(ctx)), {}};
  const KBivar scaled = computed.scale(out.unit);
  std::set<KBivar::Key> keys;
  for (const auto& [k, c] : scaled.terms()) keys.insert(k);
  for (const auto& [k, c] : reference.terms()) keys.insert(k);
  for (const auto& k : keys) {
    const RatFn a = scaled.coeff(k.first, k.second), b = reference.coeff(k.first, k.second);
    if (!(a == b)) out.mismatches.push_back({k.first, k.second, a, b});
  }
  out.equal_up_to_unit = unit.has_value() && out.mismatches.empty();
  return out;
}

/// The polynomial in y over F_{q^k} obtained from T -> t0, x -> x0; e embeds F_q.
inline Poly<Gf> specialize(const CoverPoly& cp, const Embedding& e, const Gf& t0, const Gf& x0) {
  const GaloisField& big = *t0.context();
  if (x0.context() != &big) throw PreconditionError("specialization values from different fields");
  std::vector<Gf> c(static_cast<std::size_t>(std::max(cp.poly.y_degree(), 0) + 1), Gf::zero(&big));
  std::vector<Gf> xpow{Gf::one(&big)};
  for (const auto& [k, coeff] : cp.poly.terms()) {
    if (!coeff.is_polynomial()) throw PreconditionError("cover coefficients must be polynomials in T");
    while (static_cast<int>(xpow.size()) <= k.first) xpow.push_back(xpow.back() * x0);
    c[static_cast<std::size_t>(k.second)] =
        c[static_cast<std::size_t>(k.second)] + coeff.num().eval_in(t0, e) * xpow[static_cast<std::size_t>(k.first)];
  }
  return Poly<Gf>(&big, std::move(c));
}

inline Poly<Gf> specialize(const CoverPoly& cp, const Gf& t0, const Gf& x0) {
  return specialize(cp, Embedding(*cp.n.context(), *t0.context()), t0, x0);
}

struct DescentReport {
  bool sqrt_n_free;
  bool coefficients_polynomial;
  int x_degree;
  int y_degree;
  bool y_degree_ok;
  bool irreducible_specialization_found;
  std::string witness;  // "k=.., T=.., x=.." of the first irreducible specialization
};

/// Structural checks on a cover polynomial, including a search for a
/// specialization whose y-polynomial is irreducible of full degree.
inline DescentReport verify_descent(const CoverPoly& cp) {
  const std::uint64_t q = cp.q();
  DescentReport r{true, true, cp.poly.x_degree(), cp.poly.y_degree(), false, false, ""};
  r.y_degree_ok = r.y_degree == static_cast<int>(q * q + 1);
  for (const auto& [k, c] : cp.poly.terms())
    if (!c.is_polynomial()) r.coefficients_polynomial = false;
  if (!r.coefficients_polynomial) return r;
  const GaloisField& small = *cp.n.context();
  for (unsigned k = 1; k <= 3 && !r.irreducible_specialization_found; ++k) {
    const GaloisField& big = GaloisField::get(small.characteristic(), small.degree() * k);
    const auto els = elements(big);
    const Embedding e(small, big);
    for (std::size_t a = 1; a < els.size() && !r.irreducible_specialization_found && a < 64; ++a)
      for (std::size_t b = 0; b < els.size() && b < 64; ++b) {
        const Poly<Gf> f = specialize(cp, e, els[a], els[b]);
        if (f.degree() == r.y_degree && is_irreducible(f)) {
          r.irreducible_specialization_found = true;
          r.witness = "k=" + std::to_string(k) + " T=" + els[a].to_string() + " x=" + els[b].to_string();
          break;
        }
      }
  }
  return r;
}

}  // namespace dforge

#endif
