#ifndef DFORGE_MODFORMS_HAUPTMODUL_HPP
#define DFORGE_MODFORMS_HAUPTMODUL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dforge/algebra/ffpoly.hpp"
#include "dforge/algebra/linalg.hpp"
#include "dforge/algebra/ratfn.hpp"
#include "dforge/drinfeld/drinfeld.hpp"
#include "dforge/modforms/bivar.hpp"
#include "dforge/modforms/series.hpp"

namespace dforge {

using SSeries = TruncSeries<RatFn>;
using KBivar = BivarPoly<RatFn>;

/// t^{t_exp} * unit, unit a series in s = t^{q-1}.
struct TSeries {
  long long t_exp;
  SSeries unit;

  TSeries operator*(const TSeries& o) const { return {t_exp + o.t_exp, unit * o.unit}; }
  TSeries operator/(const TSeries& o) const { return {t_exp - o.t_exp, unit / o.unit}; }

  /// Rewrites as a pure s-series; the t-exponent must be divisible by q-1.
  SSeries to_s(std::uint64_t q) const {
    const auto d = static_cast<long long>(q - 1);
    if (t_exp % d != 0) throw ConsistencyError("t-exponent " + std::to_string(t_exp) + " is not a multiple of q-1");
    return unit.shift(t_exp / d);
  }
};

/// Number of s-coefficients of h/t that the expansion of h determines.
inline long long h_precision_cap(std::uint64_t q) { return static_cast<long long>(q * q * q); }

/// h/t = -1/U_1 + s^{q^3-q^2}(1/U_1 - 1/U_1^2) - s^{q^3-1} + O(s^{q^3}),
/// U_1 = 1 - s^{q-1} + (T^q - T) s^q, to prec coefficients.
inline SSeries h_series(const GaloisField& fq, long long prec) {
  const std::uint64_t q = fq.order();
  const long long cap = h_precision_cap(q);
  if (prec < 1) throw PreconditionError("precision must be positive");
  if (prec > cap)
    throw PreconditionError("precision " + std::to_string(prec) + " exceeds the cap q^3 = " + std::to_string(cap) +
                            ": h is only known up to O(s^{q^3})");
  const GaloisField* ctx = &fq;
  const RatFn t = RatFn::variable(ctx);
  std::vector<RatFn> u(static_cast<std::size_t>(q + 1), RatFn::zero(ctx));
  u[0] = RatFn::one(ctx);
  u[q - 1] = u[q - 1] - RatFn::one(ctx);
  u[q] = u[q] + power(t, q) - t;
  const SSeries iu = SSeries::from_poly(ctx, u, cap).inverse();
  std::vector<RatFn> tail(static_cast<std::size_t>(cap), RatFn::zero(ctx));
  tail[static_cast<std::size_t>(cap - 1)] = RatFn::from_int(ctx, -1);
  const SSeries h = -iu + (iu - iu * iu).shift(cap - static_cast<long long>(q * q)) +
                    SSeries::from_poly(ctx, std::move(tail), cap);
  return h.truncate_rel(prec);
}

/// t(az) = t^{|a|} / (C_a(1/t) t^{|a|}), |a| = q^{deg a}.
inline TSeries t_of_az(const UPoly& a, long long prec) {
  if (!a.is_monic() || a.degree() < 1) throw PreconditionError("t(az) needs a monic polynomial of positive degree");
  const GaloisField* ctx = a.context();
  const std::uint64_t q = ctx->order();
  const auto c = carlitz(a);
  long long big = 1;
  for (int i = 0; i < a.degree(); ++i) big *= static_cast<long long>(q);
  std::vector<RatFn> den(static_cast<std::size_t>(prec), RatFn::zero(ctx));
  long long qj = 1;
  for (std::size_t j = 0; j < c.coeffs().size(); ++j, qj *= static_cast<long long>(q)) {
    const long long e = (big - qj) / static_cast<long long>(q - 1);
    if (e < prec) den[static_cast<std::size_t>(e)] = den[static_cast<std::size_t>(e)] + c.coeff(j);
  }
  return {big, SSeries::from_poly(ctx, std::move(den), prec).inverse()};
}

/// h(az) from h/t = H: t(az) * H(t(az)^{q-1}).
inline TSeries h_at(const UPoly& a, const SSeries& h_over_t) {
  const std::uint64_t q = a.context()->order();
  const TSeries tz = t_of_az(a, h_over_t.rel_prec());
  const SSeries saz = tz.unit.pow(q - 1).shift(tz.t_exp);
  return {tz.t_exp, tz.unit * h_over_t.compose(saz)};
}

struct Hauptmoduls {
  SSeries f_t;
  SSeries f_n;
  SSeries f;
  /// h(NTz) h(z) / (h(Tz) h(Nz))
  SSeries under_root;
};

inline void require_quadratic_prime(const UPoly& n) {
  if (n.degree() != 2 || !n.is_monic() || !is_irreducible(n))
    throw PreconditionError("N must be monic irreducible of degree 2");
}

inline Hauptmoduls hauptmoduls(const UPoly& n, long long prec) {
  require_quadratic_prime(n);
  const GaloisField& fq = *n.context();
  const std::uint64_t q = fq.order();
  const std::uint64_t p = fq.characteristic();
  const SSeries hs = h_series(fq, prec);
  const TSeries h{1, hs};
  const UPoly t = UPoly::variable(&fq);
  const TSeries ht = h_at(t, hs), hn = h_at(n, hs), hnt = h_at(n * t, hs);

  SSeries under = (hnt * h / (ht * hn)).to_s(q);
  if (under.valuation() != static_cast<long long>(q * q - 1) || !(under.leading() == RatFn::one(&fq)))
    throw ConsistencyError("quantity under the root does not start with s^{q^2-1}");
  SSeries f = under.nth_root(q * q - 1, p);
  return {(ht / h).to_s(q), (hn / h).to_s(q).nth_root(q + 1, p), std::move(f), std::move(under)};
}

struct RelationResult {
  KBivar p;
  /// g_0..g_{q^2+1}, the invariant as a polynomial in f
  std::vector<RatFn> g;
  Hauptmoduls forms;
  long long equations;
  long long unknowns;
  /// absolute s-precision to which P(f_T, f) vanishes
  long long residual_precision;
};

/// T^{q+1} f_T f^{q^2} + f/f_T = g(f), solved from s-expansions; returns
/// P(x, y) = T^{q+1} x^2 y^{q^2} - g(y) x + y with P(f_T, f) = 0.
inline RelationResult relation_poly(const UPoly& n, long long prec) {
  require_quadratic_prime(n);
  const GaloisField* ctx = n.context();
  if (!n.constant_term().is_square()) throw PreconditionError("constant term of N must be a square in F_q");
  const std::uint64_t q = ctx->order();
  const RatFn t = RatFn::variable(ctx);
  const RatFn tq1 = power(t, q + 1);

  Hauptmoduls hm = hauptmoduls(n, prec);
  const SSeries inv = (hm.f_t * hm.f.pow(q * q)).scale(tq1) + hm.f / hm.f_t;
  if (inv.valuation() < 0) throw ConsistencyError("invariant has a pole at the cusp");
  const long long unknowns = static_cast<long long>(q * q + 2);
  const long long equations = inv.abs_prec();
  if (equations < unknowns + 5)
    throw PreconditionError("precision too small: " + std::to_string(equations) + " equations for " +
                            std::to_string(unknowns) + " unknowns");

  std::vector<std::vector<RatFn>> a(static_cast<std::size_t>(equations), std::vector<RatFn>(static_cast<std::size_t>(unknowns), RatFn::zero(ctx)));
  std::vector<RatFn> b(static_cast<std::size_t>(equations), RatFn::zero(ctx));
  SSeries fk = SSeries::one(ctx, equations);
  for (long long k = 0; k < unknowns; ++k) {
    if (k > 0) fk = fk * hm.f;
    for (long long i = 0; i < equations; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = fk.coeff(i);
  }
  for (long long i = 0; i < equations; ++i) b[static_cast<std::size_t>(i)] = inv.coeff(i);
  std::vector<RatFn> g = solve_overdetermined(std::move(a), std::move(b));

  KBivar p(ctx);
  p.add_term(2, static_cast<int>(q * q), tq1);
  for (std::size_t k = 0; k < g.size(); ++k) p.add_term(1, static_cast<int>(k), -g[k]);
  p.add_term(0, 1, RatFn::one(ctx));

  const SSeries res = p.eval(hm.f_t, hm.f, [](const SSeries& e, const RatFn& c) { return e.scale(c); });
  if (!res.is_zero_to_precision()) throw ConsistencyError("P(f_T, f) does not vanish: " + res.to_string());
  return {std::move(p), std::move(g), std::move(hm), equations, unknowns, res.abs_prec()};
}

/// The unit lambda with P(1/(T^{q+1} x), 1/y) T^{q+1} x^2 y^{q^2+1} = lambda P(x, y).
inline RatFn wt_symmetry_unit(const KBivar& p, std::uint64_t q) {
  const auto ctx = p.context();
  const RatFn tq1 = power(RatFn::variable(ctx), q + 1);
  const int ydeg = static_cast<int>(q * q + 1);
  KBivar w(ctx);
  for (const auto& [k, c] : p.terms()) {
    if (k.first > 2 || k.second > ydeg) throw PreconditionError("polynomial exceeds bidegree (2, q^2+1)");
    w.add_term(2 - k.first, ydeg - k.second, c * power_signed(tq1, 1 - k.first));
  }
  if (p.is_zero()) throw PreconditionError("zero polynomial");
  const auto& [k0, c0] = *p.terms().begin();
  const RatFn lambda = w.coeff(k0.first, k0.second) / c0;
  if (!(w == p.scale(lambda))) throw ConsistencyError("relation polynomial is not w_T-symmetric");
  return lambda;
}

}  // namespace dforge

#endif
