#ifndef DFORGE_DRINFELD_DRINFELD_HPP
#define DFORGE_DRINFELD_DRINFELD_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dforge/algebra/ffpoly.hpp"
#include "dforge/algebra/gf.hpp"
#include "dforge/algebra/ratfn.hpp"
#include "dforge/error.hpp"
#include "dforge/ore/ore.hpp"

namespace dforge {

/// Coefficient field L together with the image of T and the embedding of F_q.
template <Field F>
struct DrinfeldBase {
  std::uint64_t q;
  F t;
  std::function<F(const Gf&)> lift;

  typename F::Context context() const { return t.context(); }
  F constant(long long v) const { return F::from_int(t.context(), v); }
};

/// L = F_q(T), T itself.
inline DrinfeldBase<RatFn> ratfn_base(const GaloisField& fq) {
  const GaloisField* ctx = &fq;
  return {fq.order(), RatFn::variable(ctx), [ctx](const Gf& c) {
            if (c.context() != ctx) throw PreconditionError("constant from another field");
            return RatFn::constant(c);
          }};
}

/// L = a finite extension of F_q with T specialized to t.
inline DrinfeldBase<Gf> finite_base(const GaloisField& fq, const Gf& t) {
  Embedding e(fq, *t.context());
  return {fq.order(), t, [e](const Gf& c) { return e(c); }};
}

template <Field F>
class DrinfeldModule {
public:
  /// phi_T = T + g[0] tau + ... + g[r-1] tau^r
  DrinfeldModule(DrinfeldBase<F> base, std::vector<F> g) : base_(std::move(base)), g_(std::move(g)) {
    if (g_.empty() || g_.back().is_zero()) throw PreconditionError("Drinfeld module needs a nonzero leading coefficient");
  }

  /// Reads phi_T off a twisted polynomial; its constant term must be T.
  static DrinfeldModule from_phi_T(DrinfeldBase<F> base, const OrePoly<F>& phi_t) {
    if (phi_t.degree() < 1) throw PreconditionError("phi_T must have positive tau-degree");
    if (!(phi_t.coeff(0) == base.t)) throw PreconditionError("constant term of phi_T must be T");
    std::vector<F> g(phi_t.coeffs().begin() + 1, phi_t.coeffs().end());
    return DrinfeldModule(std::move(base), std::move(g));
  }

  const DrinfeldBase<F>& base() const noexcept { return base_; }
  int rank() const noexcept { return static_cast<int>(g_.size()); }
  const std::vector<F>& g() const noexcept { return g_; }
  const F& leading() const { return g_.back(); }

  OrePoly<F> phi_T() const {
    std::vector<F> c{base_.t};
    c.insert(c.end(), g_.begin(), g_.end());
    return OrePoly<F>(base_.context(), base_.q, std::move(c));
  }

  /// phi_a by Horner's rule in phi_T.
  OrePoly<F> phi(const UPoly& a) const {
    const auto ctx = base_.context();
    if (a.is_zero()) return OrePoly<F>(ctx, base_.q);
    const OrePoly<F> pt = phi_T();
    const auto& c = a.coeffs();
    OrePoly<F> acc = OrePoly<F>::constant(base_.lift(c.back()), base_.q);
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * pt + OrePoly<F>::constant(base_.lift(c[i]), base_.q);
    return acc;
  }

  bool operator==(const DrinfeldModule& o) const { return base_.q == o.base_.q && base_.t == o.base_.t && g_ == o.g_; }

  std::string to_string() const { return phi_T().to_string(); }

private:
  DrinfeldBase<F> base_;
  std::vector<F> g_;
};

template <Field F>
DrinfeldModule<F> carlitz_module(const DrinfeldBase<F>& base) {
  return DrinfeldModule<F>(base, {F::one(base.context())});
}

/// C_a as an additive polynomial over F_q(T).
inline AdditivePoly<RatFn> carlitz(const UPoly& a) {
  const auto& fq = *a.context();
  return to_additive(carlitz_module(ratfn_base(fq)).phi(a));
}

/// Number of n-torsion points of phi over the degree-k extension of its
/// (finite) coefficient field.
inline std::uint64_t torsion_count(const DrinfeldModule<Gf>& dm, const UPoly& n, unsigned k) {
  if (n.is_zero()) throw PreconditionError("torsion of the zero ideal");
  if (k == 0) throw PreconditionError("extension degree must be positive");
  const OrePoly<Gf> pn = dm.phi(n);
  if (pn.coeff(0).is_zero()) throw PreconditionError("torsion polynomial is inseparable (linear coefficient vanishes)");
  return static_cast<std::uint64_t>(count_roots_in_extension(to_additive(pn).to_poly(), k));
}

/// Projective coordinates (a_1 : ... : a_r).
template <Field F>
struct FlagPoint {
  std::vector<F> coords;

  int rank() const noexcept { return static_cast<int>(coords.size()); }
  bool is_moduli_point() const {
    for (const auto& a : coords)
      if (a.is_zero()) return false;
    return true;
  }
  bool projectively_equals(const FlagPoint& o) const {
    if (coords.size() != o.coords.size()) return false;
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t j = i + 1; j < coords.size(); ++j)
        if (!(coords[i] * o.coords[j] == coords[j] * o.coords[i])) return false;
    return true;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? " : " : "") + coords[i].to_string();
    return s + ")";
  }
};

/// (a_1 tau + T)(a_2 tau + 1)...(a_r tau + 1)
template <Field F>
DrinfeldModule<F> flag_to_phi(const FlagPoint<F>& pt, const DrinfeldBase<F>& base) {
  if (pt.coords.empty()) throw PreconditionError("flag point of rank zero");
  if (!pt.is_moduli_point()) throw PreconditionError("flag point has a zero coordinate (cusp)");
  std::vector<std::pair<F, F>> lin;
  lin.emplace_back(pt.coords[0], base.t);
  for (std::size_t i = 1; i < pt.coords.size(); ++i) lin.emplace_back(pt.coords[i], F::one(base.context()));
  return DrinfeldModule<F>::from_phi_T(base, ore_product_of_linears(lin, base.q));
}

/// The isogeny (a_{s+1} tau + 1)...(a_r tau + 1) defining w.
template <Field F>
OrePoly<F> atkin_lehner_isogeny(const FlagPoint<F>& pt, const DrinfeldBase<F>& base) {
  const int r = pt.rank();
  if (r % 2 != 0 || r == 0) throw PreconditionError("Atkin-Lehner involution needs even rank");
  std::vector<std::pair<F, F>> lin;
  for (int i = r / 2; i < r; ++i) lin.emplace_back(pt.coords[static_cast<std::size_t>(i)], F::one(base.context()));
  return ore_product_of_linears(lin, base.q);
}

/// w(a) = (T^q a_{s+1} : T^{q-1} a_{s+2} : ... : T^{q-1} a_r : T^{-1} a_1 : a_2 : ... : a_s).
/// These unscaled coordinates give exactly u phi u^{-1}.
template <Field F>
FlagPoint<F> atkin_lehner(const FlagPoint<F>& pt, const DrinfeldBase<F>& base) {
  const int r = pt.rank();
  if (r % 2 != 0 || r == 0) throw PreconditionError("Atkin-Lehner involution needs even rank");
  if (base.t.is_zero()) throw PreconditionError("T must be invertible in the coefficient field");
  const auto s = static_cast<std::size_t>(r / 2);
  const F tq1 = power(base.t, base.q - 1);
  const auto& a = pt.coords;
  std::vector<F> b;
  b.push_back(tq1 * base.t * a[s]);
  for (std::size_t i = s + 1; i < a.size(); ++i) b.push_back(tq1 * a[i]);
  b.push_back(a[0] / base.t);
  for (std::size_t i = 1; i < s; ++i) b.push_back(a[i]);
  return {std::move(b)};
}

/// (T^{(q+1)/2} : 0 : ... : 0 : 1 : 0 : ... : 0), the 1 in slot s+1.
template <Field F>
FlagPoint<F> al_fixed_point(int r, const DrinfeldBase<F>& base) {
  if (r % 2 != 0 || r <= 0) throw PreconditionError("fixed point needs even rank");
  if (base.q % 2 == 0) throw PreconditionError("fixed point needs odd q");
  std::vector<F> c(static_cast<std::size_t>(r), F::zero(base.context()));
  c[0] = power(base.t, (base.q + 1) / 2);
  c[static_cast<std::size_t>(r / 2)] = F::one(base.context());
  return {std::move(c)};
}

/// Top exterior power: T + (-1)^{r-1} g_r tau.
template <Field F>
DrinfeldModule<F> wedge_phi(const DrinfeldModule<F>& dm) {
  F lead = dm.leading();
  if (dm.rank() % 2 == 0) lead = -lead;
  return DrinfeldModule<F>(dm.base(), {lead});
}

/// Entry [j][i] is the tau^j-coordinate (a polynomial in Y) of tau^i * u.
template <Field F>
using MotiveMatrix = std::vector<std::vector<Poly<F>>>;

/// Coordinates of m in the motive of phi: m = sum_j c_j(phi_T) * ... with
/// Y acting by right multiplication with phi_T, basis 1, tau, ..., tau^{r-1}.
template <Field F>
std::vector<Poly<F>> motive_coordinates(OrePoly<F> m, const DrinfeldModule<F>& phi) {
  const auto ctx = phi.base().context();
  const auto q = phi.base().q;
  const int r = phi.rank();
  std::vector<Poly<F>> out(static_cast<std::size_t>(r), Poly<F>(ctx));
  std::vector<OrePoly<F>> powers{OrePoly<F>::constant(F::one(ctx), q)};
  const OrePoly<F> pt = phi.phi_T();
  while (!m.is_zero()) {
    const int deg = m.degree();
    const auto j = static_cast<std::size_t>(deg % r);
    const auto k = static_cast<std::size_t>(deg / r);
    while (powers.size() <= k) powers.push_back(powers.back() * pt);
    const OrePoly<F> basis = OrePoly<F>::tau(ctx, q, j) * powers[k];
    const F c = m.leading() / basis.leading();
    out[j] = out[j] + Poly<F>::monomial(c, k);
    m = m - basis.scale_left(c);
    if (!m.is_zero() && m.degree() >= deg) throw ConsistencyError("motive reduction failed to lower the degree");
  }
  return out;
}

/// Matrix of the motive map M_target -> M_source, m -> m u, for an isogeny
/// u with u phi_source = phi_target u. Coordinates are taken in M_source.
template <Field F>
MotiveMatrix<F> motive_matrix(const OrePoly<F>& u, const DrinfeldModule<F>& source, const DrinfeldModule<F>& target) {
  if (source.rank() != target.rank()) throw PreconditionError("isogeny between modules of different rank");
  if (u.is_zero()) throw PreconditionError("zero isogeny");
  if (!(u * source.phi_T() == target.phi_T() * u)) throw PreconditionError("u is not an isogeny from source to target");
  const auto r = static_cast<std::size_t>(source.rank());
  const auto ctx = source.base().context();
  MotiveMatrix<F> m(r, std::vector<Poly<F>>(r, Poly<F>(ctx)));
  OrePoly<F> tu = u;
  for (std::size_t i = 0; i < r; ++i) {
    if (i > 0) tu = OrePoly<F>::tau(ctx, source.base().q) * tu;
    auto col = motive_coordinates(tu, source);
    for (std::size_t j = 0; j < r; ++j) m[j][i] = col[j];
  }
  return m;
}

/// Division-free determinant by expansion along rows, memoized on column sets.
template <Ring R>
R determinant(const std::vector<std::vector<R>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw PreconditionError("determinant of an empty matrix");
  if (n > 20) throw PreconditionError("matrix too large for subset expansion");
  for (const auto& row : m)
    if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
  const auto ctx = m[0][0].context();
  // d[mask]: determinant of the first popcount(mask) rows restricted to columns in mask
  std::vector<R> d(std::size_t{1} << n, R::zero(ctx));
  d[0] = R::one(ctx);
  for (std::size_t mask = 1; mask < d.size(); ++mask) {
    const auto row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    R acc = R::zero(ctx);
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1U)) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << c);
      const int after = std::popcount(rest >> c);
      if (!m[row][c].is_zero() && !d[rest].is_zero()) {
        R term = m[row][c] * d[rest];
        acc = after % 2 == 0 ? acc + term : acc - term;
      }
    }
    d[mask] = acc;
  }
  return d.back();
}

/// Result of the determinant computation behind the constant zeta.
struct ZetaResult {
  Gf zeta;
  RatFn l;  // det(u) = l * Y^s
  MotiveMatrix<RatFn> matrix;
  bool zeta_is_square;
};

namespace detail {

/// c * T^e0 * a_1^e1 * ... with integer exponents.
struct FormalMonomial {
  long long sign = 1;
  std::vector<long long> exps;
};

}  // namespace detail

/// Constant zeta of the determinant of the Atkin-Lehner isogeny at a moduli
/// point, normalized to the Carlitz module on both sides. The (q-1)-th roots
/// in the normalization are tracked as formal monomials in T and the a_i.
inline ZetaResult motive_det_zeta(const FlagPoint<RatFn>& pt, const DrinfeldBase<RatFn>& base) {
  const int r = pt.rank();
  if (r % 2 != 0 || r == 0) throw PreconditionError("zeta needs even rank");
  if (!pt.is_moduli_point()) throw PreconditionError("zeta needs a moduli point");
  const auto q = base.q;
  const int s = r / 2;
  const auto phi = flag_to_phi(pt, base);
  const auto u = atkin_lehner_isogeny(pt, base);
  auto [psi_t, rem] = ore_right_divmod(u * phi.phi_T(), u);
  if (!rem.is_zero()) throw ConsistencyError("u phi is not right-divisible by u");
  const auto psi = DrinfeldModule<RatFn>::from_phi_T(base, psi_t);
  if (!(flag_to_phi(atkin_lehner(pt, base), base) == psi))
    throw ConsistencyError("Atkin-Lehner coordinates disagree with u phi u^{-1}");

  auto mat = motive_matrix(u, phi, psi);
  const Poly<RatFn> det = determinant(mat);
  if (det.degree() != s) throw ConsistencyError("determinant has the wrong Y-degree");
  for (int k = 0; k < s; ++k)
    if (!det.coeff(static_cast<std::size_t>(k)).is_zero()) throw ConsistencyError("determinant is not a monomial in Y");
  const RatFn l = det.leading();

  // lead(phi) = prod a_j^{q^{j-1}}; lead(psi) from the w-coordinates.
  const auto atoms = static_cast<std::size_t>(r) + 1;
  std::vector<long long> e_phi(atoms, 0), e_psi(atoms, 0);
  long long qi = 1;
  for (int i = 1; i <= r; ++i, qi *= static_cast<long long>(q)) {
    e_phi[static_cast<std::size_t>(i)] += qi;
    const int src = i <= s ? s + i : i - s;
    long long te = 0;
    if (i == 1) te = static_cast<long long>(q);
    else if (i <= s) te = static_cast<long long>(q) - 1;
    else if (i == s + 1) te = -1;
    e_psi[static_cast<std::size_t>(src)] += qi;
    e_psi[0] += te * qi;
  }
  // Both sides carry the same sign (-1)^{r-1}, so the ratio's constant is 1.
  RatFn m = RatFn::one(base.context());
  for (std::size_t i = 0; i < atoms; ++i) {
    const long long diff = e_psi[i] - e_phi[i];
    if (diff % static_cast<long long>(q - 1) != 0) throw ConsistencyError("normalizing roots do not cancel");
    const RatFn atom = i == 0 ? base.t : pt.coords[i - 1];
    m = m * power_signed(atom, diff / static_cast<long long>(q - 1));
  }
  const RatFn z = l * m;
  if (!z.is_constant() || z.is_zero()) throw ConsistencyError("zeta is not a nonzero constant: " + z.to_string());
  const Gf zeta = z.num().constant_term();
  return {zeta, l, std::move(mat), zeta.is_square()};
}

/// Resultant via the Sylvester matrix, rows of f first.
template <Field F>
F resultant(const Poly<F>& f, const Poly<F>& g) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant with the zero polynomial");
  const int n = f.degree(), m = g.degree();
  const auto ctx = f.context();
  if (n == 0 && m == 0) return F::one(ctx);
  const auto size = static_cast<std::size_t>(n + m);
  std::vector<std::vector<F>> a(size, std::vector<F>(size, F::zero(ctx)));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f.coeff(static_cast<std::size_t>(n - k));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k)
      a[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i + k)] = g.coeff(static_cast<std::size_t>(m - k));
  // Gaussian elimination
  F det = F::one(ctx);
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t p = c;
    while (p < size && a[p][c].is_zero()) ++p;
    if (p == size) return F::zero(ctx);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    const F inv = a[c][c].inverse();
    for (std::size_t rr = c + 1; rr < size; ++rr) {
      if (a[rr][c].is_zero()) continue;
      const F factor = a[rr][c] * inv;
      for (std::size_t k = c; k < size; ++k) a[rr][k] = a[rr][k] - factor * a[c][k];
    }
  }
  return det;
}

/// Res(C_p, C_p') where C_p' = p; equals p^{q^d} with the Sylvester sign convention above.
inline UPoly carlitz_disc(const UPoly& p) {
  if (!p.is_monic() || !is_irreducible(p)) throw PreconditionError("carlitz_disc needs a monic irreducible polynomial");
  const Poly<RatFn> c = carlitz(p).to_poly();
  const Poly<RatFn> dc = c.derivative();
  if (!(dc == Poly<RatFn>::constant(RatFn(p)))) throw ConsistencyError("derivative of C_p is not p");
  const RatFn res = resultant(c, dc);
  if (!res.is_polynomial()) throw ConsistencyError("resultant is not a polynomial");
  return res.num();
}

}  // namespace dforge

#endif
