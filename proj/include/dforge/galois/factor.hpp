#ifndef DFORGE_GALOIS_FACTOR_HPP
#define DFORGE_GALOIS_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dforge/algebra/ffpoly.hpp"

namespace dforge {

struct Factorization {
  Gf unit;
  /// monic irreducible factors with multiplicities, sorted by degree then coefficients
  std::vector<std::pair<Poly<Gf>, int>> factors;

  Poly<Gf> product() const {
    Poly<Gf> r = Poly<Gf>::constant(unit);
    for (const auto& [f, e] : factors) r = r * power(f, static_cast<std::uint64_t>(e));
    return r;
  }
};

namespace detail {

/// g with g^p = f, for f a polynomial in X^p.
inline Poly<Gf> pth_root(const Poly<Gf>& f) {
  const GaloisField& fld = *f.context();
  const std::uint64_t p = fld.characteristic();
  // inverse Frobenius on F_{p^m} is a -> a^{p^{m-1}}
  std::uint64_t e = 1;
  for (unsigned i = 1; i < fld.degree(); ++i) e *= p;
  std::vector<Gf> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(power(f.coeff(static_cast<std::size_t>(i)), e));
  return Poly<Gf>(&fld, std::move(c));
}

inline void squarefree(const Poly<Gf>& f, int mult, std::vector<std::pair<Poly<Gf>, int>>& out) {
  if (f.degree() < 1) return;
  const auto p = static_cast<int>(f.context()->characteristic());
  const Poly<Gf> d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * p, out);
    return;
  }
  Poly<Gf> c = gcd(f, d);
  Poly<Gf> w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    const Poly<Gf> y = gcd(w, c);
    const Poly<Gf> z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), mult * i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), mult * p, out);
}

/// (degree-d product, d) pairs for a squarefree monic f.
inline std::vector<std::pair<Poly<Gf>, int>> distinct_degree(Poly<Gf> f) {
  std::vector<std::pair<Poly<Gf>, int>> out;
  const auto ctx = f.context();
  const std::uint64_t Q = ctx->order();
  const Poly<Gf> x = Poly<Gf>::variable(ctx);
  Poly<Gf> h = x % f;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = pow_mod(h, Q, f);
    const Poly<Gf> g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

/// Splits a monic product of distinct degree-d irreducibles (odd field order).
inline void equal_degree(const Poly<Gf>& f, int d, std::mt19937_64& rng, std::vector<Poly<Gf>>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const auto ctx = f.context();
  const std::uint64_t Q = ctx->order();
  std::uniform_int_distribution<std::uint64_t> dist(0, Q - 1);
  while (true) {
    std::vector<Gf> c;
    for (int i = 0; i < f.degree(); ++i) c.push_back(Gf(ctx, static_cast<Gf::Code>(dist(rng))));
    const Poly<Gf> a(ctx, std::move(c));
    if (a.degree() < 1) continue;
    // a^{(Q^d-1)/2} = (a * a^Q * ... * a^{Q^{d-1}})^{(Q-1)/2}
    Poly<Gf> norm = a % f, conj = a % f;
    for (int i = 1; i < d; ++i) {
      conj = pow_mod(conj, Q, f);
      norm = mul_mod(norm, conj, f);
    }
    const Poly<Gf> b = pow_mod(norm, (Q - 1) / 2, f) - Poly<Gf>::one(ctx);
    const Poly<Gf> g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

inline bool poly_less(const Poly<Gf>& a, const Poly<Gf>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ca = a.coeff(static_cast<std::size_t>(i)).code(), cb = b.coeff(static_cast<std::size_t>(i)).code();
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace detail

/// Complete factorization over F_Q, Q odd: squarefree, distinct-degree and
/// equal-degree (Cantor-Zassenhaus) splitting. The random splitting uses a
/// fixed seed; the sorted result does not depend on it.
inline Factorization factor_ff(const Poly<Gf>& f, std::uint64_t seed = 0x5eed) {
  if (f.is_zero()) throw PreconditionError("factorization of the zero polynomial");
  if (f.context()->characteristic() == 2) throw PreconditionError("factorization needs odd characteristic");
  Factorization out{f.leading(), {}};
  std::vector<std::pair<Poly<Gf>, int>> sqf;
  detail::squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(seed);
  for (const auto& [g, e] : sqf)
    for (const auto& [h, d] : detail::distinct_degree(g)) {
      std::vector<Poly<Gf>> parts;
      detail::equal_degree(h, d, rng, parts);
      for (auto& p : parts) out.factors.emplace_back(std::move(p), e);
    }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (detail::poly_less(a.first, b.first)) return true;
    if (detail::poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  // merge equal factors arising from different squarefree layers
  std::vector<std::pair<Poly<Gf>, int>> merged;
  for (auto& fe : out.factors) {
    if (!merged.empty() && merged.back().first == fe.first) merged.back().second += fe.second;
    else merged.push_back(std::move(fe));
  }
  out.factors = std::move(merged);
  return out;
}

inline bool is_squarefree(const Poly<Gf>& f) {
  if (f.degree() < 1) return true;
  const Poly<Gf> d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

}  // namespace dforge

#endif
