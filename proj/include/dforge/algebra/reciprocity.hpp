#ifndef DFORGE_ALGEBRA_RECIPROCITY_HPP
#define DFORGE_ALGEBRA_RECIPROCITY_HPP

#include <cstdint>
#include <limits>
#include <optional>

#include "dforge/algebra/ffpoly.hpp"
#include "dforge/algebra/modring.hpp"
#include "dforge/algebra/ratfn.hpp"

namespace dforge {

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) throw PreconditionError("q^d overflows 64 bits");
    r *= base;
  }
  return r;
}

inline void require_odd_field(const GaloisField& f) {
  if (f.characteristic() == 2) throw PreconditionError("quadratic characters need odd q");
}

}  // namespace detail

/// [a/p] = a^((q^d-1)/2) mod p, returned as +1, -1 or 0.
inline int quadratic_character(const UPoly& a, const UPoly& p) {
  detail::require_odd_field(*p.context());
  if (p.is_zero() || !p.is_monic() || !is_irreducible(p)) throw PreconditionError("quadratic character modulo a non-prime");
  const auto ctx = Residue::make_context(p);
  const Residue r(ctx, a);
  if (r.is_zero()) return 0;
  const std::uint64_t qd = detail::checked_pow(p.context()->order(), static_cast<unsigned>(p.degree()));
  const Residue v = power(r, (qd - 1) / 2);
  if (v == Residue::one(ctx)) return 1;
  if (v == -Residue::one(ctx)) return -1;
  throw ConsistencyError("Euler criterion produced a value outside {+1,-1}");
}

/// (-1)^(((q-1)/2) deg P deg Q); equals [P/Q][Q/P] for distinct monic primes.
inline int reciprocity_sign(const UPoly& P, const UPoly& Q) {
  detail::require_odd_field(*P.context());
  if (!P.is_monic() || !Q.is_monic()) throw PreconditionError("reciprocity needs monic polynomials");
  if (P == Q) throw PreconditionError("reciprocity needs distinct polynomials");
  if (!is_irreducible(P) || !is_irreducible(Q)) throw PreconditionError("reciprocity needs irreducible polynomials");
  const std::uint64_t e = ((P.context()->order() - 1) / 2) * static_cast<std::uint64_t>(P.degree()) *
                          static_cast<std::uint64_t>(Q.degree());
  return e % 2 == 0 ? 1 : -1;
}

/// First monic irreducible of degree d with constant term xi; candidates are
/// scanned with the T^1 coefficient most significant.
inline UPoly hansen_mullen_search(int d, const Gf& xi) {
  require(d >= 1, "degree must be >= 1");
  require(!xi.is_zero(), "constant term must be nonzero");
  std::optional<UPoly> found;
  for_each_monic_with_constant(xi.field(), d, xi, [&](const UPoly& f) {
    if (is_irreducible(f)) {
      found = f;
      return true;
    }
    return false;
  });
  if (!found) throw ConsistencyError("no irreducible polynomial with prescribed constant term");
  return *found;
}

/// A monic prime p of degree d with [zeta*T / p] = sign. Tries the
/// hansen_mullen_search candidate for every constant term first; the
/// character depends only on the constant term, so that always succeeds.
inline UPoly choose_prime(int d, const Gf& zeta, int sign) {
  require(d > 1, "choose_prime needs degree > 1");
  require(!zeta.is_zero(), "zeta must be nonzero");
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  const GaloisField& field = zeta.field();
  const UPoly zt = UPoly::monomial(zeta, 1);
  for (std::uint64_t c = 1; c < field.order(); ++c) {
    UPoly p = hansen_mullen_search(d, Gf(&field, static_cast<Gf::Code>(c)));
    if (quadratic_character(zt, p) == sign) return p;
  }
  for (const auto& p : monic_irreducibles(field, d))
    if (quadratic_character(zt, p) == sign) return p;
  throw ConsistencyError("no prime with the requested quadratic character");
}

}  // namespace dforge

#endif
