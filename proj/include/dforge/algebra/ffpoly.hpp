#ifndef DFORGE_ALGEBRA_FFPOLY_HPP
#define DFORGE_ALGEBRA_FFPOLY_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "dforge/algebra/gf.hpp"
#include "dforge/algebra/poly.hpp"

namespace dforge {

/// Polynomials over finite fields: Frobenius powers modulo f, Rabin's
/// irreducibility test, root counting, enumeration.

/// X^(Q^k) mod f where Q is the order of f's coefficient field.
inline Poly<Gf> frobenius_power_mod(const Poly<Gf>& f, unsigned k) {
  const std::uint64_t Q = f.context()->order();
  Poly<Gf> x = Poly<Gf>::variable(f.context()) % f;
  for (unsigned i = 0; i < k; ++i) x = pow_mod(x, Q, f);
  return x;
}

/// Irreducible over the coefficient field. Constants are not irreducible.
inline bool is_irreducible(const Poly<Gf>& f) {
  if (f.is_zero()) throw PreconditionError("irreducibility of the zero polynomial");
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const auto ctx = f.context();
  const std::uint64_t Q = ctx->order();
  const Poly<Gf> fm = f.monic();
  const Poly<Gf> x = Poly<Gf>::variable(ctx);
  // powers[k] = X^(Q^k) mod f for k = 0..d
  std::vector<Poly<Gf>> powers{x % fm};
  for (int k = 1; k <= d; ++k) powers.push_back(pow_mod(powers.back(), Q, fm));
  if (!((powers[static_cast<std::size_t>(d)] - x) % fm).is_zero()) return false;
  for (auto l : detail::prime_divisors(static_cast<std::uint64_t>(d))) {
    auto g = gcd(fm, powers[static_cast<std::size_t>(d / static_cast<int>(l))] - x);
    if (g.degree() != 0) return false;
  }
  return true;
}

/// Number of distinct roots of f in the degree-k extension of its
/// coefficient field: deg gcd(f, X^(Q^k) - X).
inline int count_roots_in_extension(const Poly<Gf>& f, unsigned k) {
  if (f.is_zero()) throw PreconditionError("root count of the zero polynomial");
  if (f.degree() == 0) return 0;
  const Poly<Gf> fm = f.monic();
  auto xq = frobenius_power_mod(fm, k);
  return gcd(fm, xq - Poly<Gf>::variable(f.context())).degree();
}

/// Calls fn on every monic polynomial of degree d whose constant term is
/// `constant`, with the coefficients of T^1, T^2, ... T^(d-1) running in
/// lexicographic order (T^1 most significant). Stops when fn returns true.
inline bool for_each_monic_with_constant(const GaloisField& field, int d, const Gf& constant,
                                         const std::function<bool(const Poly<Gf>&)>& fn) {
  require(d >= 1, "degree must be positive");
  const std::uint64_t Q = field.order();
  const int free = d - 1;
  std::vector<std::uint64_t> digit(static_cast<std::size_t>(free), 0);
  while (true) {
    std::vector<Gf> c(static_cast<std::size_t>(d) + 1, Gf::zero(&field));
    c[0] = constant;
    for (int i = 0; i < free; ++i) c[static_cast<std::size_t>(i) + 1] = Gf(&field, static_cast<Gf::Code>(digit[static_cast<std::size_t>(i)]));
    c[static_cast<std::size_t>(d)] = Gf::one(&field);
    if (fn(Poly<Gf>(&field, std::move(c)))) return true;
    int pos = free - 1;  // T^(d-1) is the fastest-moving digit
    while (pos >= 0 && ++digit[static_cast<std::size_t>(pos)] == Q) {
      digit[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return false;
  }
}

/// All monic irreducibles of degree d, constant term ascending then the
/// same lexicographic order as above.
inline std::vector<Poly<Gf>> monic_irreducibles(const GaloisField& field, int d) {
  std::vector<Poly<Gf>> out;
  for (std::uint64_t c = 0; c < field.order(); ++c) {
    for_each_monic_with_constant(field, d, Gf(&field, static_cast<Gf::Code>(c)), [&](const Poly<Gf>& f) {
      if (is_irreducible(f)) out.push_back(f);
      return false;
    });
  }
  return out;
}

}  // namespace dforge

#endif
