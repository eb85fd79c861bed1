#ifndef DFORGE_ALGEBRA_RATFN_HPP
#define DFORGE_ALGEBRA_RATFN_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dforge/algebra/gf.hpp"
#include "dforge/algebra/poly.hpp"

namespace dforge {

/// Polynomial in T over F_q.
using UPoly = Poly<Gf>;

inline UPoly upoly_T(const GaloisField& f) { return UPoly::variable(&f); }

inline UPoly upoly_from_ints(const GaloisField& f, const std::vector<long long>& ascending) {
  std::vector<Gf> c;
  c.reserve(ascending.size());
  for (auto v : ascending) c.push_back(Gf::from_int(&f, v));
  return UPoly(&f, std::move(c));
}

/// a(T)^q for q a power of the characteristic: coefficients go to their
/// q-th powers and T to T^q.
inline UPoly frobenius(const UPoly& a, std::uint64_t q) {
  if (a.is_zero()) return a;
  std::vector<Gf> r(static_cast<std::size_t>(a.degree()) * q + 1, Gf::zero(a.context()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i * q] = a.coeffs()[i].pow(q);
  return UPoly(a.context(), std::move(r));
}

/// Element of K = F_q(T), kept as num/den with gcd 1 and den monic.
class RatFn {
public:
  using Context = const GaloisField*;

  explicit RatFn(UPoly num) : num_(std::move(num)), den_(UPoly::one(num_.context())) {}

  RatFn(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
    normalize();
  }

  static RatFn zero(Context f) { return RatFn(UPoly(f)); }
  static RatFn one(Context f) { return RatFn(UPoly::one(f)); }
  static RatFn from_int(Context f, long long v) { return RatFn(UPoly::from_int(f, v)); }
  static RatFn constant(const Gf& c) { return RatFn(UPoly::constant(c)); }
  static RatFn variable(Context f) { return RatFn(UPoly::variable(f)); }

  Context context() const noexcept { return num_.context(); }
  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return den_.degree() == 0 && num_.degree() <= 0; }

  RatFn operator+(const RatFn& o) const {
    if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFn operator-(const RatFn& o) const {
    if (den_ == o.den_) return RatFn(num_ - o.num_, den_);
    return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RatFn operator*(const RatFn& o) const {
    if (is_zero() || o.is_zero()) return zero(context());
    return RatFn(num_ * o.num_, den_ * o.den_);
  }
  RatFn operator/(const RatFn& o) const { return *this * o.inverse(); }
  RatFn operator-() const { return RatFn(-num_, den_, Normalized{}); }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

  RatFn inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero rational function");
    return RatFn(den_, num_);
  }

  bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// Value at t in an extension field (via `embed`); den(t) must be nonzero.
  template <class Embed>
  Gf eval(const Gf& t, Embed&& embed) const {
    Gf d = den_.eval_in(t, embed);
    if (d.is_zero()) throw PreconditionError("rational function has a pole at the evaluation point");
    return num_.eval_in(t, embed) / d;
  }

  std::string to_string() const {
    if (den_.degree() == 0) return num_.to_string("T");
    auto wrap = [](const UPoly& p) {
      auto s = p.to_string("T");
      return p.size() > 1 && s.find_first_of("+-") != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

  friend RatFn frobenius(const RatFn& x, std::uint64_t q) {
    return RatFn(frobenius(x.num_, q), frobenius(x.den_, q), Normalized{});
  }

private:
  struct Normalized {};
  RatFn(UPoly num, UPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = UPoly::one(num_.context());
      return;
    }
    if (den_.degree() > 0 && num_.degree() >= 0) {
      UPoly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    const Gf lc = den_.leading();
    if (!lc.is_one()) {
      const Gf inv = lc.inverse();
      num_ = num_.scale(inv);
      den_ = den_.scale(inv);
    }
  }

  UPoly num_;
  UPoly den_;
};

}  // namespace dforge

#endif
