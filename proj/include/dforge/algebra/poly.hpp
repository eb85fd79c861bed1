#ifndef DFORGE_ALGEBRA_POLY_HPP
#define DFORGE_ALGEBRA_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dforge/algebra/concepts.hpp"
#include "dforge/error.hpp"

namespace dforge {

/// Dense univariate polynomial over a ring R, coefficients ascending,
/// no trailing zeros. The zero polynomial has degree -1.
template <Ring R>
class Poly {
public:
  using Context = typename R::Context;
  using Coeff = R;

  explicit Poly(Context ctx) : ctx_(ctx) {}
  Poly(Context ctx, std::vector<R> coeffs) : ctx_(ctx), c_(std::move(coeffs)) { trim(); }

  static Poly zero(Context ctx) { return Poly(ctx); }
  static Poly one(Context ctx) { return Poly(ctx, {R::one(ctx)}); }
  static Poly from_int(Context ctx, long long v) { return Poly(ctx, {R::from_int(ctx, v)}); }
  static Poly constant(const R& c) { return Poly(c.context(), {c}); }
  static Poly variable(Context ctx) { return monomial(R::one(ctx), 1); }
  static Poly monomial(const R& c, std::size_t k) {
    std::vector<R> v(k + 1, R::zero(c.context()));
    v[k] = c;
    return Poly(c.context(), std::move(v));
  }

  Context context() const noexcept { return ctx_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<R>& coeffs() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }

  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R::zero(ctx_); }
  R leading() const { return c_.empty() ? R::zero(ctx_) : c_.back(); }
  R constant_term() const { return coeff(0); }
  bool is_monic() const { return !c_.empty() && c_.back() == R::one(ctx_); }

  void set_coeff(std::size_t i, const R& v) {
    if (i >= c_.size()) c_.resize(i + 1, R::zero(ctx_));
    c_[i] = v;
    trim();
  }

  Poly operator+(const Poly& o) const {
    std::vector<R> r(std::max(c_.size(), o.c_.size()), R::zero(ctx_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(ctx_, std::move(r));
  }

  Poly operator-(const Poly& o) const {
    std::vector<R> r(std::max(c_.size(), o.c_.size()), R::zero(ctx_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return Poly(ctx_, std::move(r));
  }

  Poly operator-() const {
    std::vector<R> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return Poly(ctx_, std::move(r));
  }

  Poly operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly(ctx_);
    std::vector<R> r(c_.size() + o.c_.size() - 1, R::zero(ctx_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(ctx_, std::move(r));
  }

  Poly scale(const R& s) const {
    std::vector<R> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * s);
    return Poly(ctx_, std::move(r));
  }

  Poly shift(std::size_t k) const {
    if (c_.empty()) return *this;
    std::vector<R> r(k, R::zero(ctx_));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(ctx_, std::move(r));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  /// Euclidean division a = q*b + r, deg r < deg b. Needs an invertible
  /// leading coefficient of b.
  std::pair<Poly, Poly> divmod(const Poly& b) const
    requires Field<R>
  {
    if (b.is_zero()) throw PreconditionError("division by zero polynomial");
    if (degree() < b.degree()) return {Poly(ctx_), *this};
    const R lc_inv = b.leading().inverse();
    std::vector<R> rem = c_;
    std::vector<R> quo(c_.size() - b.c_.size() + 1, R::zero(ctx_));
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = rem.size(); k-- > db;) {
      if (rem[k].is_zero()) continue;
      const R f = rem[k] * lc_inv;
      quo[k - db] = f;
      for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = rem[k - db + i] - f * b.c_[i];
    }
    rem.resize(db);
    return {Poly(ctx_, std::move(quo)), Poly(ctx_, std::move(rem))};
  }

  Poly operator/(const Poly& b) const
    requires Field<R>
  {
    return divmod(b).first;
  }
  Poly operator%(const Poly& b) const
    requires Field<R>
  {
    return divmod(b).second;
  }

  Poly monic() const
    requires Field<R>
  {
    if (c_.empty()) return *this;
    return scale(leading().inverse());
  }

  Poly derivative() const {
    std::vector<R> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * R::from_int(ctx_, static_cast<long long>(i)));
    return Poly(ctx_, std::move(r));
  }

  R eval(const R& x) const {
    R acc = R::zero(ctx_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Horner evaluation at an element of any ring S that the coefficients
  /// map into via `lift`.
  template <class S, class Lift>
  S eval_in(const S& x, Lift&& lift) const {
    S acc = S::zero(x.context());
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + lift(c_[i]);
    return acc;
  }

  Poly compose(const Poly& g) const {
    Poly acc(ctx_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly::constant(c_[i]);
    return acc;
  }

  template <class Fn>
  auto map_coeffs(Fn&& fn) const {
    using S = decltype(fn(c_.front()));
    std::vector<S> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(fn(x));
    using P = Poly<S>;
    if (r.empty()) throw PreconditionError("map_coeffs on zero polynomial needs a target context");
    auto ctx = r.front().context();
    return P(ctx, std::move(r));
  }

  std::string to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      std::string cs = c_[k].to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      bool needs_paren = cs.find_first_of("+-/") != std::string::npos;
      if (!out.empty()) out += neg ? "-" : "+";
      else if (neg) out += "-";
      std::string mono;
      if (k >= 1) mono = var + (k > 1 ? "^" + std::to_string(k) : "");
      if (k == 0) out += needs_paren ? "(" + cs + ")" : cs;
      else if (cs == "1") out += mono;
      else out += (needs_paren ? "(" + cs + ")" : cs) + "*" + mono;
    }
    return out;
  }

  std::string to_string() const { return to_string("T"); }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Context ctx_;
  std::vector<R> c_;
};

template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <Field F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const Poly<F>& a, const Poly<F>& b) {
  auto ctx = a.context();
  Poly<F> r0 = a, r1 = b, s0 = Poly<F>::one(ctx), s1(ctx), t0(ctx), t1 = Poly<F>::one(ctx);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const F inv = r0.leading().inverse();
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

template <Field F>
Poly<F> mul_mod(const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return (a * b) % m;
}

template <Field F>
Poly<F> pow_mod(Poly<F> base, std::uint64_t e, const Poly<F>& m) {
  Poly<F> r = Poly<F>::one(m.context()) % m;
  base = base % m;
  while (e) {
    if (e & 1U) r = mul_mod(r, base, m);
    e >>= 1U;
    if (e) base = mul_mod(base, base, m);
  }
  return r;
}

}  // namespace dforge

#endif
