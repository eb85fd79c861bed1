#ifndef DFORGE_MODFORMS_SERIES_HPP
#define DFORGE_MODFORMS_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dforge/algebra/concepts.hpp"
#include "dforge/error.hpp"

namespace dforge {

/// s^v * (c_0 + c_1 s + ... + c_{n-1} s^{n-1} + O(s^n)) with c_0 != 0.
/// A series that vanishes to its precision has no coefficients and is
/// O(s^v); its relative precision is zero.
template <Field F>
class TruncSeries {
public:
  using Context = typename F::Context;

  /// O(s^abs_prec)
  TruncSeries(Context ctx, long long abs_prec) : ctx_(std::move(ctx)), v_(abs_prec) {}

  /// s^v * (coeffs + O(s^{coeffs.size()}))
  TruncSeries(Context ctx, long long v, std::vector<F> coeffs) : ctx_(std::move(ctx)), v_(v), c_(std::move(coeffs)) {
    normalize();
  }

  /// A polynomial in s known to absolute precision abs_prec.
  static TruncSeries from_poly(Context ctx, std::vector<F> coeffs, long long abs_prec) {
    coeffs.resize(static_cast<std::size_t>(std::max<long long>(abs_prec, 0)), F::zero(ctx));
    return TruncSeries(ctx, 0, std::move(coeffs));
  }

  static TruncSeries one(Context ctx, long long rel_prec) {
    std::vector<F> c(static_cast<std::size_t>(rel_prec), F::zero(ctx));
    if (!c.empty()) c[0] = F::one(ctx);
    return TruncSeries(ctx, 0, std::move(c));
  }

  /// s^k to relative precision rel_prec.
  static TruncSeries monomial(Context ctx, long long k, long long rel_prec) {
    auto r = one(ctx, rel_prec);
    r.v_ = k;
    return r;
  }

  const Context& context() const noexcept { return ctx_; }
  /// Exponent of the leading term; for a series zero to precision, its absolute precision.
  long long valuation() const noexcept { return v_; }
  long long rel_prec() const noexcept { return static_cast<long long>(c_.size()); }
  long long abs_prec() const noexcept { return v_ + rel_prec(); }
  bool is_zero_to_precision() const noexcept { return c_.empty(); }
  const std::vector<F>& coeffs() const noexcept { return c_; }
  const F& leading() const {
    if (c_.empty()) throw PreconditionError("series vanishes to its precision");
    return c_.front();
  }

  /// Coefficient of s^k; k must lie below the absolute precision.
  F coeff(long long k) const {
    if (k >= abs_prec()) throw PreconditionError("coefficient beyond the series precision");
    if (k < v_) return F::zero(ctx_);
    return c_[static_cast<std::size_t>(k - v_)];
  }

  TruncSeries operator+(const TruncSeries& o) const {
    const long long ap = std::min(abs_prec(), o.abs_prec());
    const long long v = std::min(v_, o.v_);
    if (v >= ap) return TruncSeries(ctx_, ap);
    std::vector<F> r(static_cast<std::size_t>(ap - v), F::zero(ctx_));
    for (long long k = v; k < ap; ++k) r[static_cast<std::size_t>(k - v)] = coeff_or_zero(k) + o.coeff_or_zero(k);
    return TruncSeries(ctx_, v, std::move(r));
  }

  TruncSeries operator-() const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return TruncSeries(ctx_, v_, std::move(r));
  }

  TruncSeries operator-(const TruncSeries& o) const { return *this + (-o); }

  TruncSeries operator*(const TruncSeries& o) const {
    if (c_.empty() || o.c_.empty()) {
      // O(s^a) * s^w (...) = O(s^{a+w})
      return TruncSeries(ctx_, v_ + o.v_);
    }
    const std::size_t n = std::min(c_.size(), o.c_.size());
    std::vector<F> r(n, F::zero(ctx_));
    for (std::size_t i = 0; i < n; ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return TruncSeries(ctx_, v_ + o.v_, std::move(r));
  }

  TruncSeries scale(const F& a) const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(a * x);
    return TruncSeries(ctx_, v_, std::move(r));
  }

  /// Multiplication by s^k.
  TruncSeries shift(long long k) const {
    TruncSeries r = *this;
    r.v_ += k;
    return r;
  }

  TruncSeries inverse() const {
    if (c_.empty()) throw PreconditionError("inverse of a series that vanishes to its precision");
    const F a0i = c_[0].inverse();
    std::vector<F> r(c_.size(), F::zero(ctx_));
    r[0] = a0i;
    for (std::size_t k = 1; k < c_.size(); ++k) {
      F acc = F::zero(ctx_);
      for (std::size_t j = 1; j <= k; ++j)
        if (!c_[j].is_zero()) acc = acc + c_[j] * r[k - j];
      r[k] = -(acc * a0i);
    }
    return TruncSeries(ctx_, -v_, std::move(r));
  }

  TruncSeries operator/(const TruncSeries& o) const { return *this * o.inverse(); }

  TruncSeries pow(std::uint64_t e) const {
    TruncSeries result = one(ctx_, c_.empty() ? 0 : rel_prec());
    if (c_.empty()) {
      if (e == 0) throw PreconditionError("zeroth power of a series that vanishes to its precision");
      return TruncSeries(ctx_, v_ * static_cast<long long>(e));
    }
    TruncSeries base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// The n-th root with leading coefficient 1. Needs p not dividing n,
  /// leading coefficient 1 and n | valuation. char_p is the field characteristic.
  TruncSeries nth_root(std::uint64_t n, std::uint64_t char_p) const {
    if (n == 0) throw PreconditionError("zeroth root");
    if (char_p != 0 && n % char_p == 0) throw PreconditionError("root order divisible by the characteristic");
    if (c_.empty()) throw PreconditionError("root of a series that vanishes to its precision");
    if (!(c_[0] == F::one(ctx_))) throw PreconditionError("root extraction needs leading coefficient 1");
    if (v_ % static_cast<long long>(n) != 0) throw PreconditionError("valuation not divisible by the root order");
    const TruncSeries unit(ctx_, 0, c_);
    const F inv_n = F::from_int(ctx_, static_cast<long long>(n)).inverse();
    // Newton: r <- r - (r^n - a) / (n r^{n-1}); each step doubles the correct prefix.
    TruncSeries r = one(ctx_, rel_prec());
    for (long long good = 1; good < rel_prec(); good *= 2) {
      const TruncSeries rn1 = r.pow(n - 1);
      r = r - ((rn1 * r - unit) / rn1).scale(inv_n);
    }
    if (!((r.pow(n) - unit).is_zero_to_precision())) throw ConsistencyError("root extraction did not converge");
    return r.shift(v_ / static_cast<long long>(n));
  }

  /// H(S) for a series S of positive valuation, where H = *this has valuation >= 0.
  TruncSeries compose(const TruncSeries& s) const {
    if (v_ < 0) throw PreconditionError("composition needs a series without pole");
    if (s.c_.empty() || s.v_ < 1) throw PreconditionError("inner series must have positive valuation");
    // error terms: O(S^{abs_prec}) and the precision of S itself
    const long long ap = abs_prec() > 1 ? std::min(abs_prec() * s.v_, s.abs_prec()) : abs_prec() * s.v_;
    TruncSeries acc(ctx_, ap);
    TruncSeries sp = one(ctx_, ap);
    for (long long k = 0; k < abs_prec(); ++k) {
      if (k > 0) sp = sp * s;
      if (sp.valuation() >= ap) break;
      const F ck = coeff(k);
      if (!ck.is_zero()) acc = acc + sp.scale(ck);
    }
    return acc;
  }

  /// Truncation to a smaller relative precision.
  TruncSeries truncate_rel(long long n) const {
    if (n >= rel_prec()) return *this;
    return TruncSeries(ctx_, v_, std::vector<F>(c_.begin(), c_.begin() + n));
  }

  bool operator==(const TruncSeries& o) const { return v_ == o.v_ && c_ == o.c_; }

  std::string to_string() const {
    std::string body;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      const std::string cs = c_[i].to_string();
      const std::string mono = i == 0 ? "" : (i == 1 ? "s" : "s^" + std::to_string(i));
      if (!body.empty()) body += " + ";
      if (mono.empty()) body += "(" + cs + ")";
      else if (cs == "1") body += mono;
      else body += "(" + cs + ")*" + mono;
    }
    if (!body.empty()) body += " + ";
    body += "O(s^" + std::to_string(c_.size()) + ")";
    return "s^" + std::to_string(v_) + " * (" + body + ")";
  }

private:
  F coeff_or_zero(long long k) const {
    if (k < v_ || k >= abs_prec()) return F::zero(ctx_);
    return c_[static_cast<std::size_t>(k - v_)];
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == 0) return;
    v_ += static_cast<long long>(lead);
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
  }

  Context ctx_;
  long long v_;
  std::vector<F> c_;
};

}  // namespace dforge

#endif
