#ifndef DFORGE_ALGEBRA_QUADEXT_HPP
#define DFORGE_ALGEBRA_QUADEXT_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "dforge/algebra/concepts.hpp"
#include "dforge/error.hpp"

namespace dforge {

template <Field F>
struct QuadField {
  F radicand;
};

/// a + b*w in F(w), w^2 = radicand. The radicand is fixed per context and
/// assumed to be a non-square of F.
template <Field F>
class QuadExt {
public:
  using Context = std::shared_ptr<const QuadField<F>>;

  QuadExt(Context ctx, F a, F b) : ctx_(std::move(ctx)), a_(std::move(a)), b_(std::move(b)) {}

  static Context make_context(const F& radicand) {
    if (radicand.is_zero()) throw PreconditionError("quadratic extension by sqrt(0)");
    return std::make_shared<const QuadField<F>>(QuadField<F>{radicand});
  }

  static QuadExt zero(const Context& c) { return {c, F::zero(base_ctx(c)), F::zero(base_ctx(c))}; }
  static QuadExt one(const Context& c) { return {c, F::one(base_ctx(c)), F::zero(base_ctx(c))}; }
  static QuadExt from_int(const Context& c, long long v) { return {c, F::from_int(base_ctx(c), v), F::zero(base_ctx(c))}; }
  static QuadExt embed(const Context& c, const F& a) { return {c, a, F::zero(base_ctx(c))}; }
  /// The square root of the radicand.
  static QuadExt root(const Context& c) { return {c, F::zero(base_ctx(c)), F::one(base_ctx(c))}; }

  const Context& context() const noexcept { return ctx_; }
  const F& rational_part() const noexcept { return a_; }
  const F& radical_part() const noexcept { return b_; }
  const F& radicand() const noexcept { return ctx_->radicand; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt operator+(const QuadExt& o) const { return {ctx_, a_ + o.a_, b_ + o.b_}; }
  QuadExt operator-(const QuadExt& o) const { return {ctx_, a_ - o.a_, b_ - o.b_}; }
  QuadExt operator-() const { return {ctx_, -a_, -b_}; }
  QuadExt operator*(const QuadExt& o) const {
    return {ctx_, a_ * o.a_ + b_ * o.b_ * ctx_->radicand, a_ * o.b_ + b_ * o.a_};
  }
  QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

  QuadExt conjugate() const { return {ctx_, a_, -b_}; }
  F norm() const { return a_ * a_ - b_ * b_ * ctx_->radicand; }

  QuadExt inverse() const {
    const F n = norm();
    if (n.is_zero()) throw PreconditionError("inverse of zero in quadratic extension");
    const F ni = n.inverse();
    return {ctx_, a_ * ni, -(b_ * ni)};
  }

  bool operator==(const QuadExt& o) const { return a_ == o.a_ && b_ == o.b_; }

  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string bs = "(" + b_.to_string() + ")*w";
    if (a_.is_zero()) return bs;
    return "(" + a_.to_string() + ")+" + bs;
  }

  /// (a + b w)^q = a^q + b^q N^((q-1)/2) w for odd q.
  friend QuadExt frobenius(const QuadExt& x, std::uint64_t q) {
    if (q % 2 == 0) throw PreconditionError("quadratic-extension Frobenius needs odd q");
    const F scale = power(x.ctx_->radicand, (q - 1) / 2);
    return {x.ctx_, frobenius(x.a_, q), frobenius(x.b_, q) * scale};
  }

private:
  static typename F::Context base_ctx(const Context& c) { return c->radicand.context(); }

  Context ctx_;
  F a_;
  F b_;
};

}  // namespace dforge

#endif
