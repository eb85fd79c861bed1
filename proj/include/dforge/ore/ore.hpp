#ifndef DFORGE_ORE_ORE_HPP
#define DFORGE_ORE_ORE_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "dforge/algebra/concepts.hpp"
#include "dforge/algebra/poly.hpp"
#include "dforge/error.hpp"

namespace dforge {

inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Twisted polynomial sum c_i tau^i over a field F, where tau x = x^q tau.
/// The twist exponent q is part of the value; mixing rings with different
/// q is an error.
template <Field F>
class OrePoly {
public:
  using Context = typename F::Context;

  OrePoly(Context ctx, std::uint64_t q) : ctx_(std::move(ctx)), q_(q) {}
  OrePoly(Context ctx, std::uint64_t q, std::vector<F> coeffs) : ctx_(std::move(ctx)), q_(q), c_(std::move(coeffs)) {
    trim();
  }

  static OrePoly constant(const F& c, std::uint64_t q) { return OrePoly(c.context(), q, {c}); }
  static OrePoly tau(Context ctx, std::uint64_t q, std::size_t k = 1) {
    std::vector<F> v(k + 1, F::zero(ctx));
    v[k] = F::one(ctx);
    return OrePoly(ctx, q, std::move(v));
  }
  /// c * tau + d
  static OrePoly linear(const F& c, const F& d, std::uint64_t q) { return OrePoly(c.context(), q, {d, c}); }

  const Context& context() const noexcept { return ctx_; }
  std::uint64_t twist() const noexcept { return q_; }
  int degree() const noexcept { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<F>& coeffs() const noexcept { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F::zero(ctx_); }
  F leading() const { return c_.empty() ? F::zero(ctx_) : c_.back(); }

  OrePoly operator+(const OrePoly& o) const {
    check(o);
    std::vector<F> r(std::max(c_.size(), o.c_.size()), F::zero(ctx_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return OrePoly(ctx_, q_, std::move(r));
  }

  OrePoly operator-(const OrePoly& o) const { return *this + (-o); }

  OrePoly operator-() const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return OrePoly(ctx_, q_, std::move(r));
  }

  /// (sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^(q^i) tau^(i+j)
  OrePoly operator*(const OrePoly& o) const {
    check(o);
    if (c_.empty() || o.c_.empty()) return OrePoly(ctx_, q_);
    std::vector<F> r(c_.size() + o.c_.size() - 1, F::zero(ctx_));
    std::vector<F> twisted = o.c_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i > 0)
        for (auto& b : twisted) b = frobenius(b, q_);
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < twisted.size(); ++j) r[i + j] = r[i + j] + c_[i] * twisted[j];
    }
    return OrePoly(ctx_, q_, std::move(r));
  }

  /// Left scalar multiple c * this.
  OrePoly scale_left(const F& c) const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(c * x);
    return OrePoly(ctx_, q_, std::move(r));
  }

  bool operator==(const OrePoly& o) const { return q_ == o.q_ && c_ == o.c_; }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      std::string cs = c_[k].to_string();
      if (!out.empty()) out += " + ";
      std::string mono = k == 0 ? "" : (k == 1 ? "tau" : "tau^" + std::to_string(k));
      if (k == 0) out += "(" + cs + ")";
      else if (cs == "1") out += mono;
      else out += "(" + cs + ")*" + mono;
    }
    return out;
  }

private:
  void check(const OrePoly& o) const {
    if (q_ != o.q_ || !(ctx_ == o.ctx_)) throw PreconditionError("twisted polynomials over different coefficient rings");
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Context ctx_;
  std::uint64_t q_;
  std::vector<F> c_;
};

/// Right Euclidean division: w = quo * d + rem with deg rem < deg d.
template <Field F>
std::pair<OrePoly<F>, OrePoly<F>> ore_right_divmod(const OrePoly<F>& w, const OrePoly<F>& d) {
  if (d.is_zero()) throw PreconditionError("right division by zero twisted polynomial");
  const auto q = w.twist();
  if (q != d.twist()) throw PreconditionError("twisted polynomials over different coefficient rings");
  OrePoly<F> rem = w;
  const int n = d.degree();
  if (rem.degree() < n) return {OrePoly<F>(w.context(), q), rem};
  std::vector<F> quo(static_cast<std::size_t>(rem.degree() - n + 1), F::zero(w.context()));
  // frob_lead[k] = lead(d)^(q^k)
  std::vector<F> frob_lead{d.leading()};
  while (!rem.is_zero() && rem.degree() >= n) {
    const auto k = static_cast<std::size_t>(rem.degree() - n);
    while (frob_lead.size() <= k) frob_lead.push_back(frobenius(frob_lead.back(), q));
    const F c = rem.leading() / frob_lead[k];
    quo[k] = c;
    auto term = OrePoly<F>::tau(w.context(), q, k).scale_left(c) * d;
    const int before = rem.degree();
    rem = rem - term;
    if (!rem.is_zero() && rem.degree() >= before) throw ConsistencyError("right division failed to reduce degree");
  }
  return {OrePoly<F>(w.context(), q, std::move(quo)), rem};
}

/// Left-to-right product (c_1 tau + d_1)(c_2 tau + d_2)...; each c_i nonzero.
template <Field F>
OrePoly<F> ore_product_of_linears(const std::vector<std::pair<F, F>>& factors, std::uint64_t q) {
  if (factors.empty()) throw PreconditionError("empty product of linear factors");
  for (const auto& [c, d] : factors) {
    (void)d;
    if (c.is_zero()) throw PreconditionError("linear factor with zero tau-coefficient");
  }
  OrePoly<F> acc = OrePoly<F>::linear(factors.front().first, factors.front().second, q);
  for (std::size_t i = 1; i < factors.size(); ++i) acc = acc * OrePoly<F>::linear(factors[i].first, factors[i].second, q);
  return acc;
}

/// sum c_i X^(q^i): the map x -> sum c_i x^(q^i), F_q-linear.
template <Field F>
class AdditivePoly {
public:
  using Context = typename F::Context;

  AdditivePoly(Context ctx, std::uint64_t q, std::vector<F> coeffs) : ctx_(std::move(ctx)), q_(q), c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  const std::vector<F>& coeffs() const noexcept { return c_; }
  std::uint64_t twist() const noexcept { return q_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Coefficient of X^(q^i).
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F::zero(ctx_); }

  /// Evaluation at a point of any field E the coefficients lift into.
  template <class E, class Lift>
  E eval_in(const E& x, Lift&& lift) const {
    E acc = E::zero(x.context());
    E xp = x;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i > 0) xp = frobenius(xp, q_);
      acc = acc + lift(c_[i]) * xp;
    }
    return acc;
  }

  F eval(const F& x) const {
    return eval_in(x, [](const F& c) { return c; });
  }

  /// Ordinary polynomial in X of degree q^n.
  Poly<F> to_poly() const {
    if (c_.empty()) return Poly<F>(ctx_);
    std::uint64_t top = 1;
    for (std::size_t i = 1; i < c_.size(); ++i) top *= q_;
    std::vector<F> v(top + 1, F::zero(ctx_));
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      v[e] = c_[i];
      e *= q_;
    }
    return Poly<F>(ctx_, std::move(v));
  }

  bool operator==(const AdditivePoly& o) const { return q_ == o.q_ && c_ == o.c_; }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < c_.size(); ++i, e *= q_) {
      if (c_[i].is_zero()) continue;
      std::string cs = c_[i].to_string();
      std::string mono = e == 1 ? "X" : "X^" + std::to_string(e);
      if (!out.empty()) out += " + ";
      out += cs == "1" ? mono : "(" + cs + ")*" + mono;
    }
    return out;
  }

private:
  Context ctx_;
  std::uint64_t q_;
  std::vector<F> c_;
};

/// tau^i acts as X^(q^i).
template <Field F>
AdditivePoly<F> to_additive(const OrePoly<F>& w) {
  return AdditivePoly<F>(w.context(), w.twist(), w.coeffs());
}

}  // namespace dforge

#endif
