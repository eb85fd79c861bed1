#ifndef DFORGE_MODFORMS_BIVAR_HPP
#define DFORGE_MODFORMS_BIVAR_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "dforge/algebra/concepts.hpp"
#include "dforge/error.hpp"

namespace dforge {

namespace detail {

template <class E>
E int_power(const E& x, std::uint64_t e) {
  if constexpr (requires { x.pow(e); }) return x.pow(e);
  else return power(x, e);
}

}  // namespace detail

/// Polynomial sum c_{ij} x^i y^j with finite support and no zero entries.
template <Ring R>
class BivarPoly {
public:
  using Context = typename R::Context;
  using Key = std::pair<int, int>;

  explicit BivarPoly(Context ctx) : ctx_(std::move(ctx)) {}

  static BivarPoly zero(Context ctx) { return BivarPoly(ctx); }
  static BivarPoly one(Context ctx) { return constant(R::one(ctx)); }
  static BivarPoly from_int(Context ctx, long long v) { return constant(R::from_int(ctx, v)); }
  static BivarPoly constant(const R& c) { return monomial(c, 0, 0); }
  static BivarPoly monomial(const R& c, int i, int j) {
    BivarPoly p(c.context());
    p.add_term(i, j, c);
    return p;
  }
  static BivarPoly x(Context ctx) { return monomial(R::one(ctx), 1, 0); }
  static BivarPoly y(Context ctx) { return monomial(R::one(ctx), 0, 1); }

  const Context& context() const noexcept { return ctx_; }
  const std::map<Key, R>& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }

  R coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? R::zero(ctx_) : it->second;
  }

  void add_term(int i, int j, const R& c) {
    if (i < 0 || j < 0) throw PreconditionError("negative exponent in a bivariate polynomial");
    auto [it, inserted] = t_.try_emplace({i, j}, c);
    if (!inserted) it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }

  int x_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
  }
  int y_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
  }

  BivarPoly operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
    return r;
  }
  BivarPoly operator-() const {
    BivarPoly r(ctx_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
  }
  BivarPoly operator-(const BivarPoly& o) const { return *this + (-o); }
  BivarPoly operator*(const BivarPoly& o) const {
    BivarPoly r(ctx_);
    for (const auto& [k1, c1] : t_)
      for (const auto& [k2, c2] : o.t_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
  }
  BivarPoly scale(const R& a) const {
    BivarPoly r(ctx_);
    for (const auto& [k, c] : t_) r.add_term(k.first, k.second, a * c);
    return r;
  }
  bool operator==(const BivarPoly& o) const { return t_ == o.t_; }

  template <class S, class Fn>
  BivarPoly<S> map_coeffs(typename S::Context ctx, Fn&& fn) const {
    BivarPoly<S> r(ctx);
    for (const auto& [k, c] : t_) r.add_term(k.first, k.second, fn(c));
    return r;
  }

  /// Evaluation at (x, y) in a ring E; scale(e, c) multiplies e by the coefficient c.
  template <class E, class Scale>
  E eval(const E& x, const E& y, Scale&& scale) const {
    std::map<int, E> xp, yp;
    auto xpow = [&](int i) -> const E& {
      auto it = xp.find(i);
      if (it == xp.end()) it = xp.emplace(i, detail::int_power(x, static_cast<std::uint64_t>(i))).first;
      return it->second;
    };
    auto ypow = [&](int j) -> const E& {
      auto it = yp.find(j);
      if (it == yp.end()) it = yp.emplace(j, detail::int_power(y, static_cast<std::uint64_t>(j))).first;
      return it->second;
    };
    bool first = true;
    E acc = x;
    for (const auto& [k, c] : t_) {
      E term = scale(xpow(k.first) * ypow(k.second), c);
      acc = first ? term : acc + term;
      first = false;
    }
    if (first) throw PreconditionError("evaluation of the zero polynomial");
    return acc;
  }

  /// Terms ordered by descending y-degree, then descending x-degree.
  std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Key, R>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      return a.first.second != b.first.second ? a.first.second > b.first.second : a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [k, c] : v) {
      std::string mono;
      auto add = [&](const std::string& var, int e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += e == 1 ? var : var + "^" + std::to_string(e);
      };
      add(xv, k.first);
      add(yv, k.second);
      const std::string cs = c.to_string();
      if (!out.empty()) out += " + ";
      if (mono.empty()) out += "(" + cs + ")";
      else if (cs == "1") out += mono;
      else out += "(" + cs + ")*" + mono;
    }
    return out;
  }

private:
  Context ctx_;
  std::map<Key, R> t_;
};

}  // namespace dforge

#endif
