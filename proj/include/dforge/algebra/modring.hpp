#ifndef DFORGE_ALGEBRA_MODRING_HPP
#define DFORGE_ALGEBRA_MODRING_HPP

#include <memory>
#include <string>

#include "dforge/algebra/ffpoly.hpp"
#include "dforge/algebra/ratfn.hpp"

namespace dforge {

struct ResidueField {
  UPoly modulus;
};

/// Element of A/p = F_q[T]/(p) for a monic irreducible p.
class Residue {
public:
  using Context = std::shared_ptr<const ResidueField>;

  static Context make_context(const UPoly& modulus) {
    require(!modulus.is_zero() && modulus.is_monic(), "residue modulus must be monic");
    require(is_irreducible(modulus), "residue modulus must be irreducible");
    return std::make_shared<const ResidueField>(ResidueField{modulus});
  }

  Residue(Context ctx, const UPoly& v) : ctx_(std::move(ctx)), v_(v % ctx_->modulus) {}

  static Residue zero(const Context& c) { return {c, UPoly(c->modulus.context())}; }
  static Residue one(const Context& c) { return {c, UPoly::one(c->modulus.context())}; }
  static Residue from_int(const Context& c, long long v) { return {c, UPoly::from_int(c->modulus.context(), v)}; }

  const Context& context() const noexcept { return ctx_; }
  const UPoly& value() const noexcept { return v_; }
  int degree_of_modulus() const { return ctx_->modulus.degree(); }
  bool is_zero() const { return v_.is_zero(); }

  Residue operator+(const Residue& o) const { return {ctx_, v_ + o.v_}; }
  Residue operator-(const Residue& o) const { return {ctx_, v_ - o.v_}; }
  Residue operator-() const { return {ctx_, -v_}; }
  Residue operator*(const Residue& o) const { return {ctx_, v_ * o.v_}; }
  Residue operator/(const Residue& o) const { return *this * o.inverse(); }
  bool operator==(const Residue& o) const { return v_ == o.v_; }

  Residue inverse() const {
    if (v_.is_zero()) throw PreconditionError("inverse of zero residue");
    auto [g, s, t] = xgcd(v_, ctx_->modulus);
    (void)t;
    return {ctx_, s};
  }

  std::string to_string() const { return v_.to_string("T"); }

private:
  Context ctx_;
  UPoly v_;
};

}  // namespace dforge

#endif
