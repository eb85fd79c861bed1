#ifndef DFORGE_ALGEBRA_CONCEPTS_HPP
#define DFORGE_ALGEBRA_CONCEPTS_HPP

#include <concepts>
#include <cstdint>
#include <string>

namespace dforge {

// Every arithmetic type carries a cheap copyable Context so that zero and one
// can be produced without an existing nonzero element (an empty polynomial
// still knows its coefficient field).
template <class R>
concept Ring = std::copyable<R> && requires(const R a, const R b, const typename R::Context c) {
  { a + b } -> std::same_as<R>;
  { a - b } -> std::same_as<R>;
  { a * b } -> std::same_as<R>;
  { -a } -> std::same_as<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.context() } -> std::convertible_to<typename R::Context>;
  { R::zero(c) } -> std::same_as<R>;
  { R::one(c) } -> std::same_as<R>;
  { R::from_int(c, 1) } -> std::same_as<R>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <class F>
concept Field = Ring<F> && requires(const F a, const F b) {
  { a / b } -> std::same_as<F>;
  { a.inverse() } -> std::same_as<F>;
};

template <Ring R>
R power(R base, std::uint64_t e) {
  R result = R::one(base.context());
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

template <Ring R>
R power_signed(const R& base, std::int64_t e)
  requires Field<R>
{
  if (e >= 0) return power(base, static_cast<std::uint64_t>(e));
  return power(base.inverse(), static_cast<std::uint64_t>(-e));
}

/// x -> x^q. Types with a cheaper route (substitution for rational
/// functions, conjugation for quadratic extensions) overload this.
template <Ring R>
R frobenius(const R& x, std::uint64_t q) {
  return power(x, q);
}

}  // namespace dforge

#endif
