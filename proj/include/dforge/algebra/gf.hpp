#ifndef DFORGE_ALGEBRA_GF_HPP
#define DFORGE_ALGEBRA_GF_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dforge/algebra/concepts.hpp"
#include "dforge/error.hpp"

namespace dforge {

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

// Dense polynomials over F_p used only while bootstrapping an extension
// field (irreducibility of the modulus, table construction).
using Zp = std::vector<std::uint32_t>;

inline void zp_trim(Zp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Zp zp_mulmod(const Zp& a, const Zp& b, const Zp& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  const std::size_t m = f.size() - 1;  // f monic
  for (std::size_t k = r.size(); k-- > m;) {
    const std::uint64_t c = r[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) r[k - m + i] = (r[k - m + i] + (p - c) * f[i]) % p;
  }
  Zp out(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(std::min(r.size(), m)));
  zp_trim(out);
  return out;
}

inline Zp zp_powmod(Zp base, std::uint64_t e, const Zp& f, std::uint32_t p) {
  Zp r{1};
  while (e) {
    if (e & 1U) r = zp_mulmod(r, base, f, p);
    base = zp_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return r;
}

inline Zp zp_sub(Zp a, const Zp& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  zp_trim(a);
  return a;
}

inline Zp zp_mod(Zp a, const Zp& f, std::uint32_t p) {
  zp_trim(a);
  const std::size_t m = f.size() - 1;
  const std::uint64_t lc_inv = powmod(f.back(), p - 2, p);
  while (a.size() > m) {
    const std::uint64_t c = mulmod(a.back(), lc_inv, p);
    const std::size_t shift = a.size() - 1 - m;
    for (std::size_t i = 0; i <= m; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i] % p) % p);
    zp_trim(a);
  }
  return a;
}

inline Zp zp_gcd(Zp a, Zp b, std::uint32_t p) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    Zp r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test over F_p.
inline bool zp_irreducible(const Zp& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  const Zp x{0, 1};
  auto x_pow_p_k = [&](std::size_t k) {
    Zp r = x;
    for (std::size_t i = 0; i < k; ++i) r = zp_powmod(r, p, f, p);
    return r;
  };
  if (zp_sub(x_pow_p_k(m), x, p) != Zp{}) return false;
  for (std::uint64_t l : prime_divisors(m)) {
    Zp g = zp_gcd(f, zp_sub(x_pow_p_k(m / l), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// The finite field F_{p^m} = F_p[a]/(modulus). Elements are encoded as
/// integers whose base-p digits are the coefficients of 1, a, a^2, ...
/// Instances are interned: get() returns a reference that stays valid for
/// the life of the process, so elements can hold a plain pointer.
class GaloisField {
public:
  using Code = std::uint32_t;

  static constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 21;

  static const GaloisField& get(std::uint32_t p, unsigned m = 1) {
    require(detail::is_prime_u64(p), "field characteristic must be prime");
    require(m >= 1, "extension degree must be >= 1");
    if (m == 1) return get(p, std::vector<std::uint32_t>{0, 1});
    return get(p, default_modulus(p, m));
  }

  static const GaloisField& get(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<GaloisField>> registry;
    std::lock_guard lock(mu);
    auto key = std::make_pair(p, modulus);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    auto field = std::unique_ptr<GaloisField>(new GaloisField(p, std::move(modulus)));
    const GaloisField& ref = *field;
    registry.emplace(std::move(key), std::move(field));
    return ref;
  }

  /// Smallest monic irreducible of degree m, lower coefficients read as a
  /// base-p number.
  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned m) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> f(m + 1, 0);
      std::uint64_t t = c;
      for (unsigned i = 0; i < m; ++i) {
        f[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      f[m] = 1;
      if (detail::zp_irreducible(f, p)) return f;
    }
    throw ConsistencyError("no irreducible polynomial found");
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Code add(Code a, Code b) const noexcept {
    if (m_ == 1) {
      const std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<Code>(s >= p_ ? s - p_ : s);
    }
    Code r = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i) {
      Code da = a % p_, db = b % p_;
      a /= p_;
      b /= p_;
      Code d = da + db;
      if (d >= p_) d -= p_;
      r += d * place;
      place *= p_;
    }
    return r;
  }

  Code neg(Code a) const noexcept {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    Code r = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i) {
      Code d = a % p_;
      a /= p_;
      r += (d == 0 ? 0 : p_ - d) * place;
      place *= p_;
    }
    return r;
  }

  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

  Code mul(Code a, Code b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<Code>(detail::mulmod(a, b, p_));
    std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }

  Code inv(Code a) const {
    if (a == 0) throw PreconditionError("inverse of zero in finite field");
    if (m_ == 1) return static_cast<Code>(detail::powmod(a, p_ - 2, p_));
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Code pow(Code a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (m_ == 1) return static_cast<Code>(detail::powmod(a, e, p_));
    return exp_[detail::mulmod(log_[a], e % (q_ - 1), q_ - 1)];
  }

  Code from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Code>(r);
  }

  std::vector<std::uint32_t> digits(Code a) const {
    std::vector<std::uint32_t> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  Code from_digits(std::span<const std::uint32_t> d) const {
    require(d.size() <= m_, "too many coefficients for field element");
    Code r = 0, place = 1;
    for (std::uint32_t c : d) {
      require(c < p_, "coefficient out of range");
      r += c * place;
      place *= p_;
    }
    return r;
  }

  /// A generator of the multiplicative group.
  Code primitive() const noexcept { return primitive_; }

  bool is_square(Code a) const noexcept {
    if (a == 0) return true;
    if (p_ == 2) return true;
    return pow(a, (q_ - 1) / 2) == 1;
  }

private:
  GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    require(detail::is_prime_u64(p), "field characteristic must be prime");
    require(modulus_.size() >= 2 && modulus_.back() == 1, "modulus must be monic of degree >= 1");
    for (auto c : modulus_) require(c < p, "modulus coefficient out of range");
    m_ = static_cast<unsigned>(modulus_.size() - 1);
    q_ = 1;
    for (unsigned i = 0; i < m_; ++i) {
      q_ *= p;
      require(q_ <= (m_ == 1 ? (std::uint64_t{1} << 31) : kMaxTableOrder), "field too large");
    }
    require(detail::zp_irreducible(modulus_, p), "modulus is not irreducible");
    if (m_ == 1) {
      primitive_ = find_primitive_prime();
      return;
    }
    build_tables();
  }

  Code find_primitive_prime() const {
    if (p_ == 2) return 1;
    const auto primes = detail::prime_divisors(p_ - 1);
    for (Code g = 2; g < p_; ++g) {
      bool ok = true;
      for (auto l : primes)
        if (detail::powmod(g, (p_ - 1) / l, p_) == 1) ok = false;
      if (ok) return g;
    }
    return 1;  // p == 3 handled above (g = 2)
  }

  detail::Zp code_to_zp(Code a) const {
    detail::Zp z(m_);
    for (unsigned i = 0; i < m_; ++i) {
      z[i] = a % p_;
      a /= p_;
    }
    detail::zp_trim(z);
    return z;
  }

  Code zp_to_code(const detail::Zp& z) const {
    Code r = 0, place = 1;
    for (std::size_t i = 0; i < z.size(); ++i) {
      r += z[i] * place;
      place *= p_;
    }
    return r;
  }

  void build_tables() {
    const auto primes = detail::prime_divisors(q_ - 1);
    for (Code g = 1; g < q_; ++g) {
      const auto gz = code_to_zp(g);
      bool ok = true;
      for (auto l : primes) {
        if (detail::zp_powmod(gz, (q_ - 1) / l, modulus_, p_) == detail::Zp{1}) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = g;
        break;
      }
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    detail::Zp cur{1};
    const auto gz = code_to_zp(primitive_);
    for (std::uint64_t e = 0; e + 1 < q_; ++e) {
      const Code c = zp_to_code(cur);
      exp_[e] = c;
      log_[c] = static_cast<Code>(e);
      cur = detail::zp_mulmod(cur, gz, modulus_, p_);
    }
  }

  std::uint32_t p_;
  std::vector<std::uint32_t> modulus_;
  unsigned m_ = 1;
  std::uint64_t q_ = 0;
  Code primitive_ = 1;
  std::vector<Code> exp_;
  std::vector<Code> log_;
};

/// Element of a GaloisField.
class Gf {
public:
  using Context = const GaloisField*;
  using Code = GaloisField::Code;

  Gf() = default;
  Gf(Context f, Code v) : f_(f), v_(v) {}

  static Gf zero(Context f) { return {f, 0}; }
  static Gf one(Context f) { return {f, 1}; }
  static Gf from_int(Context f, long long v) { return {f, f->from_int(v)}; }
  static Gf from_digits(Context f, std::span<const std::uint32_t> d) { return {f, f->from_digits(d)}; }

  Context context() const noexcept { return f_; }
  const GaloisField& field() const noexcept { return *f_; }
  Code code() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  Gf operator+(const Gf& o) const { return {same(o), f_->add(v_, o.v_)}; }
  Gf operator-(const Gf& o) const { return {same(o), f_->sub(v_, o.v_)}; }
  Gf operator*(const Gf& o) const { return {same(o), f_->mul(v_, o.v_)}; }
  Gf operator/(const Gf& o) const { return {same(o), f_->mul(v_, f_->inv(o.v_))}; }
  Gf operator-() const { return {f_, f_->neg(v_)}; }
  Gf& operator+=(const Gf& o) { return *this = *this + o; }
  Gf& operator-=(const Gf& o) { return *this = *this - o; }
  Gf& operator*=(const Gf& o) { return *this = *this * o; }
  Gf inverse() const { return {f_, f_->inv(v_)}; }
  Gf pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }

  bool operator==(const Gf& o) const noexcept { return v_ == o.v_ && f_ == o.f_; }
  std::strong_ordering operator<=>(const Gf& o) const noexcept { return v_ <=> o.v_; }

  bool is_square() const { return f_->is_square(v_); }

  std::string to_string() const {
    if (f_->degree() == 1) return std::to_string(v_);
    auto d = f_->digits(v_);
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ']';
    return os.str();
  }

private:
  Context same(const Gf& o) const {
    if (f_ != o.f_) throw PreconditionError("mixed finite fields in arithmetic");
    return f_;
  }

  Context f_ = nullptr;
  Code v_ = 0;
};

inline Gf power(const Gf& x, std::uint64_t e) { return x.pow(e); }
inline Gf frobenius(const Gf& x, std::uint64_t q) { return x.pow(q); }

/// All elements of the field in code order.
inline std::vector<Gf> elements(const GaloisField& f) {
  std::vector<Gf> out;
  out.reserve(f.order());
  for (std::uint64_t c = 0; c < f.order(); ++c) out.emplace_back(&f, static_cast<Gf::Code>(c));
  return out;
}

/// Field embedding small -> big, sending the generator of `small` to the
/// first root (in code order) of its modulus inside `big`.
class Embedding {
public:
  Embedding(const GaloisField& small, const GaloisField& big) : small_(&small), big_(&big) {
    require(small.characteristic() == big.characteristic(), "embedding between different characteristics");
    require(big.degree() % small.degree() == 0, "no embedding: degree does not divide");
    if (small.degree() == 1) {
      image_of_generator_ = Gf::zero(big_);
      return;
    }
    const auto& f = small.modulus();
    for (std::uint64_t c = 0; c < big.order(); ++c) {
      Gf x(big_, static_cast<Gf::Code>(c));
      Gf acc = Gf::zero(big_);
      for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + Gf::from_int(big_, f[i]);
      if (acc.is_zero()) {
        image_of_generator_ = x;
        return;
      }
    }
    throw ConsistencyError("modulus has no root in the larger field");
  }

  Gf operator()(const Gf& a) const {
    if (a.context() != small_) throw PreconditionError("embedding applied to element of another field");
    if (small_->degree() == 1) return {big_, a.code()};
    auto d = small_->digits(a.code());
    Gf acc = Gf::zero(big_);
    for (std::size_t i = d.size(); i-- > 0;) acc = acc * image_of_generator_ + Gf::from_int(big_, d[i]);
    return acc;
  }

  const GaloisField& target() const noexcept { return *big_; }

private:
  const GaloisField* small_;
  const GaloisField* big_;
  Gf image_of_generator_;
};

}  // namespace dforge

#endif
