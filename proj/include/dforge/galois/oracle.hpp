#ifndef DFORGE_GALOIS_ORACLE_HPP
#define DFORGE_GALOIS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dforge/algebra/gf.hpp"
#include "dforge/error.hpp"

namespace dforge {

/// Multiset of cycle lengths (or factor degrees), kept sorted ascending.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
      if (x <= 0) throw PreconditionError("cycle lengths must be positive");
    std::sort(parts_.begin(), parts_.end());
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int degree() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
  }
  bool is_identity() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x == 1; });
  }

  /// "1^2 2^4" style label.
  std::string label() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (!out.empty()) out += " ";
      out += std::to_string(parts_[i]);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

  auto operator<=>(const CycleType&) const = default;

private:
  std::vector<int> parts_;
};

struct GroupOracle {
  std::string label;
  int points;
  std::uint64_t order;
  std::map<CycleType, std::uint64_t> classes;
};

namespace detail {

inline const GaloisField& oracle_field(std::uint64_t Q) {
  if (Q > 25) throw PreconditionError("projective linear oracles limited to Q <= 25");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= Q; ++d)
    if (Q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) throw PreconditionError("Q must be a prime power");
  unsigned m = 0;
  std::uint64_t t = Q;
  while (t % p == 0) {
    t /= p;
    ++m;
  }
  if (t != 1) throw PreconditionError("Q must be a prime power");
  return GaloisField::get(p, m);
}

/// Cycle types of every matrix with det in the accepted set acting on P^1(F_Q).
template <class Accept>
std::map<CycleType, std::uint64_t> projective_action(const GaloisField& f, Accept accept) {
  const auto els = elements(f);
  const std::size_t Q = els.size();
  const std::size_t inf = Q;
  std::map<CycleType, std::uint64_t> counts;
  std::vector<std::size_t> image(Q + 1);
  std::vector<char> seen(Q + 1);
  for (const Gf& a : els)
    for (const Gf& b : els)
      for (const Gf& c : els)
        for (const Gf& d : els) {
          if (!accept(a * d - b * c)) continue;
          for (std::size_t i = 0; i < Q; ++i) {
            const Gf& x = els[i];
            const Gf den = c * x + d;
            image[i] = den.is_zero() ? inf : static_cast<std::size_t>(((a * x + b) / den).code());
          }
          image[inf] = c.is_zero() ? inf : static_cast<std::size_t>((a / c).code());
          std::fill(seen.begin(), seen.end(), 0);
          std::vector<int> cycles;
          for (std::size_t s = 0; s <= Q; ++s) {
            if (seen[s]) continue;
            int len = 0;
            for (std::size_t j = s; !seen[j]; j = image[j]) {
              seen[j] = 1;
              ++len;
            }
            cycles.push_back(len);
          }
          ++counts[CycleType(std::move(cycles))];
        }
  return counts;
}

inline GroupOracle quotient_oracle(std::string label, std::uint64_t Q, std::map<CycleType, std::uint64_t> counts,
                                   std::uint64_t lifts) {
  GroupOracle out{std::move(label), static_cast<int>(Q + 1), 0, {}};
  for (auto& [ct, n] : counts) {
    out.classes[ct] = n / lifts;
    out.order += n / lifts;
  }
  return out;
}

}  // namespace detail

/// PSL(2, Q) acting on the Q+1 points of P^1(F_Q), enumerated by brute force:
/// every matrix of SL(2, Q) is applied and each +-pair counted once.
inline GroupOracle psl_oracle(std::uint64_t Q) {
  const GaloisField& f = detail::oracle_field(Q);
  auto counts = detail::projective_action(f, [&](const Gf& det) { return det == Gf::one(&f); });
  // for odd Q every element of PSL lifts to exactly two matrices
  const std::uint64_t lifts = f.characteristic() == 2 ? 1 : 2;
  return detail::quotient_oracle("PSL(2," + std::to_string(Q) + ")", Q, std::move(counts), lifts);
}

/// PGL(2, Q) on P^1(F_Q); every element lifts to Q-1 scalar multiples in GL(2, Q).
inline GroupOracle pgl_oracle(std::uint64_t Q) {
  const GaloisField& f = detail::oracle_field(Q);
  auto counts = detail::projective_action(f, [](const Gf& det) { return !det.is_zero(); });
  return detail::quotient_oracle("PGL(2," + std::to_string(Q) + ")", Q, std::move(counts), Q - 1);
}

}  // namespace dforge

#endif
