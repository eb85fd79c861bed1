#ifndef DFORGE_ALGEBRA_LINALG_HPP
#define DFORGE_ALGEBRA_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "dforge/algebra/concepts.hpp"
#include "dforge/error.hpp"

namespace dforge {

/// Solves A x = b for a system with at least as many equations as unknowns.
/// Throws ConsistencyError if the rank is deficient or some equation is violated.
template <Field F>
std::vector<F> solve_overdetermined(std::vector<std::vector<F>> a, std::vector<F> b) {
  const std::size_t rows = a.size();
  if (rows == 0 || rows != b.size()) throw PreconditionError("malformed linear system");
  const std::size_t cols = a[0].size();
  if (rows < cols) throw PreconditionError("underdetermined linear system");
  const auto ctx = b[0].context();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) throw ConsistencyError("linear system is rank-deficient");
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const F inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] * inv;
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const F f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] = a[i][k] - f * a[r][k];
      b[i] = b[i] - f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) throw ConsistencyError("linear system is inconsistent");
  std::vector<F> x(cols, F::zero(ctx));
  for (std::size_t i = 0; i < cols; ++i) x[pivots[i]] = b[i];
  return x;
}

}  // namespace dforge

#endif
