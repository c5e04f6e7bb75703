#pragma once

#include "polydual/bigint.hpp"
#include "polydual/ring.hpp"

#include <vector>

namespace polydual {

/// Rows generating a submodule of R^columns. The coefficient-to-table maps
/// f -> [f] and f -> ([f], [f']) are linear, so their images are row spans
/// of the monomial tables.
struct LinearSystem {
  RingPtr ring;
  std::size_t columns = 0;
  std::vector<std::vector<Elem>> rows;
};

/// Rows [x^j] for j < n.
LinearSystem function_system(const RingPtr& ring, std::size_t n);
/// Rows ([x^j], [j x^{j-1}]) for j < n.
LinearSystem pair_system(const RingPtr& ring, std::size_t n);

/// Order of the additive group spanned by the rows. Z/p^n uses elimination
/// with pivots of least p-adic valuation (a pivot p^v contributes p^(n-v));
/// GF(p^e) uses Gaussian elimination (q^rank). Throws Error(precondition) for
/// direct sums.
Count span_order(const LinearSystem& system);

/// [R[x]:N] (primed = false) or [R[x]:N'] (primed = true) as span orders of
/// the systems with n = |R| resp. 2|R|; direct sums multiply their summands.
Count index_via_linear(const RingPtr& ring, bool primed);

/// |N_n| or |N'_n| as |R|^n divided by the span order.
Count null_set_size_via_linear(const RingPtr& ring, std::size_t n, bool primed);

}  // namespace polydual
