#pragma once

#include "polydual/enumerate.hpp"
#include "polydual/poly.hpp"

#include <vector>

namespace polydual {

/// [f] is the zero function on R.
bool in_N(const Poly& f);
/// [f] and [f'] both vanish on R.
bool in_Nprime(const Poly& f);

/// f = f0 + sum f_i alpha_i vanishes on R[alpha_1..alpha_k] iff f0 is in N'
/// and every f_i is in N.
bool is_null_on_dual(const DualPoly& f);

/// Throws Error(ring_mismatch) unless both share base ring and k.
bool same_function(const DualPoly& f, const DualPoly& g);

/// prod_{r in R} (x - r): monic of degree |R|, null on R.
Poly canonical_monic_null_base(const RingPtr& ring);
/// prod_{r in R} (x - r)^2: monic of degree 2|R|, in N'.
Poly canonical_monic_null_dual(const RingPtr& ring);

/// Remainders of f0 by the dual canonical polynomial and of each f_i by the
/// base one, so deg g0 < 2|R| and deg g_i < |R|.
DualPoly reduce_representative(const DualPoly& f);

/// N_n(R) and N'_n(R): null polynomials of degree < n, in coefficient
/// lexicographic order (constant coefficient most significant).
struct BoundedNullSets {
  std::size_t n = 0;
  std::vector<Poly> null;
  std::vector<Poly> null_primed;
};

/// Exhaustive filter of all |R|^n polynomials; throws Error(budget_exceeded)
/// past opt.budget.
BoundedNullSets enumerate_bounded_null(const RingPtr& ring, std::size_t n,
                                       const EnumOptions& opt = {});

}  // namespace polydual
