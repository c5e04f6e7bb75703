#pragma once

#include "polydual/dual.hpp"
#include "polydual/enumerate.hpp"
#include "polydual/poly.hpp"

#include <span>

namespace polydual {

/// Coefficients c_0..c_{n-1} -> [sum c_j x^j] on R. Width |R|.
TableSpace function_space(const RingPtr& ring, std::size_t n);

/// Coefficients c_0..c_{n-1} -> ([f], [f']) on R. Width 2|R|, value table first.
TableSpace pair_space(const RingPtr& ring, std::size_t n);

/// Coefficients of f_0 (n0 of them) then of f_1..f_k (n1 each) -> the table
/// of f on R[alpha..], (k+1) cells per point. Tables are computed with dual
/// ring arithmetic directly.
TableSpace dual_space(const DualRing& ring, std::size_t n0, std::size_t n1);

/// Digits of `function_space` / `pair_space` as a polynomial.
Poly poly_from_digits(const RingPtr& ring, std::span<const Cell> digits);

/// Digits of `dual_space` as a dual polynomial.
DualPoly dual_poly_from_digits(const DualRing& ring, std::size_t n0, std::size_t n1,
                               std::span<const Cell> digits);

/// Cells of a dual table for one point, as a dual element index.
std::uint64_t dual_cell_index(const DualRing& ring, std::span<const Cell> cells);

}  // namespace polydual
