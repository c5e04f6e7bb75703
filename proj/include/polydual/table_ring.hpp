#pragma once

#include "polydual/dual.hpp"
#include "polydual/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace polydual {

/// Materialized add/mul tables of an arbitrary small ring. Used for the
/// definition-level checks (locality, ideal powers, suitability) that must not
/// rely on the structured formulas of FiniteRing or DualRing.
struct TableRing {
  std::size_t order = 0;
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> mul;
  std::size_t zero = 0;
  std::size_t one = 0;

  std::uint32_t sum(std::size_t a, std::size_t b) const { return add[a * order + b]; }
  std::uint32_t prod(std::size_t a, std::size_t b) const { return mul[a * order + b]; }
};

inline constexpr std::size_t kMaxTableRingOrder = 4096;

TableRing tabulate(const FiniteRing& ring);
TableRing tabulate(const DualRing& ring);

/// Ideal as a membership mask.
using IdealMask = std::vector<bool>;

/// Additive closure of {x*y : x in a, y in b}.
IdealMask ideal_product(const TableRing& ring, const IdealMask& a, const IdealMask& b);

struct BruteLocalStructure {
  IdealMask maximal_ideal;
  unsigned nilpotency = 1;
  /// powers[l] = M^l for l = 0..nilpotency (powers[0] is the whole ring).
  std::vector<IdealMask> powers;
};

/// Local iff the non-units are closed under addition; nullopt otherwise.
std::optional<BruteLocalStructure> brute_local_structure(const TableRing& ring);

/// Checks the suitability definition literally: for all a, b and every l,
/// ab in M^l implies a in M^i, b in M^j with i + j >= min(L, l).
/// Throws Error(precondition) for non-local rings.
bool is_suitable(const TableRing& ring);
bool is_suitable(const FiniteRing& ring);
bool is_suitable(const DualRing& ring);

}  // namespace polydual
