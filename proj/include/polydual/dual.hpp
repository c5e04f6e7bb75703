#pragma once

#include "polydual/bigint.hpp"
#include "polydual/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polydual {

/// a0 + a1*alpha_1 + ... + ak*alpha_k, stored flat as (a0, a1, ..., ak).
struct DualElement {
  std::vector<Elem> coords;

  Elem constant() const { return coords.front(); }
  Elem part(std::size_t i) const { return coords[i]; }  // i in 1..k
  bool operator==(const DualElement&) const = default;
};

/// Enumerative operations are limited to k in 1..kMaxEnumerableK.
inline constexpr std::size_t kMaxEnumerableK = 4;
inline constexpr std::uint64_t kMaxEnumerableDualOrder = std::uint64_t{1} << 24;

/// R[alpha_1..alpha_k] with alpha_i * alpha_j = 0.
class DualRing {
 public:
  DualRing(RingPtr base, std::size_t k);

  const RingPtr& base_ptr() const noexcept { return base_; }
  const FiniteRing& base() const noexcept { return *base_; }
  std::size_t k() const noexcept { return k_; }
  Count order() const;

  DualElement zero() const { return DualElement{std::vector<Elem>(k_ + 1, 0)}; }
  DualElement one() const { return embed(base_->one()); }
  DualElement embed(Elem a) const;
  DualElement alpha(std::size_t i) const;

  DualElement add(const DualElement& x, const DualElement& y) const;
  DualElement sub(const DualElement& x, const DualElement& y) const;
  DualElement neg(const DualElement& x) const;
  DualElement mul(const DualElement& x, const DualElement& y) const;

  bool is_unit(const DualElement& x) const;
  /// a0^-1 - sum a0^-2 a_i alpha_i. Throws Error(not_a_unit).
  DualElement inverse(const DualElement& x) const;

  /// Local iff the base is; the maximal ideal is {x : x.constant() in M} and
  /// the nilpotency is one more than the base's. Requires an enumerable ring.
  std::optional<LocalStructure> local_structure() const;

  /// Mixed radix with the constant coordinate least significant.
  std::uint64_t index(const DualElement& x) const;
  DualElement element(std::uint64_t index) const;

  /// All elements in index order. Throws Error(precondition) when k or the
  /// order is outside the enumerable range.
  std::vector<DualElement> enumerate() const;
  std::uint64_t enumerable_order() const;

  /// `1+2*a1+3*a2`.
  std::string format(const DualElement& x) const;
  /// `Z/4[2]`.
  std::string spec_string() const;

  bool same_as(const DualRing& o) const { return k_ == o.k_ && base_->same_as(*o.base_); }
  void check(const DualElement& x) const;

 private:
  RingPtr base_;
  std::size_t k_;
};

}  // namespace polydual
