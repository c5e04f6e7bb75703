#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polydual {

/// Canonical dense index of a ring element.
using Elem = std::uint32_t;

/// Rings are fully tabulated, so their order is capped.
inline constexpr std::size_t kMaxRingOrder = 1024;

struct ZModPrimePower {
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  bool operator==(const ZModPrimePower&) const = default;
};

/// GF(p^e) presented as Z_p[t]/(modulus). `modulus` holds coefficients from
/// t^0 up to t^e and must be monic and irreducible.
struct GaloisField {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> modulus;
  bool operator==(const GaloisField&) const = default;
};

using LocalRingSpec = std::variant<ZModPrimePower, GaloisField>;

struct DirectSum {
  std::vector<LocalRingSpec> summands;
  bool operator==(const DirectSum&) const = default;
};

using RingSpec = std::variant<ZModPrimePower, GaloisField, DirectSum>;

/// Throws Error(invalid_ring_spec) when a spec invariant fails: p not prime,
/// n or e zero, modulus not monic of degree e or reducible, fewer than two
/// summands, or order above kMaxRingOrder.
void validate(const RingSpec& spec);

/// Normalized textual form, e.g. `Z/4`, `F_9:x^2+1`, `Z/4 (+) Z/9`.
std::string to_string(const RingSpec& spec);

bool is_prime(std::uint64_t n) noexcept;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Maximal ideal, nilpotency and residue map of a finite local ring. Element
/// indices are the owning ring's canonical indices (base or dual).
struct LocalStructure {
  std::vector<std::size_t> maximal_ideal;
  unsigned nilpotency = 1;
  RingPtr residue_field;
  std::vector<Elem> residue_map;
};

/// A finite commutative ring with identity: Z_{p^n}, GF(p^e), or a direct sum
/// of those. Immutable after construction.
///
/// Indexing: Z_{p^n} uses residues 0..p^n-1; GF(p^e) uses the base-p digits
/// of the representative polynomial (digit i is the t^i coefficient);
/// direct sums use a mixed radix with the first summand least significant.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
 public:
  static RingPtr build(const RingSpec& spec);

  const RingSpec& spec() const noexcept { return spec_; }
  std::size_t order() const noexcept { return order_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of the integer n under Z -> R.
  Elem from_integer(std::int64_t n) const;
  std::uint64_t characteristic() const noexcept { return multiples_of_one_.size(); }

  bool is_unit(Elem a) const { return inv_[a] != kNoInverse; }
  /// Throws Error(not_a_unit).
  Elem inverse(Elem a) const;
  std::size_t unit_count() const noexcept { return unit_count_; }

  bool is_field() const noexcept { return unit_count_ + 1 == order_; }
  bool is_local() const noexcept { return !std::holds_alternative<DirectSum>(spec_); }
  bool is_direct_sum() const noexcept { return std::holds_alternative<DirectSum>(spec_); }

  /// nullopt for direct sums ("not local").
  std::optional<LocalStructure> local_structure() const;

  /// Local summands; a local ring is its own single summand.
  std::vector<RingPtr> summands() const;
  Elem component(Elem a, std::size_t i) const;
  Elem combine(std::span<const Elem> parts) const;

  /// Literal syntax: decimal index, or `(a,b,...)` for direct sums.
  std::string format(Elem a) const;
  /// Throws ParseError.
  Elem parse_literal(std::string_view text) const;

  /// Full tables (row-major, order x order). Exposed for enumeration kernels.
  std::span<const Elem> add_table() const noexcept { return add_; }
  std::span<const Elem> mul_table() const noexcept { return mul_; }

  bool same_as(const FiniteRing& other) const noexcept {
    return this == &other || spec_ == other.spec_;
  }

  explicit FiniteRing(RingSpec spec);

 private:
  static constexpr Elem kNoInverse = ~Elem{0};

  void tabulate_zmod(const ZModPrimePower& s);
  void tabulate_gf(const GaloisField& s);
  void tabulate_sum(const DirectSum& s);
  void finish();

  RingSpec spec_;
  std::size_t order_ = 0;
  Elem one_ = 0;
  std::vector<Elem> add_, mul_, neg_, inv_;
  std::vector<Elem> multiples_of_one_;
  std::size_t unit_count_ = 0;
  std::vector<RingPtr> parts_;
  std::vector<std::size_t> strides_;
};

/// Value type pairing an element with its ring.
struct RingElement {
  RingPtr ring;
  Elem index = 0;

  bool operator==(const RingElement& o) const {
    return ring->same_as(*o.ring) && index == o.index;
  }
};

bool is_unit(const RingElement& a);
/// Throws Error(not_a_unit).
RingElement inverse(const RingElement& a);

}  // namespace polydual
