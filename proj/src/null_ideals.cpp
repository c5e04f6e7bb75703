#include "polydual/null_ideals.hpp"

#include "polydual/spaces.hpp"

#include <algorithm>

namespace polydual {

bool in_N(const Poly& f) {
  const FiniteRing& r = f.ring();
  for (Elem a = 0; a < r.order(); ++a) {
    if (eval(f, a) != 0) return false;
  }
  return true;
}

bool in_Nprime(const Poly& f) { return in_N(f) && in_N(derivative(f)); }

bool is_null_on_dual(const DualPoly& f) {
  if (!in_Nprime(f.f0)) return false;
  return std::all_of(f.parts.begin(), f.parts.end(), [](const Poly& p) { return in_N(p); });
}

bool same_function(const DualPoly& f, const DualPoly& g) {
  if (f.k() != g.k() || !f.ring().same_as(g.ring())) {
    throw Error(ErrorCode::ring_mismatch, "same_function: operands over different rings");
  }
  return is_null_on_dual(f - g);
}

Poly canonical_monic_null_base(const RingPtr& ring) {
  Poly h = Poly::constant(ring, ring->one());
  for (Elem r = 0; r < ring->order(); ++r) {
    h = h * Poly(ring, {ring->neg(r), ring->one()});
  }
  return h;
}

Poly canonical_monic_null_dual(const RingPtr& ring) {
  const Poly h = canonical_monic_null_base(ring);
  return h * h;
}

DualPoly reduce_representative(const DualPoly& f) {
  const RingPtr& ring = f.ring_ptr();
  const Poly base = canonical_monic_null_base(ring);
  Poly g0 = divmod_monic(f.f0, canonical_monic_null_dual(ring)).remainder.trimmed();
  std::vector<Poly> parts;
  parts.reserve(f.k());
  for (const Poly& p : f.parts) parts.push_back(divmod_monic(p, base).remainder.trimmed());
  return DualPoly(std::move(g0), std::move(parts));
}

BoundedNullSets enumerate_bounded_null(const RingPtr& ring, std::size_t n, const EnumOptions& opt) {
  const TableSpace space = pair_space(ring, n);
  const std::size_t q = ring->order();
  struct Found {
    std::vector<std::vector<Cell>> null, primed;
  };
  auto states = sweep<Found>(
      space, opt, [] { return Found{}; },
      [q](Found& found, std::span<const Cell> digits, std::span<const Cell> table) {
        if (std::any_of(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(q),
                        [](Cell c) { return c != 0; })) {
          return;
        }
        found.null.emplace_back(digits.begin(), digits.end());
        if (std::all_of(table.begin() + static_cast<std::ptrdiff_t>(q), table.end(),
                        [](Cell c) { return c == 0; })) {
          found.primed.emplace_back(digits.begin(), digits.end());
        }
      });
  BoundedNullSets sets;
  sets.n = n;
  for (const Found& f : states) {
    for (const auto& d : f.null) sets.null.push_back(poly_from_digits(ring, d));
    for (const auto& d : f.primed) sets.null_primed.push_back(poly_from_digits(ring, d));
  }
  return sets;
}

}  // namespace polydual
