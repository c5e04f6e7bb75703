#include "polydual/spaces.hpp"

namespace polydual {

namespace {

DualElement dual_pow(const DualRing& ring, const DualElement& x, std::size_t e) {
  DualElement r = ring.one();
  for (std::size_t i = 0; i < e; ++i) r = ring.mul(r, x);
  return r;
}

}  // namespace

TableSpace function_space(const RingPtr& ring, std::size_t n) {
  const std::size_t q = ring->order();
  TableSpace space = TableSpace::for_ring(*ring, q);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Cell> tables(q * q);
    for (Elem c = 0; c < q; ++c) {
      for (Elem a = 0; a < q; ++a) tables[c * q + a] = static_cast<Cell>(ring->mul(c, ring->pow(a, j)));
    }
    space.add_position(std::move(tables));
  }
  return space;
}

TableSpace pair_space(const RingPtr& ring, std::size_t n) {
  const std::size_t q = ring->order();
  TableSpace space = TableSpace::for_ring(*ring, 2 * q);
  for (std::size_t j = 0; j < n; ++j) {
    const Elem jj = ring->from_integer(static_cast<std::int64_t>(j));
    std::vector<Cell> tables(q * 2 * q);
    for (Elem c = 0; c < q; ++c) {
      Cell* t = tables.data() + c * 2 * q;
      for (Elem a = 0; a < q; ++a) {
        t[a] = static_cast<Cell>(ring->mul(c, ring->pow(a, j)));
        t[q + a] = j == 0 ? 0 : static_cast<Cell>(ring->mul(ring->mul(c, jj), ring->pow(a, j - 1)));
      }
    }
    space.add_position(std::move(tables));
  }
  return space;
}

TableSpace dual_space(const DualRing& ring, std::size_t n0, std::size_t n1) {
  const std::size_t q = ring.base().order();
  const std::size_t k = ring.k();
  const auto points = ring.enumerate();
  const std::size_t width = points.size() * (k + 1);
  TableSpace space = TableSpace::for_ring(ring.base(), width);

  auto add_monomials = [&](const DualElement& unit, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) {
      std::vector<Cell> tables(q * width);
      for (Elem c = 0; c < q; ++c) {
        const DualElement coeff = ring.mul(ring.embed(c), unit);
        Cell* t = tables.data() + c * width;
        for (std::size_t p = 0; p < points.size(); ++p) {
          const DualElement v = ring.mul(coeff, dual_pow(ring, points[p], j));
          for (std::size_t i = 0; i <= k; ++i) t[p * (k + 1) + i] = static_cast<Cell>(v.coords[i]);
        }
      }
      space.add_position(std::move(tables));
    }
  };
  add_monomials(ring.one(), n0);
  for (std::size_t i = 1; i <= k; ++i) add_monomials(ring.alpha(i), n1);
  return space;
}

Poly poly_from_digits(const RingPtr& ring, std::span<const Cell> digits) {
  return Poly(ring, std::vector<Elem>(digits.begin(), digits.end()));
}

DualPoly dual_poly_from_digits(const DualRing& ring, std::size_t n0, std::size_t n1,
                               std::span<const Cell> digits) {
  Poly f0 = poly_from_digits(ring.base_ptr(), digits.first(n0));
  std::vector<Poly> parts;
  for (std::size_t i = 0; i < ring.k(); ++i) {
    parts.push_back(poly_from_digits(ring.base_ptr(), digits.subspan(n0 + i * n1, n1)));
  }
  return DualPoly(std::move(f0), std::move(parts));
}

std::uint64_t dual_cell_index(const DualRing& ring, std::span<const Cell> cells) {
  const std::uint64_t q = ring.base().order();
  std::uint64_t idx = 0;
  for (std::size_t i = cells.size(); i-- > 0;) idx = idx * q + cells[i];
  return idx;
}

}  // namespace polydual
