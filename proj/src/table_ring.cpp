#include "polydual/table_ring.hpp"

#include "polydual/error.hpp"

#include <algorithm>

namespace polydual {

TableRing tabulate(const FiniteRing& ring) {
  TableRing t;
  t.order = ring.order();
  t.add.assign(ring.add_table().begin(), ring.add_table().end());
  t.mul.assign(ring.mul_table().begin(), ring.mul_table().end());
  t.zero = ring.zero();
  t.one = ring.one();
  return t;
}

TableRing tabulate(const DualRing& ring) {
  const std::uint64_t n = ring.enumerable_order();
  if (n > kMaxTableRingOrder) {
    throw Error(ErrorCode::precondition, ring.spec_string() + " is too large to tabulate");
  }
  const auto elems = ring.enumerate();
  TableRing t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<std::uint32_t>(ring.index(ring.add(elems[a], elems[b])));
      t.mul[a * n + b] = static_cast<std::uint32_t>(ring.index(ring.mul(elems[a], elems[b])));
    }
  }
  t.zero = ring.index(ring.zero());
  t.one = ring.index(ring.one());
  return t;
}

namespace {

IdealMask additive_closure(const TableRing& ring, IdealMask set) {
  std::vector<std::size_t> members;
  for (std::size_t a = 0; a < ring.order; ++a) {
    if (set[a]) members.push_back(a);
  }
  if (!set[ring.zero]) {
    set[ring.zero] = true;
    members.push_back(ring.zero);
  }
  // Each new element is summed with all current members until nothing changes.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::size_t x = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const std::size_t s = ring.sum(x, members[j]);
      if (!set[s]) {
        set[s] = true;
        members.push_back(s);
      }
    }
  }
  return set;
}

}  // namespace

IdealMask ideal_product(const TableRing& ring, const IdealMask& a, const IdealMask& b) {
  IdealMask prod(ring.order, false);
  for (std::size_t x = 0; x < ring.order; ++x) {
    if (!a[x]) continue;
    for (std::size_t y = 0; y < ring.order; ++y) {
      if (b[y]) prod[ring.prod(x, y)] = true;
    }
  }
  return additive_closure(ring, std::move(prod));
}

std::optional<BruteLocalStructure> brute_local_structure(const TableRing& ring) {
  IdealMask non_units(ring.order, true);
  for (std::size_t a = 0; a < ring.order; ++a) {
    for (std::size_t b = 0; b < ring.order; ++b) {
      if (ring.prod(a, b) == ring.one) {
        non_units[a] = false;
        break;
      }
    }
  }
  for (std::size_t a = 0; a < ring.order; ++a) {
    for (std::size_t b = 0; b < ring.order; ++b) {
      if (non_units[a] && non_units[b] && !non_units[ring.sum(a, b)]) return std::nullopt;
    }
  }
  BruteLocalStructure ls;
  ls.maximal_ideal = non_units;
  ls.powers.push_back(IdealMask(ring.order, true));
  ls.powers.push_back(non_units);
  auto is_zero_ideal = [&](const IdealMask& m) {
    for (std::size_t a = 0; a < ring.order; ++a) {
      if (m[a] && a != ring.zero) return false;
    }
    return true;
  };
  while (!is_zero_ideal(ls.powers.back())) {
    ls.powers.push_back(ideal_product(ring, ls.powers.back(), non_units));
  }
  ls.nilpotency = static_cast<unsigned>(ls.powers.size() - 1);
  return ls;
}

bool is_suitable(const TableRing& ring) {
  const auto ls = brute_local_structure(ring);
  if (!ls) throw Error(ErrorCode::precondition, "suitability is defined for local rings");
  const unsigned L = ls->nilpotency;
  // depth[a] = largest i <= L with a in M^i.
  std::vector<unsigned> depth(ring.order, 0);
  for (std::size_t a = 0; a < ring.order; ++a) {
    for (unsigned i = 0; i <= L; ++i) {
      if (ls->powers[i][a]) depth[a] = i;
    }
  }
  for (std::size_t a = 0; a < ring.order; ++a) {
    for (std::size_t b = 0; b < ring.order; ++b) {
      const std::size_t ab = ring.prod(a, b);
      for (unsigned l = 1; l <= L; ++l) {
        if (!ls->powers[l][ab]) break;
        if (depth[a] + depth[b] < std::min(L, l)) return false;
      }
    }
  }
  return true;
}

bool is_suitable(const FiniteRing& ring) { return is_suitable(tabulate(ring)); }

bool is_suitable(const DualRing& ring) { return is_suitable(tabulate(ring)); }

}  // namespace polydual
