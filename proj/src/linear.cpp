#include "polydual/linear.hpp"

#include "polydual/error.hpp"

#include <variant>

namespace polydual {

LinearSystem function_system(const RingPtr& ring, std::size_t n) {
  const std::size_t q = ring->order();
  LinearSystem s{ring, q, {}};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Elem> row(q);
    for (Elem a = 0; a < q; ++a) row[a] = ring->pow(a, j);
    s.rows.push_back(std::move(row));
  }
  return s;
}

LinearSystem pair_system(const RingPtr& ring, std::size_t n) {
  const std::size_t q = ring->order();
  LinearSystem s{ring, 2 * q, {}};
  for (std::size_t j = 0; j < n; ++j) {
    const Elem jj = ring->from_integer(static_cast<std::int64_t>(j));
    std::vector<Elem> row(2 * q);
    for (Elem a = 0; a < q; ++a) {
      row[a] = ring->pow(a, j);
      row[q + a] = j == 0 ? 0 : ring->mul(jj, ring->pow(a, j - 1));
    }
    s.rows.push_back(std::move(row));
  }
  return s;
}

namespace {

unsigned valuation(std::uint64_t a, std::uint64_t p, unsigned n) {
  if (a == 0) return n;
  unsigned v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    const std::int64_t quo = r / nr;
    t -= quo * nt;
    std::swap(t, nt);
    r -= quo * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

Count span_order_zmod(std::vector<std::vector<Elem>> a, std::uint64_t p, unsigned n) {
  std::uint64_t m = 1;
  for (unsigned i = 0; i < n; ++i) m *= p;
  Count order = 1;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  std::vector<bool> row_done(a.size(), false), col_done(cols, false);
  while (true) {
    unsigned best = n;
    std::size_t pr = 0, pc = 0;
    for (std::size_t i = 0; i < a.size() && best > 0; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_done[j]) continue;
        const unsigned v = valuation(a[i][j], p, n);
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
          if (v == 0) break;
        }
      }
    }
    if (best == n) break;
    std::uint64_t pv = 1;
    for (unsigned i = 0; i < best; ++i) pv *= p;
    const std::uint64_t unit_inv = inverse_mod(a[pr][pc] / pv, m);
    for (auto& x : a[pr]) x = static_cast<Elem>(x * unit_inv % m);
    // Every remaining entry is divisible by p^best, so the pivot clears its
    // column; the pivot row then splits off as p^best e_pc.
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == pr || row_done[i] || a[i][pc] == 0) continue;
      const std::uint64_t factor = a[i][pc] / pv;
      for (std::size_t j = 0; j < cols; ++j) {
        a[i][j] = static_cast<Elem>((a[i][j] + m - factor * a[pr][j] % m) % m);
      }
    }
    row_done[pr] = true;
    col_done[pc] = true;
    for (unsigned i = best; i < n; ++i) order *= p;
  }
  return order;
}

Count span_order_field(const FiniteRing& f, std::vector<std::vector<Elem>> a) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const Elem inv = f.inverse(a[rank][c]);
    for (auto& x : a[rank]) x = f.mul(x, inv);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      const Elem factor = a[i][c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[rank][j]));
    }
    ++rank;
  }
  return ipow(Count(f.order()), rank);
}

}  // namespace

Count span_order(const LinearSystem& system) {
  const RingSpec& spec = system.ring->spec();
  if (const auto* z = std::get_if<ZModPrimePower>(&spec)) {
    return span_order_zmod(system.rows, z->p, z->n);
  }
  if (std::holds_alternative<GaloisField>(spec)) return span_order_field(*system.ring, system.rows);
  throw Error(ErrorCode::precondition, "span_order: direct sums are handled per summand");
}

Count index_via_linear(const RingPtr& ring, bool primed) {
  Count total = 1;
  for (const RingPtr& s : ring->summands()) {
    total *= primed ? span_order(pair_system(s, 2 * s->order()))
                    : span_order(function_system(s, s->order()));
  }
  return total;
}

Count null_set_size_via_linear(const RingPtr& ring, std::size_t n, bool primed) {
  Count image = 1;
  for (const RingPtr& s : ring->summands()) {
    image *= primed ? span_order(pair_system(s, n)) : span_order(function_system(s, n));
  }
  return ipow(Count(ring->order()), n) / image;
}

}  // namespace polydual
