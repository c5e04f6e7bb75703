// Brute-force reference computations for the tests. They use only ring
// arithmetic and plain containers, never the library's enumeration engine,
// criteria, or the first-order evaluation formula.
#pragma once

#include "polydual/dual.hpp"
#include "polydual/poly.hpp"
#include "polydual/ring.hpp"
#include "polydual/ring_spec.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using polydual::DualElement;
using polydual::DualPoly;
using polydual::DualRing;
using polydual::Elem;
using polydual::Poly;
using polydual::RingPtr;
using Table = std::vector<std::uint64_t>;

inline RingPtr ring(const std::string& spec) {
  return polydual::FiniteRing::build(polydual::parse_ring_spec(spec));
}

inline Elem eval(const Poly& f, Elem a) {
  const auto& r = f.ring();
  Elem acc = 0;
  Elem power = r.one();
  for (Elem c : f.coeffs()) {
    acc = r.add(acc, r.mul(c, power));
    power = r.mul(power, a);
  }
  return acc;
}

/// Horner in R[alpha..] with coefficient j = (f0_j, f1_j, ..., fk_j).
inline DualElement eval(const DualPoly& f, const DualRing& d, const DualElement& x) {
  std::size_t len = f.f0.size();
  for (const Poly& p : f.parts) len = std::max(len, p.size());
  DualElement acc = d.zero();
  for (std::size_t j = len; j-- > 0;) {
    DualElement c = d.zero();
    c.coords[0] = f.f0.coeff(j);
    for (std::size_t i = 0; i < f.k(); ++i) c.coords[i + 1] = f.parts[i].coeff(j);
    acc = d.add(d.mul(acc, x), c);
  }
  return acc;
}

inline Table table(const Poly& f) {
  Table t;
  for (Elem a = 0; a < f.ring().order(); ++a) t.push_back(oracle::eval(f, a));
  return t;
}

inline Table table(const DualPoly& f, const DualRing& d) {
  Table t;
  for (const DualElement& x : d.enumerate()) t.push_back(d.index(oracle::eval(f, d, x)));
  return t;
}

/// Formal derivative computed from scratch.
inline Poly derivative(const Poly& f) {
  const auto& r = f.ring();
  std::vector<Elem> c;
  for (std::size_t j = 1; j < f.size(); ++j) {
    Elem s = 0;
    for (std::size_t t = 0; t < j; ++t) s = r.add(s, f.coeff(j));
    c.push_back(s);
  }
  return Poly(f.ring_ptr(), c);
}

inline bool bijective(const Table& t) {
  std::set<std::uint64_t> s(t.begin(), t.end());
  return s.size() == t.size();
}

inline bool all_zero(const Table& t) {
  for (auto v : t) {
    if (v != 0) return false;
  }
  return true;
}

/// The polynomial whose coefficient digits (base |R|, least significant
/// first) spell `index`.
inline Poly poly_at(const RingPtr& r, std::uint64_t index, std::size_t n) {
  std::vector<Elem> c(n);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = static_cast<Elem>(index % r->order());
    index /= r->order();
  }
  return Poly(r, c);
}

inline std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Visits every polynomial of degree < n.
template <class F>
void for_each_poly(const RingPtr& r, std::size_t n, F f) {
  const std::uint64_t total = power(r->order(), n);
  for (std::uint64_t i = 0; i < total; ++i) f(poly_at(r, i, n));
}

/// Visits every dual polynomial with deg f0 < n0 and deg f_i < n1.
template <class F>
void for_each_dual_poly(const RingPtr& r, std::size_t k, std::size_t n0, std::size_t n1, F f) {
  const std::uint64_t q = r->order();
  const std::uint64_t total = power(q, n0 + k * n1);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::uint64_t rest = i;
    Poly f0 = poly_at(r, rest % power(q, n0), n0);
    rest /= power(q, n0);
    std::vector<Poly> parts;
    for (std::size_t t = 0; t < k; ++t) {
      parts.push_back(poly_at(r, rest % power(q, n1), n1));
      rest /= power(q, n1);
    }
    f(DualPoly(f0, parts));
  }
}

inline Poly random_poly(const RingPtr& r, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> coeff(0, static_cast<Elem>(r->order() - 1));
  std::vector<Elem> c(n);
  for (auto& x : c) x = coeff(rng);
  return Poly(r, c);
}

inline DualPoly random_dual_poly(const RingPtr& r, std::size_t k, std::size_t n0, std::size_t n1,
                                 std::mt19937_64& rng) {
  std::vector<Poly> parts;
  for (std::size_t i = 0; i < k; ++i) parts.push_back(random_poly(r, n1, rng));
  return DualPoly(random_poly(r, n0, rng), parts);
}

/// Every table of a polynomial over R[alpha..] with deg f0 < n0 and deg f_i < n1.
/// Evaluation is additive in the coefficients, so these tables are the
/// additive closure of the tables of c x^j and c alpha_i x^j, c in R.
inline std::set<Table> dual_table_group(const RingPtr& r, std::size_t k, std::size_t n0, std::size_t n1) {
  const DualRing d(r, k);
  const std::uint64_t m = d.enumerable_order();
  std::vector<std::uint64_t> add(m * m);
  for (std::uint64_t a = 0; a < m; ++a) {
    for (std::uint64_t b = 0; b < m; ++b) add[a * m + b] = d.index(d.add(d.element(a), d.element(b)));
  }
  std::vector<Table> gens;
  for (Elem c = 1; c < r->order(); ++c) {
    for (std::size_t j = 0; j < n0; ++j) {
      gens.push_back(table(DualPoly::lift(Poly::monomial(r, c, j), k), d));
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n1; ++j) {
        std::vector<Poly> parts(k, Poly(r));
        parts[i] = Poly::monomial(r, c, j);
        gens.push_back(table(DualPoly(Poly(r), parts), d));
      }
    }
  }
  std::set<Table> seen{Table(m, 0)};
  std::vector<Table> queue{Table(m, 0)};
  while (!queue.empty()) {
    const Table t = queue.back();
    queue.pop_back();
    for (const Table& g : gens) {
      Table u(m);
      for (std::size_t p = 0; p < m; ++p) u[p] = add[t[p] * m + g[p]];
      if (seen.insert(u).second) queue.push_back(std::move(u));
    }
  }
  return seen;
}

/// g times a random cofactor of degree < extra.
inline Poly random_multiple(const Poly& g, std::size_t extra, std::mt19937_64& rng) {
  return random_poly(g.ring_ptr(), extra, rng) * g;
}

}  // namespace oracle
