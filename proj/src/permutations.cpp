#include "polydual/permutations.hpp"

#include "polydual/error.hpp"

#include <string>

namespace polydual {

std::string_view criterion_path_name(CriterionPath path) noexcept {
  switch (path) {
    case CriterionPath::exhaustive: return "exhaustive";
    case CriterionPath::dual_criterion: return "dual_criterion";
    case CriterionPath::local_residue: return "local_residue";
    case CriterionPath::direct_sum: return "direct_sum";
    case CriterionPath::nonfield_dual: return "nonfield_dual";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t kMaxFiberScan = std::uint64_t{1} << 24;

PermWitness collision(std::vector<Elem> x, std::vector<Elem> y) {
  PermWitness w;
  w.kind = PermWitness::Kind::collision;
  w.x = std::move(x);
  w.y = std::move(y);
  return w;
}

// Horner in R[alpha..] with the reassembled coefficients.
DualElement eval_horner(const DualPoly& f, const DualRing& ring, const DualElement& x) {
  const DualCoeffPoly g = reassemble(f, ring);
  DualElement acc = ring.zero();
  for (std::size_t j = g.coeffs.size(); j-- > 0;) acc = ring.add(ring.mul(acc, x), g.coeffs[j]);
  return acc;
}

// f0(x0) = f0(y0) with x0 != y0, so the |R|^k points above each of them map
// into the |R|^k values with constant f0(x0): a collision exists there.
PermWitness dual_collision_above(const DualPoly& f, Elem x0, Elem y0) {
  const DualRing ring(f.ring_ptr(), f.k());
  const std::uint64_t q = f.ring().order();
  const Count fiber = ipow(Count(q), f.k());
  if (fiber > kMaxFiberScan) {
    throw Error(ErrorCode::precondition, "fiber too large for a collision witness");
  }
  const auto per = static_cast<std::uint64_t>(fiber);
  std::vector<std::uint64_t> first(per, ~std::uint64_t{0});
  std::vector<DualElement> points;
  for (Elem a0 : {x0, y0}) {
    for (std::uint64_t t = 0; t < per; ++t) {
      DualElement p = ring.zero();
      p.coords[0] = a0;
      std::uint64_t rest = t;
      for (std::size_t i = 1; i <= f.k(); ++i) {
        p.coords[i] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      const DualElement v = eval_dualpoly(f, ring, p);
      std::uint64_t key = 0;
      for (std::size_t i = f.k(); i >= 1; --i) key = key * q + v.coords[i];
      if (first[key] != ~std::uint64_t{0}) return collision(points[first[key]].coords, p.coords);
      first[key] = points.size();
      points.push_back(std::move(p));
    }
  }
  throw Error(ErrorCode::precondition, "no collision above a base collision");
}

void require_local_nonfield(const FiniteRing& r, const char* what) {
  if (!r.is_local()) throw Error(ErrorCode::precondition, std::string(what) + ": ring is not local");
  if (r.is_field()) {
    throw Error(ErrorCode::precondition,
                std::string(what) + ": " + to_string(r.spec()) + " is a field, use the exhaustive test");
  }
}

}  // namespace

PermVerdict is_perm_on_base(const Poly& f) {
  const FiniteRing& r = f.ring();
  PermVerdict v;
  v.path = CriterionPath::exhaustive;
  std::vector<Elem> seen(r.order(), ~Elem{0});
  for (Elem a = 0; a < r.order(); ++a) {
    const Elem y = eval(f, a);
    if (seen[y] != ~Elem{0}) {
      v.witness = collision({seen[y]}, {a});
      return v;
    }
    seen[y] = a;
  }
  v.is_permutation = true;
  return v;
}

PermVerdict is_perm_on_dual(const DualPoly& f) {
  PermVerdict v;
  v.path = CriterionPath::dual_criterion;
  const PermVerdict base = is_perm_on_base(f.f0);
  if (!base.is_permutation) {
    v.witness = dual_collision_above(f, base.witness->x[0], base.witness->y[0]);
    return v;
  }
  const FiniteRing& r = f.ring();
  const Poly d = derivative(f.f0);
  for (Elem a = 0; a < r.order(); ++a) {
    if (!r.is_unit(eval(d, a))) {
      PermWitness w;
      w.kind = PermWitness::Kind::nonunit_derivative;
      w.point = a;
      v.witness = w;
      return v;
    }
  }
  v.is_permutation = true;
  return v;
}

PermVerdict is_perm_local(const Poly& f) {
  const FiniteRing& r = f.ring();
  require_local_nonfield(r, "is_perm_local");
  const LocalStructure ls = *r.local_structure();
  std::vector<Elem> reduced;
  reduced.reserve(f.size());
  for (Elem c : f.coeffs()) reduced.push_back(ls.residue_map[c]);
  const Poly residue(ls.residue_field, std::move(reduced));

  bool ok = is_perm_on_base(residue).is_permutation;
  if (ok) {
    const Poly d = derivative(f);
    for (Elem a = 0; a < r.order() && ok; ++a) ok = ls.residue_map[eval(d, a)] != 0;
  }
  PermVerdict v;
  v.path = CriterionPath::local_residue;
  v.is_permutation = ok;
  if (!ok) v.witness = is_perm_on_base(f).witness;
  return v;
}

PermVerdict is_perm_directsum(const Poly& f) {
  const FiniteRing& r = f.ring();
  if (!r.is_direct_sum()) throw Error(ErrorCode::precondition, "is_perm_directsum: ring is not a direct sum");
  const auto parts = r.summands();
  PermVerdict v;
  v.path = CriterionPath::direct_sum;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Elem> coeffs;
    coeffs.reserve(f.size());
    for (Elem c : f.coeffs()) coeffs.push_back(r.component(c, i));
    const PermVerdict part = is_perm_on_base(Poly(parts[i], std::move(coeffs)));
    if (!part.is_permutation) {
      std::vector<Elem> xs(parts.size(), 0), ys(parts.size(), 0);
      xs[i] = part.witness->x[0];
      ys[i] = part.witness->y[0];
      v.witness = collision({r.combine(xs)}, {r.combine(ys)});
      return v;
    }
  }
  v.is_permutation = true;
  return v;
}

PermVerdict is_perm_dual_nonfield(const DualPoly& f) {
  for (const RingPtr& s : f.ring().summands()) {
    if (s->is_field()) {
      throw Error(ErrorCode::precondition,
                  "is_perm_dual_nonfield: summand " + to_string(s->spec()) + " is a field");
    }
  }
  PermVerdict v;
  v.path = CriterionPath::nonfield_dual;
  const PermVerdict base = is_perm_on_base(f.f0);
  v.is_permutation = base.is_permutation;
  if (!base.is_permutation) {
    v.witness = dual_collision_above(f, base.witness->x[0], base.witness->y[0]);
  }
  return v;
}

Poly interpolate(const RingPtr& field, const std::vector<Elem>& values) {
  const std::size_t q = field->order();
  if (!field->is_field()) throw Error(ErrorCode::precondition, "interpolation needs a field");
  if (values.size() != q) throw Error(ErrorCode::precondition, "table size differs from field order");
  // Over F_q, prod_{b != a} (x - b) = (x^q - x) / (x - a) and its value at a is -1.
  Poly vanishing = Poly::monomial(field, field->one(), q) - Poly::x(field);
  Poly f(field);
  for (Elem a = 0; a < q; ++a) {
    if (values[a] == 0) continue;
    const Poly lagrange = divmod_monic(vanishing, Poly(field, {field->neg(a), field->one()})).quotient;
    f = f + scale(field->neg(values[a]), lagrange);
  }
  return f.trimmed();
}

Poly construct_pair_field(const FunctionTable& F, const FunctionTable& G) {
  const RingPtr& field = F.domain;
  if (!G.domain || !field->same_as(*G.domain)) {
    throw Error(ErrorCode::ring_mismatch, "construct_pair_field: tables over different rings");
  }
  if (!field->is_field()) {
    throw Error(ErrorCode::precondition,
                "construct_pair_field: " + to_string(field->spec()) + " is not a field");
  }
  const Poly f0 = interpolate(field, F.values);
  const Poly f1 = interpolate(field, G.values);
  const Poly xq = Poly::monomial(field, field->one(), field->order()) - Poly::x(field);
  return (f0 + (derivative(f0) - f1) * xq).trimmed();
}

bool witness_holds(const Poly& f, const PermWitness& w) {
  if (w.kind == PermWitness::Kind::nonunit_derivative) {
    return !f.ring().is_unit(eval(derivative(f), w.point));
  }
  if (w.x.size() != 1 || w.y.size() != 1 || w.x == w.y) return false;
  return eval(f, w.x[0]) == eval(f, w.y[0]);
}

bool witness_holds(const DualPoly& f, const PermWitness& w) {
  if (w.kind == PermWitness::Kind::nonunit_derivative) {
    return !f.ring().is_unit(eval(derivative(f.f0), w.point));
  }
  if (w.x.size() != f.k() + 1 || w.y.size() != f.k() + 1 || w.x == w.y) return false;
  const DualRing ring(f.ring_ptr(), f.k());
  return eval_horner(f, ring, DualElement{w.x}) == eval_horner(f, ring, DualElement{w.y});
}

}  // namespace polydual
