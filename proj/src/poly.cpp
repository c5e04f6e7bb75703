#include "polydual/poly.hpp"

#include "polydual/error.hpp"

#include <algorithm>

namespace polydual {

namespace {

void require_same(const FiniteRing& a, const FiniteRing& b) {
  if (!a.same_as(b)) {
    throw Error(ErrorCode::ring_mismatch,
                "polynomials over " + to_string(a.spec()) + " and " + to_string(b.spec()));
  }
}

void require_base(const DualRing& dual, const FiniteRing& ring) {
  if (!dual.base().same_as(ring)) {
    throw Error(ErrorCode::ring_mismatch,
                "polynomial over " + to_string(ring.spec()) + " evaluated on " +
                    dual.spec_string());
  }
}

}  // namespace

Poly::Poly(RingPtr ring, std::vector<Elem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) {
    if (c >= ring_->order()) {
      throw Error(ErrorCode::ring_mismatch, "coefficient index out of ring");
    }
  }
}

Poly Poly::monomial(RingPtr ring, Elem c, std::size_t e) {
  std::vector<Elem> coeffs(e + 1, 0);
  coeffs[e] = c;
  return Poly(std::move(ring), std::move(coeffs));
}

Poly Poly::x(RingPtr ring) {
  const Elem one = ring->one();
  return monomial(std::move(ring), one, 1);
}

void Poly::set_coeff(std::size_t i, Elem c) {
  if (i >= coeffs_.size()) coeffs_.resize(i + 1, 0);
  coeffs_[i] = c;
}

std::optional<std::size_t> Poly::degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != 0) return i;
  }
  return std::nullopt;
}

bool Poly::degree_below(std::size_t bound) const {
  const auto d = degree();
  return !d || *d < bound;
}

Poly Poly::trimmed() const {
  const auto d = degree();
  std::vector<Elem> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(d ? *d + 1 : 0));
  return Poly(ring_, std::move(c));
}

bool Poly::operator==(const Poly& other) const {
  if (!ring_->same_as(*other.ring_)) return false;
  const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (coeff(i) != other.coeff(i)) return false;
  }
  return true;
}

Poly operator+(const Poly& f, const Poly& g) {
  require_same(f.ring(), g.ring());
  const FiniteRing& R = f.ring();
  std::vector<Elem> c(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = R.add(f.coeff(i), g.coeff(i));
  return Poly(f.ring_ptr(), std::move(c));
}

Poly operator-(const Poly& f) {
  const FiniteRing& R = f.ring();
  std::vector<Elem> c(f.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = R.neg(f.coeff(i));
  return Poly(f.ring_ptr(), std::move(c));
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator*(const Poly& f, const Poly& g) {
  require_same(f.ring(), g.ring());
  const FiniteRing& R = f.ring();
  const auto df = f.degree();
  const auto dg = g.degree();
  if (!df || !dg) return Poly(f.ring_ptr());
  std::vector<Elem> c(*df + *dg + 1, 0);
  for (std::size_t i = 0; i <= *df; ++i) {
    if (f.coeff(i) == 0) continue;
    for (std::size_t j = 0; j <= *dg; ++j) {
      c[i + j] = R.add(c[i + j], R.mul(f.coeff(i), g.coeff(j)));
    }
  }
  return Poly(f.ring_ptr(), std::move(c));
}

Poly scale(Elem c, const Poly& f) {
  const FiniteRing& R = f.ring();
  std::vector<Elem> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.mul(c, f.coeff(i));
  return Poly(f.ring_ptr(), std::move(out));
}

Poly pow(const Poly& f, std::size_t e) {
  Poly result = Poly::constant(f.ring_ptr(), f.ring().one());
  Poly base = f;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly derivative(const Poly& f) {
  const FiniteRing& R = f.ring();
  if (f.size() <= 1) return Poly(f.ring_ptr());
  std::vector<Elem> c(f.size() - 1);
  for (std::size_t j = 1; j < f.size(); ++j) {
    c[j - 1] = R.mul(R.from_integer(static_cast<std::int64_t>(j)), f.coeff(j));
  }
  return Poly(f.ring_ptr(), std::move(c));
}

Elem eval(const Poly& f, Elem a) {
  const FiniteRing& R = f.ring();
  Elem acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = R.add(R.mul(acc, a), f.coeff(i));
  return acc;
}

DivMod divmod_monic(const Poly& f, const Poly& monic) {
  require_same(f.ring(), monic.ring());
  const FiniteRing& R = f.ring();
  const auto dm = monic.degree();
  if (!dm || monic.coeff(*dm) != R.one()) {
    throw Error(ErrorCode::precondition, "divisor must be monic");
  }
  std::vector<Elem> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Elem> quo;
  if (rem.size() > *dm) quo.assign(rem.size() - *dm, 0);
  for (std::size_t i = rem.size(); i-- > *dm;) {
    const Elem lead = rem[i];
    if (lead == 0) continue;
    const std::size_t shift = i - *dm;
    quo[shift] = lead;
    for (std::size_t j = 0; j <= *dm; ++j) {
      rem[shift + j] = R.sub(rem[shift + j], R.mul(lead, monic.coeff(j)));
    }
  }
  rem.resize(std::min(rem.size(), *dm));
  return {Poly(f.ring_ptr(), std::move(quo)), Poly(f.ring_ptr(), std::move(rem))};
}

DualElement eval_dual_fast(const Poly& f, const DualRing& ring, const DualElement& x) {
  require_base(ring, f.ring());
  ring.check(x);
  const FiniteRing& R = f.ring();
  const Elem a0 = x.constant();
  const Elem value = eval(f, a0);
  const Elem slope = eval(derivative(f), a0);
  DualElement out = ring.zero();
  out.coords[0] = value;
  for (std::size_t i = 1; i <= ring.k(); ++i) out.coords[i] = R.mul(x.coords[i], slope);
  return out;
}

DualPoly::DualPoly(Poly f0_, std::vector<Poly> parts_)
    : f0(std::move(f0_)), parts(std::move(parts_)) {
  for (const auto& p : parts) require_same(f0.ring(), p.ring());
}

DualPoly DualPoly::lift(const Poly& f, std::size_t k) {
  return DualPoly(f, std::vector<Poly>(k, Poly(f.ring_ptr())));
}

bool DualPoly::operator==(const DualPoly& other) const {
  return f0 == other.f0 && parts == other.parts;
}

namespace {

void require_same_k(const DualPoly& f, const DualPoly& g) {
  if (f.k() != g.k()) throw Error(ErrorCode::ring_mismatch, "dual polynomials differ in k");
}

}  // namespace

DualPoly operator+(const DualPoly& f, const DualPoly& g) {
  require_same_k(f, g);
  std::vector<Poly> parts;
  for (std::size_t i = 0; i < f.k(); ++i) parts.push_back(f.parts[i] + g.parts[i]);
  return DualPoly(f.f0 + g.f0, std::move(parts));
}

DualPoly operator-(const DualPoly& f) {
  std::vector<Poly> parts;
  for (const auto& p : f.parts) parts.push_back(-p);
  return DualPoly(-f.f0, std::move(parts));
}

DualPoly operator-(const DualPoly& f, const DualPoly& g) { return f + (-g); }

DualPoly operator*(const DualPoly& f, const DualPoly& g) {
  require_same_k(f, g);
  std::vector<Poly> parts;
  for (std::size_t i = 0; i < f.k(); ++i) parts.push_back(f.f0 * g.parts[i] + g.f0 * f.parts[i]);
  return DualPoly(f.f0 * g.f0, std::move(parts));
}

DualPoly pow(const DualPoly& f, std::size_t e) {
  DualPoly result = DualPoly::lift(Poly::constant(f.ring_ptr(), f.ring().one()), f.k());
  DualPoly base = f;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

DualPoly decompose(const DualCoeffPoly& f) {
  const DualRing& D = f.ring;
  std::vector<std::vector<Elem>> coords(D.k() + 1, std::vector<Elem>(f.coeffs.size(), 0));
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
    D.check(f.coeffs[j]);
    for (std::size_t i = 0; i <= D.k(); ++i) coords[i][j] = f.coeffs[j].coords[i];
  }
  std::vector<Poly> parts;
  for (std::size_t i = 1; i <= D.k(); ++i) parts.emplace_back(D.base_ptr(), std::move(coords[i]));
  return DualPoly(Poly(D.base_ptr(), std::move(coords[0])), std::move(parts));
}

DualCoeffPoly reassemble(const DualPoly& f, const DualRing& ring) {
  require_base(ring, f.ring());
  if (ring.k() != f.k()) throw Error(ErrorCode::ring_mismatch, "dual polynomial k differs from ring");
  std::size_t n = f.f0.size();
  for (const auto& p : f.parts) n = std::max(n, p.size());
  DualCoeffPoly out{ring, std::vector<DualElement>(n, ring.zero())};
  for (std::size_t j = 0; j < n; ++j) {
    out.coeffs[j].coords[0] = f.f0.coeff(j);
    for (std::size_t i = 1; i <= f.k(); ++i) out.coeffs[j].coords[i] = f.parts[i - 1].coeff(j);
  }
  return out;
}

DualElement eval_dualpoly(const DualPoly& f, const DualRing& ring, const DualElement& x) {
  require_base(ring, f.ring());
  if (ring.k() != f.k()) throw Error(ErrorCode::ring_mismatch, "dual polynomial k differs from ring");
  ring.check(x);
  const FiniteRing& R = f.ring();
  const Elem a0 = x.constant();
  const Elem slope = eval(derivative(f.f0), a0);
  DualElement out = ring.zero();
  out.coords[0] = eval(f.f0, a0);
  for (std::size_t i = 1; i <= ring.k(); ++i) {
    out.coords[i] = R.add(R.mul(x.coords[i], slope), eval(f.parts[i - 1], a0));
  }
  return out;
}

DualElement DualFunctionTable::at(std::uint64_t point) const {
  const std::size_t w = domain.k() + 1;
  DualElement e = domain.zero();
  for (std::size_t i = 0; i < w; ++i) e.coords[i] = values[point * w + i];
  return e;
}

FunctionTable induce(const Poly& f) {
  const FiniteRing& R = f.ring();
  FunctionTable t{f.ring_ptr(), std::vector<Elem>(R.order())};
  for (Elem a = 0; a < R.order(); ++a) t.values[a] = eval(f, a);
  return t;
}

DualFunctionTable induce(const Poly& f, const DualRing& ring) {
  return induce(DualPoly::lift(f, ring.k()), ring);
}

DualFunctionTable induce(const DualPoly& f, const DualRing& ring) {
  require_base(ring, f.ring());
  if (ring.k() != f.k()) throw Error(ErrorCode::ring_mismatch, "dual polynomial k differs from ring");
  const FiniteRing& R = f.ring();
  const std::uint64_t n = ring.enumerable_order();
  const std::size_t q = R.order();
  const std::size_t w = ring.k() + 1;
  // Per base point: f0(a0), f0'(a0), f_i(a0).
  const FunctionTable value = induce(f.f0);
  const FunctionTable slope = induce(derivative(f.f0));
  std::vector<FunctionTable> part_values;
  for (const auto& p : f.parts) part_values.push_back(induce(p));
  DualFunctionTable t{ring, std::vector<Elem>(n * w)};
  std::vector<Elem> coords(w, 0);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < w; ++i) {
      coords[i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
    const Elem a0 = coords[0];
    Elem* out = &t.values[idx * w];
    out[0] = value.values[a0];
    for (std::size_t i = 1; i < w; ++i) {
      out[i] = R.add(R.mul(coords[i], slope.values[a0]), part_values[i - 1].values[a0]);
    }
  }
  return t;
}

bool is_bijective(const FunctionTable& t) {
  std::vector<bool> hit(t.values.size(), false);
  for (Elem v : t.values) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_bijective(const DualFunctionTable& t) {
  const std::size_t n = t.points();
  std::vector<bool> hit(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    const std::uint64_t v = t.domain.index(t.at(p));
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace polydual
