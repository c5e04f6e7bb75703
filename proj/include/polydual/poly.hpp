#pragma once

#include "polydual/dual.hpp"
#include "polydual/ring.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace polydual {

/// Dense univariate polynomial over a finite ring. Trailing zero
/// coefficients are allowed; `degree()` ignores them.
class Poly {
 public:
  explicit Poly(RingPtr ring, std::vector<Elem> coeffs = {});

  static Poly monomial(RingPtr ring, Elem c, std::size_t e);
  static Poly x(RingPtr ring);
  static Poly constant(RingPtr ring, Elem c) { return monomial(std::move(ring), c, 0); }

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const FiniteRing& ring() const noexcept { return *ring_; }

  std::span<const Elem> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  void set_coeff(std::size_t i, Elem c);

  /// Highest index with a nonzero coefficient; nullopt stands for the
  /// degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return !degree().has_value(); }
  /// True when deg < bound, with the zero polynomial below every bound.
  bool degree_below(std::size_t bound) const;

  Poly trimmed() const;

  /// Equal as polynomials (trailing zeros ignored).
  bool operator==(const Poly& other) const;

 private:
  RingPtr ring_;
  std::vector<Elem> coeffs_;
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator-(const Poly& f);
Poly operator*(const Poly& f, const Poly& g);
Poly scale(Elem c, const Poly& f);
Poly pow(const Poly& f, std::size_t e);

/// Formal derivative; the integer multiples j*c_j are reduced into the ring.
Poly derivative(const Poly& f);

/// Horner evaluation at a base-ring element.
Elem eval(const Poly& f, Elem a);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Division by a monic polynomial. Throws Error(precondition) otherwise.
DivMod divmod_monic(const Poly& f, const Poly& monic);

/// f(a0 + sum a_i alpha_i) = f(a0) + sum a_i f'(a0) alpha_i.
DualElement eval_dual_fast(const Poly& f, const DualRing& ring, const DualElement& x);

/// f = f0 + sum f_i alpha_i with f0..fk over the base ring.
struct DualPoly {
  Poly f0;
  std::vector<Poly> parts;

  DualPoly(Poly f0_, std::vector<Poly> parts_);
  /// Base polynomial with all parts zero.
  static DualPoly lift(const Poly& f, std::size_t k);

  std::size_t k() const noexcept { return parts.size(); }
  const RingPtr& ring_ptr() const noexcept { return f0.ring_ptr(); }
  const FiniteRing& ring() const noexcept { return f0.ring(); }

  bool operator==(const DualPoly& other) const;
};

DualPoly operator+(const DualPoly& f, const DualPoly& g);
DualPoly operator-(const DualPoly& f, const DualPoly& g);
DualPoly operator-(const DualPoly& f);
DualPoly operator*(const DualPoly& f, const DualPoly& g);
DualPoly pow(const DualPoly& f, std::size_t e);

/// Polynomial whose coefficients are elements of R[alpha_1..alpha_k].
struct DualCoeffPoly {
  DualRing ring;
  std::vector<DualElement> coeffs;
};

/// Splits each coefficient into its alpha coordinates.
DualPoly decompose(const DualCoeffPoly& f);
DualCoeffPoly reassemble(const DualPoly& f, const DualRing& ring);

/// f0(a0) + sum (a_i f0'(a0) + f_i(a0)) alpha_i.
DualElement eval_dualpoly(const DualPoly& f, const DualRing& ring, const DualElement& x);

/// Induced function on the base ring, indexed by element index.
struct FunctionTable {
  RingPtr domain;
  std::vector<Elem> values;

  bool operator==(const FunctionTable& o) const { return values == o.values; }
};

/// Induced function on R[alpha..]; values are stored flat, (k+1) coordinates
/// per point, points in DualRing index order.
struct DualFunctionTable {
  DualRing domain;
  std::vector<Elem> values;

  std::size_t points() const { return values.size() / (domain.k() + 1); }
  DualElement at(std::uint64_t point) const;
  bool operator==(const DualFunctionTable& o) const { return values == o.values; }
};

FunctionTable induce(const Poly& f);
DualFunctionTable induce(const Poly& f, const DualRing& ring);
DualFunctionTable induce(const DualPoly& f, const DualRing& ring);

/// True when the table is a bijection of its domain.
bool is_bijective(const FunctionTable& t);
bool is_bijective(const DualFunctionTable& t);

}  // namespace polydual
