#pragma once

#include "polydual/poly.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace polydual {

enum class CriterionPath {
  exhaustive,       // bijectivity of the value table
  dual_criterion,   // f0 permutes R and f0' is unit-valued
  local_residue,    // residue field permutation plus f' outside M
  direct_sum,       // componentwise
  nonfield_dual,    // f0 permutes R (bases without field summands)
};

std::string_view criterion_path_name(CriterionPath path) noexcept;

/// Why a polynomial fails to permute. A collision stores two distinct points
/// with equal values (each as coordinates: one for base-ring points, k+1 for
/// dual points). A derivative failure stores a in R with f0'(a) a non-unit.
struct PermWitness {
  enum class Kind { collision, nonunit_derivative };
  Kind kind = Kind::collision;
  std::vector<Elem> x, y;
  Elem point = 0;
};

struct PermVerdict {
  bool is_permutation = false;
  std::optional<PermWitness> witness;
  CriterionPath path = CriterionPath::exhaustive;
};

/// Exhaustive. The witness is the first collision (x < y) in index order.
PermVerdict is_perm_on_base(const Poly& f);

/// f permutes R[alpha_1..alpha_k] iff f0 permutes R and f0'(a) is a unit for
/// every a in R.
PermVerdict is_perm_on_dual(const DualPoly& f);

/// Local ring with M != 0: f permutes R iff it permutes R/M and f'(a) is not
/// in M for any a. Throws Error(precondition) for fields and direct sums.
PermVerdict is_perm_local(const Poly& f);

/// f permutes R_1 (+) ... (+) R_m iff each coefficient projection permutes
/// its summand. Throws Error(precondition) unless the ring is a direct sum.
PermVerdict is_perm_directsum(const Poly& f);

/// For a base without field summands (a single non-field local ring
/// included), f permutes R[alpha..] iff f0 permutes R. Throws
/// Error(precondition) naming the field summand otherwise.
PermVerdict is_perm_dual_nonfield(const DualPoly& f);

/// Lagrange interpolation over a field: the polynomial of degree < q with
/// table `values`. Throws Error(precondition) for non-fields.
Poly interpolate(const RingPtr& field, const std::vector<Elem>& values);

/// f = f0 + (f0' - f1)(x^q - x), where f0, f1 interpolate F and G. Satisfies
/// [f] = F, [f'] = G and deg f < 2q. Throws Error(precondition) for
/// non-fields or tables of the wrong size.
Poly construct_pair_field(const FunctionTable& F, const FunctionTable& G);

/// Checks a witness by direct evaluation.
bool witness_holds(const Poly& f, const PermWitness& w);
bool witness_holds(const DualPoly& f, const PermWitness& w);

}  // namespace polydual
