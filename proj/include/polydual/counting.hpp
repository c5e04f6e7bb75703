#pragma once

#include "polydual/bigint.hpp"
#include "polydual/enumerate.hpp"
#include "polydual/ring.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polydual {

enum class Quantity { functions, perms, stab };
enum class Method { formula, enumeration, both };
enum class StabMethod { enumeration, field_formula, index_formula };

std::string_view quantity_name(Quantity q) noexcept;
std::string_view method_name(Method m) noexcept;
std::string_view stab_method_name(StabMethod m) noexcept;
/// Throws Error(precondition) for unknown names. Method accepts "enum".
Quantity parse_quantity(std::string_view s);
Method parse_method(std::string_view s);
StabMethod parse_stab_method(std::string_view s);

// Enumeration oracles. Each searches class representatives within the
// degree bounds (< |R| for functions on R, < 2|R| for pairs and for f0 on
// R[alpha..]) and throws Error(budget_exceeded) when neither a direct sweep
// nor a subgroup closure fits in opt.budget.

/// Number of distinct [f] on R.
Count index_N(const RingPtr& ring, const EnumOptions& opt = {});
/// Number of distinct pairs ([f], [f']) on R.
Count index_Nprime(const RingPtr& ring, const EnumOptions& opt = {});
/// |P(R)|: distinct bijective [f] on R.
Count base_perm_count(const RingPtr& ring, const EnumOptions& opt = {});
/// Distinct pairs ([f], [f']) with [f] bijective and [f'] unit-valued.
Count perm_pair_count(const RingPtr& ring, const EnumOptions& opt = {});
/// |N_n| or |N'_n| by filtering all |R|^n polynomials.
Count null_set_size(const RingPtr& ring, std::size_t n, bool primed, const EnumOptions& opt = {});

/// Distinct induced functions on R[alpha_1..alpha_k]. Sweeps all
/// representatives when they fit in the budget, otherwise counts classes as
/// index_Nprime * index_N^k.
Count count_functions_enum(const RingPtr& ring, std::size_t k, const EnumOptions& opt = {});
/// q^((k+2)q) for fields, index_Nprime * index_N^k otherwise (linear path).
Count count_functions_formula(const RingPtr& ring, std::size_t k);

/// Distinct bijective induced functions on R[alpha..]. Sweeps all
/// representatives when they fit, otherwise perm_pair_count * index_N^k.
Count count_perms_enum(const RingPtr& ring, std::size_t k, const EnumOptions& opt = {});
/// q!(q-1)^q q^(kq) for fields, index_N^k * |P(R)| * |Stab| otherwise.
Count count_perms_formula(const RingPtr& ring, std::size_t k, const EnumOptions& opt = {});

struct StabResult {
  Count order;
  StabMethod method = StabMethod::enumeration;
  /// |{[h'] : h in N}|, when the method computed it.
  std::optional<Count> derivative_image_size;
};

/// enumeration: tables of x + h on R[alpha..] over null h of degree < 2|R|
/// that permute, deduplicated. field_formula: (q-1)^q, fields only.
/// index_formula: |N_n| / |N'_n| with n = 2|R|, bases without field
/// summands only. Throws Error(precondition) on a method/ring mismatch.
StabResult stab_order(const RingPtr& ring, std::size_t k, StabMethod method,
                      const EnumOptions& opt = {});

/// True when stab_order by enumeration is the same for k = 1..k_max.
bool stab_independence_check(const RingPtr& ring, std::size_t k_max, const EnumOptions& opt = {});

/// Default stabilizer method: field_formula on fields, index_formula when no
/// summand is a field, enumeration otherwise.
StabMethod default_stab_method(const FiniteRing& ring);

enum class Relation { equal, differ };

/// One formula-versus-oracle comparison. `match` is set when both values are
/// present and says whether `relation` holds between them.
struct CountReport {
  std::string ring;
  std::size_t k = 0;
  std::string quantity;
  std::string method;
  std::optional<Count> formula;
  std::optional<Count> oracle;
  std::optional<std::string> oracle_skipped;  // e.g. "budget"
  Relation relation = Relation::equal;
  std::optional<bool> match;
  std::optional<double> formula_seconds;
  std::optional<double> oracle_seconds;
  std::string note;
};

/// Runs one quantity with the given method. Budget overruns in the oracle
/// become oracle_skipped = "budget" rather than errors.
CountReport count(const RingPtr& ring, std::size_t k, Quantity quantity, Method method,
                  const EnumOptions& opt = {});

/// Index identity, function and permutation counts, stabilizer orders and,
/// for fields, the contrast between [N:N'] = q^q and |Stab| = (q-1)^q.
/// Mismatches are reported, never thrown.
std::vector<CountReport> verify_identities(const RingPtr& ring, std::size_t k,
                                           const EnumOptions& opt = {});

}  // namespace polydual
