#include "polydual/counting.hpp"

#include "polydual/dual.hpp"
#include "polydual/error.hpp"
#include "polydual/linear.hpp"
#include "polydual/spaces.hpp"

#include <algorithm>
#include <chrono>

namespace polydual {

std::string_view quantity_name(Quantity q) noexcept {
  switch (q) {
    case Quantity::functions: return "functions";
    case Quantity::perms: return "perms";
    case Quantity::stab: return "stab";
  }
  return "unknown";
}

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::formula: return "formula";
    case Method::enumeration: return "enum";
    case Method::both: return "both";
  }
  return "unknown";
}

std::string_view stab_method_name(StabMethod m) noexcept {
  switch (m) {
    case StabMethod::enumeration: return "enumeration";
    case StabMethod::field_formula: return "field_formula";
    case StabMethod::index_formula: return "index_formula";
  }
  return "unknown";
}

Quantity parse_quantity(std::string_view s) {
  if (s == "functions") return Quantity::functions;
  if (s == "perms") return Quantity::perms;
  if (s == "stab") return Quantity::stab;
  throw Error(ErrorCode::precondition, "unknown quantity '" + std::string(s) + "'");
}

Method parse_method(std::string_view s) {
  if (s == "formula") return Method::formula;
  if (s == "enum" || s == "enumeration") return Method::enumeration;
  if (s == "both") return Method::both;
  throw Error(ErrorCode::precondition, "unknown method '" + std::string(s) + "'");
}

StabMethod parse_stab_method(std::string_view s) {
  if (s == "enumeration" || s == "enum") return StabMethod::enumeration;
  if (s == "field_formula") return StabMethod::field_formula;
  if (s == "index_formula") return StabMethod::index_formula;
  throw Error(ErrorCode::precondition, "unknown stabilizer method '" + std::string(s) + "'");
}

namespace {

bool fits(const TableSpace& space, const EnumOptions& opt) { return space.leaf_count() <= opt.budget; }

bool fits(std::size_t q, std::size_t positions, const EnumOptions& opt) {
  return ipow(Count(q), positions) <= opt.budget;
}

bool all_zero(std::span<const Cell> cells) {
  return std::all_of(cells.begin(), cells.end(), [](Cell c) { return c == 0; });
}

bool bijective_cells(std::span<const Cell> values) {
  std::vector<bool> hit(values.size(), false);
  for (Cell v : values) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool unit_cells(const FiniteRing& r, std::span<const Cell> values) {
  return std::all_of(values.begin(), values.end(), [&](Cell v) { return r.is_unit(v); });
}

bool bijective_dual(const DualRing& d, std::span<const Cell> table, std::vector<bool>& hit) {
  const std::size_t w = d.k() + 1;
  const std::size_t points = table.size() / w;
  hit.assign(points, false);
  for (std::size_t p = 0; p < points; ++p) {
    const std::uint64_t v = dual_cell_index(d, table.subspan(p * w, w));
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::uint64_t count_sweep(const TableSpace& space, const EnumOptions& opt,
                          const std::function<bool(std::span<const Cell>)>& keep) {
  auto states = sweep<std::uint64_t>(
      space, opt, [] { return std::uint64_t{0}; },
      [&](std::uint64_t& n, std::span<const Cell>, std::span<const Cell> table) {
        if (keep(table)) ++n;
      });
  std::uint64_t total = 0;
  for (auto n : states) total += n;
  return total;
}

// Table of the coefficient vector `digits` in `space`.
std::vector<Cell> table_of(const TableSpace& space, std::span<const Cell> digits) {
  std::vector<Cell> t(space.width, 0);
  for (std::size_t j = 0; j < digits.size(); ++j) {
    const auto c = space.contribution(j, digits[j]);
    for (std::size_t e = 0; e < space.width; ++e) t[e] = space.add[t[e] * space.radix + c[e]];
  }
  return t;
}

void require_dual(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::precondition, "k must be at least 1");
}

// Enumeration over R[alpha..] needs every point materialized.
void require_enumerable(const RingPtr& ring, std::size_t k, const EnumOptions& opt) {
  if (k > kMaxEnumerableK || ipow(Count(ring->order()), k + 1) > opt.budget) {
    throw Error(ErrorCode::budget_exceeded,
                to_string(ring->spec()) + "[" + std::to_string(k) + "] is too large to enumerate");
  }
}

}  // namespace

Count index_N(const RingPtr& ring, const EnumOptions& opt) {
  const TableSpace space = function_space(ring, ring->order());
  if (fits(space, opt)) return distinct_tables(space, opt).size();
  return fibered_closure(space, space.width, opt.budget).order();
}

Count index_Nprime(const RingPtr& ring, const EnumOptions& opt) {
  const TableSpace space = pair_space(ring, 2 * ring->order());
  if (fits(space, opt)) return distinct_tables(space, opt).size();
  return fibered_closure(space, ring->order(), opt.budget).order();
}

Count base_perm_count(const RingPtr& ring, const EnumOptions& opt) {
  const TableSpace space = function_space(ring, ring->order());
  if (fits(space, opt)) return distinct_tables(space, opt, bijective_cells).size();
  const FiberedImage img = fibered_closure(space, space.width, opt.budget);
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < img.base.size(); ++i) n += bijective_cells(img.base.key(i)) ? 1 : 0;
  return n;
}

Count perm_pair_count(const RingPtr& ring, const EnumOptions& opt) {
  const std::size_t q = ring->order();
  const TableSpace space = pair_space(ring, 2 * q);
  auto keep = [&](std::span<const Cell> t) {
    return bijective_cells(t.first(q)) && unit_cells(*ring, t.subspan(q));
  };
  if (fits(space, opt)) return distinct_tables(space, opt, keep).size();
  const FiberedImage img = fibered_closure(space, q, opt.budget);
  std::uint64_t n = 0;
  img.for_each(space, [&](std::span<const Cell> t) { n += keep(t) ? 1 : 0; });
  return n;
}

Count null_set_size(const RingPtr& ring, std::size_t n, bool primed, const EnumOptions& opt) {
  const std::size_t q = ring->order();
  const TableSpace space = pair_space(ring, n);
  return count_sweep(space, opt, [&](std::span<const Cell> t) {
    return primed ? all_zero(t) : all_zero(t.first(q));
  });
}

Count count_functions_enum(const RingPtr& ring, std::size_t k, const EnumOptions& opt) {
  require_dual(k);
  const std::size_t q = ring->order();
  if (k <= kMaxEnumerableK && fits(q, 2 * q + k * q, opt)) {
    const DualRing d(ring, k);
    return distinct_tables(dual_space(d, 2 * q, q), opt).size();
  }
  return index_Nprime(ring, opt) * ipow(index_N(ring, opt), k);
}

Count count_functions_formula(const RingPtr& ring, std::size_t k) {
  require_dual(k);
  const std::uint64_t q = ring->order();
  if (ring->is_field()) return ipow(Count(q), (k + 2) * q);
  return index_via_linear(ring, true) * ipow(index_via_linear(ring, false), k);
}

Count count_perms_enum(const RingPtr& ring, std::size_t k, const EnumOptions& opt) {
  require_dual(k);
  const std::size_t q = ring->order();
  if (k <= kMaxEnumerableK && fits(q, 2 * q + k * q, opt)) {
    const DualRing d(ring, k);
    const TableSpace space = dual_space(d, 2 * q, q);
    auto states = sweep<std::pair<KeySet, std::vector<bool>>>(
        space, opt, [&] { return std::make_pair(KeySet(space.width), std::vector<bool>()); },
        [&](auto& st, std::span<const Cell>, std::span<const Cell> table) {
          if (bijective_dual(d, table, st.second)) st.first.insert(table);
        });
    KeySet all(space.width);
    for (const auto& st : states) all.merge(st.first);
    return all.size();
  }
  return perm_pair_count(ring, opt) * ipow(index_N(ring, opt), k);
}

StabMethod default_stab_method(const FiniteRing& ring) {
  if (ring.is_field()) return StabMethod::field_formula;
  const auto parts = ring.summands();
  if (std::none_of(parts.begin(), parts.end(), [](const RingPtr& s) { return s->is_field(); })) {
    return StabMethod::index_formula;
  }
  return StabMethod::enumeration;
}

Count count_perms_formula(const RingPtr& ring, std::size_t k, const EnumOptions& opt) {
  require_dual(k);
  const std::uint64_t q = ring->order();
  if (ring->is_field()) {
    return factorial(q) * ipow(Count(q - 1), q) * ipow(Count(q), k * q);
  }
  const Count stab = stab_order(ring, k, default_stab_method(*ring), opt).order;
  return ipow(index_via_linear(ring, false), k) * base_perm_count(ring, opt) * stab;
}

namespace {

StabResult stab_enumerate(const RingPtr& ring, std::size_t k, const EnumOptions& opt) {
  require_enumerable(ring, k, opt);
  const std::size_t q = ring->order();
  const std::size_t n = 2 * q;
  const DualRing d(ring, k);
  const TableSpace pairs = pair_space(ring, n);
  std::vector<bool> hit;
  KeySet tables(d.enumerable_order() * (k + 1));
  StabResult result;
  result.method = StabMethod::enumeration;

  if (fits(pairs, opt)) {
    struct Found {
      std::vector<std::vector<Cell>> null;
      KeySet derivatives;
    };
    auto states = sweep<Found>(
        pairs, opt, [q] { return Found{{}, KeySet(q)}; },
        [q](Found& f, std::span<const Cell> digits, std::span<const Cell> t) {
          if (!all_zero(t.first(q))) return;
          f.null.emplace_back(digits.begin(), digits.end());
          f.derivatives.insert(t.subspan(q));
        });
    const TableSpace dual = dual_space(d, n, 0);
    KeySet derivatives(q);
    for (const Found& f : states) {
      derivatives.merge(f.derivatives);
      for (auto digits : f.null) {
        digits[1] = static_cast<Cell>(ring->add(digits[1], ring->one()));  // x + h
        const std::vector<Cell> t = table_of(dual, digits);
        if (bijective_dual(d, t, hit)) tables.insert(t);
      }
    }
    result.derivative_image_size = Count(derivatives.size());
  } else {
    // D = {[h'] : h in N} is the fiber of the pair image over [h] = 0. For
    // null h, (x + h)(a0 + sum a_i alpha_i) = a0 + sum a_i (1 + h'(a0)) alpha_i.
    const FiberedImage img = fibered_closure(pairs, q, opt.budget);
    const std::size_t w = k + 1;
    std::vector<Cell> t(tables.width());
    for (std::size_t g = 0; g < img.fiber.size(); ++g) {
      const auto deriv = img.fiber.key(g);
      for (std::uint64_t p = 0; p < d.enumerable_order(); ++p) {
        const DualElement pt = d.element(p);
        const Elem slope = ring->add(ring->one(), deriv[pt.constant()]);
        t[p * w] = static_cast<Cell>(pt.constant());
        for (std::size_t i = 1; i <= k; ++i) t[p * w + i] = static_cast<Cell>(ring->mul(pt.coords[i], slope));
      }
      if (bijective_dual(d, t, hit)) tables.insert(t);
    }
    result.derivative_image_size = Count(img.fiber.size());
  }
  result.order = tables.size();
  return result;
}

Count index_ratio(const RingPtr& ring, const EnumOptions& opt) {
  const std::size_t n = 2 * ring->order();
  if (fits(ring->order(), n, opt)) return null_set_size(ring, n, false, opt) / null_set_size(ring, n, true, opt);
  return null_set_size_via_linear(ring, n, false) / null_set_size_via_linear(ring, n, true);
}

}  // namespace

StabResult stab_order(const RingPtr& ring, std::size_t k, StabMethod method, const EnumOptions& opt) {
  require_dual(k);
  switch (method) {
    case StabMethod::enumeration: return stab_enumerate(ring, k, opt);
    case StabMethod::field_formula: {
      if (!ring->is_field()) {
        throw Error(ErrorCode::precondition,
                    "field_formula: " + to_string(ring->spec()) + " is not a field");
      }
      const std::uint64_t q = ring->order();
      return StabResult{ipow(Count(q - 1), q), method, std::nullopt};
    }
    case StabMethod::index_formula: {
      for (const RingPtr& s : ring->summands()) {
        if (s->is_field()) {
          throw Error(ErrorCode::precondition,
                      "index_formula: summand " + to_string(s->spec()) + " is a field");
        }
      }
      return StabResult{index_ratio(ring, opt), method, std::nullopt};
    }
  }
  throw Error(ErrorCode::precondition, "unknown stabilizer method");
}

bool stab_independence_check(const RingPtr& ring, std::size_t k_max, const EnumOptions& opt) {
  const Count first = stab_order(ring, 1, StabMethod::enumeration, opt).order;
  for (std::size_t k = 2; k <= k_max; ++k) {
    if (stab_order(ring, k, StabMethod::enumeration, opt).order != first) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
Count timed(F&& f, std::optional<double>& seconds) {
  const auto start = Clock::now();
  Count v = f();
  seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return v;
}

void settle(CountReport& r) {
  if (r.formula && r.oracle) {
    const bool eq = *r.formula == *r.oracle;
    r.match = r.relation == Relation::equal ? eq : !eq;
  }
}

// Runs f into the oracle slot, turning a budget overrun into a skip.
template <class F>
void run_oracle(CountReport& r, F&& f) {
  try {
    r.oracle = timed(std::forward<F>(f), r.oracle_seconds);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::budget_exceeded) throw;
    r.oracle_seconds.reset();
    r.oracle_skipped = "budget";
  }
}

template <class F>
void run_formula(CountReport& r, F&& f) {
  try {
    r.formula = timed(std::forward<F>(f), r.formula_seconds);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::budget_exceeded) throw;
    r.formula_seconds.reset();
    r.note = "formula needs an enumerated constituent beyond the budget";
  }
}

}  // namespace

CountReport count(const RingPtr& ring, std::size_t k, Quantity quantity, Method method,
                  const EnumOptions& opt) {
  require_dual(k);
  CountReport r;
  r.ring = to_string(ring->spec());
  r.k = k;
  r.quantity = std::string(quantity_name(quantity));
  r.method = std::string(method_name(method));
  const bool want_formula = method != Method::enumeration;
  const bool want_oracle = method != Method::formula;

  switch (quantity) {
    case Quantity::functions:
      if (want_formula) run_formula(r, [&] { return count_functions_formula(ring, k); });
      if (want_oracle) run_oracle(r, [&] { return count_functions_enum(ring, k, opt); });
      break;
    case Quantity::perms:
      if (want_formula) run_formula(r, [&] { return count_perms_formula(ring, k, opt); });
      if (want_oracle) run_oracle(r, [&] { return count_perms_enum(ring, k, opt); });
      break;
    case Quantity::stab: {
      const StabMethod sm = default_stab_method(*ring);
      if (want_formula) {
        if (sm == StabMethod::enumeration) {
          r.note = "no closed form for bases mixing field and non-field summands";
        } else {
          run_formula(r, [&] { return stab_order(ring, k, sm, opt).order; });
          if (r.note.empty()) r.note = std::string(stab_method_name(sm));
        }
      }
      if (want_oracle) run_oracle(r, [&] { return stab_order(ring, k, StabMethod::enumeration, opt).order; });
      break;
    }
  }
  settle(r);
  return r;
}

std::vector<CountReport> verify_identities(const RingPtr& ring, std::size_t k, const EnumOptions& opt) {
  require_dual(k);
  const std::string spec = to_string(ring->spec());
  const std::uint64_t q = ring->order();
  std::vector<CountReport> out;
  auto report = [&](std::string name, Relation rel) {
    CountReport r;
    r.ring = spec;
    r.k = k;
    r.quantity = std::move(name);
    r.method = "identity";
    r.relation = rel;
    return r;
  };
  auto with_fallback = [&](auto enumerate, auto linear) {
    try {
      return enumerate();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::budget_exceeded) throw;
      return linear();
    }
  };

  {
    // [R[x]:N'] = [R[x]:N] [N:N'].
    CountReport r = report("index_identity", Relation::equal);
    r.formula = timed(
        [&] {
          const Count idx = with_fallback([&] { return index_N(ring, opt); },
                                          [&] { return index_via_linear(ring, false); });
          return idx * index_ratio(ring, opt);
        },
        r.formula_seconds);
    run_oracle(r, [&] { return index_Nprime(ring, opt); });
    if (!r.oracle) {
      r.oracle = timed([&] { return index_via_linear(ring, true); }, r.oracle_seconds);
      r.oracle_skipped.reset();
      r.note = "index_Nprime from the linear span";
    }
    settle(r);
    out.push_back(std::move(r));
  }
  out.push_back(count(ring, k, Quantity::functions, Method::both, opt));
  out.push_back(count(ring, k, Quantity::perms, Method::both, opt));
  out.push_back(count(ring, k, Quantity::stab, Method::both, opt));
  {
    // B = |P(R)| |Stab|.
    CountReport r = report("perm_pairs", Relation::equal);
    run_formula(r, [&] {
      return base_perm_count(ring, opt) * stab_order(ring, k, default_stab_method(*ring), opt).order;
    });
    run_oracle(r, [&] { return perm_pair_count(ring, opt); });
    settle(r);
    out.push_back(std::move(r));
  }

  const StabMethod sm = default_stab_method(*ring);
  if (sm != StabMethod::enumeration) {
    const bool field = ring->is_field();
    CountReport r = report("index_vs_stab", field ? Relation::differ : Relation::equal);
    r.formula = timed([&] { return index_ratio(ring, opt); }, r.formula_seconds);
    run_oracle(r, [&] { return stab_order(ring, k, StabMethod::enumeration, opt).order; });
    r.note = field ? "[N:N'] = q^q while |Stab| = (q-1)^q" : "[N:N'] = |Stab|";
    settle(r);
    out.push_back(std::move(r));
  }
  if (ring->is_field()) {
    CountReport r = report("index_ratio_field", Relation::equal);
    r.formula = ipow(Count(q), q);
    r.formula_seconds = 0.0;
    run_oracle(r, [&] { return index_ratio(ring, opt); });
    settle(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace polydual
