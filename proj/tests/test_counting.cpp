#include "oracle.hpp"

#include "polydual/counting.hpp"
#include "polydual/error.hpp"
#include "polydual/linear.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace polydual;
using oracle::ring;

namespace {

Count C(std::uint64_t v) { return Count(v); }

// Distinct tables on R of polynomials with degree < n.
std::set<oracle::Table> base_tables(const RingPtr& r, std::size_t n) {
  std::set<oracle::Table> s;
  oracle::for_each_poly(r, n, [&](const Poly& f) { s.insert(oracle::table(f)); });
  return s;
}

// Distinct ([f], [f']) for degree < n, concatenated.
std::set<oracle::Table> pair_tables(const RingPtr& r, std::size_t n) {
  std::set<oracle::Table> s;
  oracle::for_each_poly(r, n, [&](const Poly& f) {
    oracle::Table t = oracle::table(f);
    const oracle::Table d = oracle::table(oracle::derivative(f));
    t.insert(t.end(), d.begin(), d.end());
    s.insert(t);
  });
  return s;
}

struct DualCounts {
  std::size_t functions = 0;
  std::size_t perms = 0;
};

// Every representative with deg f0 < 2q, deg f_i < q, evaluated by Horner.
DualCounts dual_counts(const RingPtr& r, std::size_t k) {
  const DualRing d(r, k);
  std::set<oracle::Table> all, perms;
  oracle::for_each_dual_poly(r, k, 2 * r->order(), r->order(), [&](const DualPoly& f) {
    oracle::Table t = oracle::table(f, d);
    if (oracle::bijective(t)) perms.insert(t);
    all.insert(std::move(t));
  });
  return {all.size(), perms.size()};
}

// Distinct permutations of R[alpha..] given by x + h, h null on R of degree < 2q.
// On a direct sum the induced maps split by component, so the count is the
// product over the summands.
std::size_t stab_by_oracle(const RingPtr& r, std::size_t k) {
  if (r->is_direct_sum()) {
    std::size_t n = 1;
    for (const RingPtr& s : r->summands()) n *= stab_by_oracle(s, k);
    return n;
  }
  const DualRing d(r, k);
  std::set<oracle::Table> s;
  oracle::for_each_poly(r, 2 * r->order(), [&](const Poly& h) {
    if (!oracle::all_zero(oracle::table(h))) return;
    const oracle::Table t = oracle::table(DualPoly::lift(Poly::x(r) + h, k), d);
    if (oracle::bijective(t)) s.insert(t);
  });
  return s.size();
}

// Permutations of R[alpha] induced by polynomials with coefficients in R.
std::size_t base_induced_perms(const RingPtr& r) {
  const DualRing d(r, 1);
  std::set<oracle::Table> s;
  oracle::for_each_poly(r, 2 * r->order(), [&](const Poly& f) {
    const oracle::Table t = oracle::table(DualPoly::lift(f, 1), d);
    if (oracle::bijective(t)) s.insert(t);
  });
  return s.size();
}

std::size_t bijective_count(const std::set<oracle::Table>& s) {
  std::size_t n = 0;
  for (const auto& t : s) n += oracle::bijective(t) ? 1 : 0;
  return n;
}

}  // namespace

TEST(Indices, MatchOracleSets) {
  for (const char* spec : {"F_2", "F_3", "Z/4"}) {
    const RingPtr r = ring(spec);
    const std::size_t q = r->order();
    const auto fns = base_tables(r, q);
    const auto pairs = pair_tables(r, 2 * q);
    EXPECT_EQ(index_N(r), C(fns.size())) << spec;
    EXPECT_EQ(index_Nprime(r), C(pairs.size())) << spec;
    EXPECT_EQ(base_perm_count(r), C(bijective_count(fns))) << spec;
    std::size_t perm_pairs = 0;
    for (const auto& t : pairs) {
      const oracle::Table value(t.begin(), t.begin() + q);
      bool units = true;
      for (std::size_t a = q; a < 2 * q; ++a) units = units && r->is_unit(static_cast<Elem>(t[a]));
      perm_pairs += oracle::bijective(value) && units ? 1 : 0;
    }
    EXPECT_EQ(perm_pair_count(r), C(perm_pairs)) << spec;
  }
}

TEST(Indices, Z4Values) {
  const RingPtr z4 = ring("Z/4");
  EXPECT_EQ(index_N(z4), C(64));
  EXPECT_EQ(index_Nprime(z4), C(256));
  EXPECT_EQ(base_perm_count(z4), C(8));
  EXPECT_EQ(null_set_size(z4, 8, false) / null_set_size(z4, 8, true), C(4));
}

TEST(Indices, BeyondBudgetUseClosure) {
  const RingPtr z9 = ring("Z/9");
  EXPECT_EQ(index_N(z9), C(19683));
  EXPECT_EQ(index_Nprime(z9), C(14348907));
  EXPECT_EQ(base_perm_count(z9), C(1296));
  // The closure path agrees with the direct sweep where both run.
  const RingPtr z4 = ring("Z/4");
  EXPECT_EQ(index_Nprime(z4, EnumOptions{1000, 1}), C(256));
  EXPECT_EQ(perm_pair_count(z4, EnumOptions{1000, 1}), perm_pair_count(z4));
  EXPECT_EQ(base_perm_count(z4, EnumOptions{100, 1}), C(8));
}

TEST(Linear, SpanOrdersMatchEnumeration) {
  for (const char* spec : {"F_2", "F_3", "Z/4", "Z/8", "Z/9", "F_4:x^2+x+1", "Z/2 (+) Z/3", "Z/2 (+) Z/4"}) {
    const RingPtr r = ring(spec);
    EXPECT_EQ(index_via_linear(r, false), index_N(r)) << spec;
    EXPECT_EQ(index_via_linear(r, true), index_Nprime(r)) << spec;
  }
  const RingPtr z4 = ring("Z/4");
  for (std::size_t n : {2U, 4U, 6U, 8U}) {
    EXPECT_EQ(null_set_size_via_linear(z4, n, false), null_set_size(z4, n, false)) << n;
    EXPECT_EQ(null_set_size_via_linear(z4, n, true), null_set_size(z4, n, true)) << n;
  }
  EXPECT_THROW(span_order(function_system(ring("Z/2 (+) Z/3"), 6)), Error);
}

TEST(Linear, SpanOrderOfSmallSystems) {
  const RingPtr z4 = ring("Z/4");
  EXPECT_EQ(span_order(LinearSystem{z4, 2, {{2, 0}, {0, 2}}}), C(4));
  EXPECT_EQ(span_order(LinearSystem{z4, 2, {{1, 2}, {0, 2}}}), C(8));
  EXPECT_EQ(span_order(LinearSystem{z4, 2, {{2, 2}, {2, 2}}}), C(2));
  const RingPtr f3 = ring("F_3");
  EXPECT_EQ(span_order(LinearSystem{f3, 3, {{1, 1, 0}, {2, 2, 0}, {0, 0, 1}}}), C(9));
}

TEST(FunctionCounts, FormulaMatchesOracle) {
  for (const char* spec : {"F_2", "F_3"}) {
    const RingPtr r = ring(spec);
    const DualCounts want = dual_counts(r, 1);
    EXPECT_EQ(count_functions_formula(r, 1), C(want.functions)) << spec;
    EXPECT_EQ(count_functions_enum(r, 1), C(want.functions)) << spec;
    EXPECT_EQ(count_perms_formula(r, 1), C(want.perms)) << spec;
    EXPECT_EQ(count_perms_enum(r, 1), C(want.perms)) << spec;
  }
  const DualCounts f2k2 = dual_counts(ring("F_2"), 2);
  EXPECT_EQ(count_functions_formula(ring("F_2"), 2), C(f2k2.functions));
  EXPECT_EQ(count_perms_formula(ring("F_2"), 2), C(f2k2.perms));
  EXPECT_EQ(f2k2.perms, 32U);
}

TEST(FunctionCounts, FieldOfFour) {
  const RingPtr f4 = ring("F_4:x^2+x+1");
  EXPECT_EQ(count_functions_formula(f4, 1), ipow(C(4), 12));
  EXPECT_EQ(count_perms_formula(f4, 1), C(497664));  // 4! 3^4 4^4
  EXPECT_EQ(count_perms_enum(f4, 1), C(497664));
}

TEST(FunctionCounts, Z4ByClasses) {
  const RingPtr z4 = ring("Z/4");
  EXPECT_EQ(count_functions_formula(z4, 1), C(16384));
  EXPECT_EQ(count_functions_enum(z4, 1, EnumOptions{1000, 1}), C(16384));
  EXPECT_EQ(count_perms_formula(z4, 1), C(2048));
  EXPECT_EQ(count_perms_enum(z4, 1, EnumOptions{1000, 1}), C(2048));
  EXPECT_EQ(count_functions_formula(z4, 2), C(256 * 64 * 64));
}

// Brute-force tables of all representatives, for comparison with the class counts.
TEST(FunctionCounts, NonFieldCountsMatchTableGroup) {
  struct Case {
    const char* spec;
    std::size_t k;
  };
  for (const Case c : {Case{"Z/4", 1}, Case{"Z/2 (+) Z/2", 1}, Case{"Z/2 (+) Z/2", 2}}) {
    const RingPtr r = ring(c.spec);
    const auto group = oracle::dual_table_group(r, c.k, 2 * r->order(), r->order());
    std::size_t perms = 0;
    for (const auto& t : group) perms += oracle::bijective(t) ? 1 : 0;
    EXPECT_EQ(count_functions_formula(r, c.k), C(group.size())) << c.spec << " k=" << c.k;
    EXPECT_EQ(count_functions_enum(r, c.k), C(group.size())) << c.spec << " k=" << c.k;
    EXPECT_EQ(count_perms_formula(r, c.k), C(perms)) << c.spec << " k=" << c.k;
    EXPECT_EQ(count_perms_enum(r, c.k), C(perms)) << c.spec << " k=" << c.k;
  }
}

TEST(FunctionCounts, RequireDual) {
  EXPECT_THROW(count_functions_formula(ring("F_2"), 0), Error);
  EXPECT_THROW(count(ring("F_2"), 0, Quantity::functions, Method::formula), Error);
}

TEST(Stabilizer, OrdersMatchOracle) {
  for (const char* spec : {"F_2", "F_3", "Z/4", "Z/2 (+) Z/3"}) {
    const RingPtr r = ring(spec);
    const StabResult s = stab_order(r, 1, StabMethod::enumeration);
    EXPECT_EQ(s.order, C(stab_by_oracle(r, 1))) << spec;
  }
  EXPECT_EQ(stab_order(ring("F_2"), 1, StabMethod::enumeration).order, C(1));
  EXPECT_EQ(stab_order(ring("F_3"), 1, StabMethod::enumeration).order, C(8));
  EXPECT_EQ(stab_order(ring("Z/4"), 1, StabMethod::enumeration).order, C(4));
}

TEST(Stabilizer, FormulasAndMethodGuards) {
  EXPECT_EQ(stab_order(ring("F_3"), 1, StabMethod::field_formula).order, C(8));
  EXPECT_EQ(stab_order(ring("F_4:x^2+x+1"), 1, StabMethod::field_formula).order, C(81));
  EXPECT_EQ(stab_order(ring("F_4:x^2+x+1"), 1, StabMethod::enumeration).order, C(81));
  EXPECT_EQ(stab_order(ring("Z/4"), 1, StabMethod::index_formula).order, C(4));
  EXPECT_EQ(stab_order(ring("Z/9"), 1, StabMethod::index_formula).order, C(729));
  EXPECT_THROW(stab_order(ring("Z/4"), 1, StabMethod::field_formula), Error);
  EXPECT_THROW(stab_order(ring("F_3"), 1, StabMethod::index_formula), Error);
  EXPECT_THROW(stab_order(ring("Z/4 (+) F_3"), 1, StabMethod::index_formula), Error);
  EXPECT_EQ(default_stab_method(*ring("F_5")), StabMethod::field_formula);
  EXPECT_EQ(default_stab_method(*ring("Z/4 (+) Z/9")), StabMethod::index_formula);
  EXPECT_EQ(default_stab_method(*ring("Z/4 (+) F_3")), StabMethod::enumeration);
}

TEST(Stabilizer, FiberFallbackAgrees) {
  for (const char* spec : {"F_3", "Z/4"}) {
    const RingPtr r = ring(spec);
    const StabResult direct = stab_order(r, 1, StabMethod::enumeration);
    const StabResult fiber = stab_order(r, 1, StabMethod::enumeration, EnumOptions{200, 1});
    EXPECT_EQ(direct.order, fiber.order) << spec;
    EXPECT_EQ(direct.derivative_image_size, fiber.derivative_image_size) << spec;
  }
  EXPECT_EQ(stab_order(ring("Z/9"), 1, StabMethod::enumeration).order, C(729));
}

TEST(Stabilizer, IndependentOfK) {
  for (const char* spec : {"F_2", "F_3", "Z/4"}) {
    EXPECT_TRUE(stab_independence_check(ring(spec), 2)) << spec;
    EXPECT_EQ(C(stab_by_oracle(ring(spec), 2)), C(stab_by_oracle(ring(spec), 1))) << spec;
  }
  EXPECT_TRUE(stab_independence_check(ring("F_2"), 3));
}

// |P_R(R[alpha])| = |P(R)| |Stab| and B = |P(R)| |Stab|.
TEST(Stabilizer, QuotientCardinality) {
  for (const char* spec : {"F_2", "F_3", "Z/4"}) {
    const RingPtr r = ring(spec);
    const Count stab = stab_order(r, 1, StabMethod::enumeration).order;
    EXPECT_EQ(C(base_induced_perms(r)), base_perm_count(r) * stab) << spec;
    EXPECT_EQ(perm_pair_count(r), base_perm_count(r) * stab) << spec;
  }
  EXPECT_EQ(base_induced_perms(ring("F_2")), 2U);
  EXPECT_EQ(base_induced_perms(ring("Z/4")), 32U);
}

// Permutations of R[alpha..] induced by polynomials form a group.
TEST(Stabilizer, PermutationsClosedUnderComposition) {
  const RingPtr f2 = ring("F_2");
  const DualRing d(f2, 1);
  std::set<oracle::Table> perms;
  oracle::for_each_dual_poly(f2, 1, 4, 2, [&](const DualPoly& f) {
    const oracle::Table t = oracle::table(f, d);
    if (oracle::bijective(t)) perms.insert(t);
  });
  ASSERT_EQ(perms.size(), 8U);
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      oracle::Table c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
      EXPECT_TRUE(perms.count(c));
    }
  }
}

TEST(CountReport, RelationsAndSkips) {
  const CountReport f = count(ring("F_2"), 1, Quantity::functions, Method::both);
  EXPECT_EQ(f.formula, C(64));
  EXPECT_EQ(f.oracle, C(64));
  EXPECT_EQ(f.match, true);
  EXPECT_EQ(f.method, "both");

  const CountReport only = count(ring("F_3"), 1, Quantity::perms, Method::formula);
  EXPECT_EQ(only.formula, C(1296));
  EXPECT_FALSE(only.oracle.has_value());
  EXPECT_FALSE(only.match.has_value());

  const CountReport skipped = count(ring("F_3"), 1, Quantity::stab, Method::enumeration, EnumOptions{5, 1});
  EXPECT_EQ(skipped.oracle_skipped, std::optional<std::string>("budget"));

  const CountReport mixed = count(ring("Z/2 (+) F_3"), 1, Quantity::stab, Method::both);
  EXPECT_FALSE(mixed.formula.has_value());
  EXPECT_FALSE(mixed.note.empty());
  EXPECT_EQ(mixed.oracle, C(stab_by_oracle(ring("Z/2 (+) F_3"), 1)));
}

TEST(VerifyIdentities, AllHoldOnSmallRings) {
  for (const char* spec : {"F_2", "F_3", "Z/4", "Z/2 (+) Z/3"}) {
    const auto reports = verify_identities(ring(spec), 1);
    std::map<std::string, CountReport> by;
    for (const auto& r : reports) by.emplace(r.quantity, r);
    EXPECT_TRUE(by.count("index_identity")) << spec;
    EXPECT_TRUE(by.count("perm_pairs")) << spec;
    for (const auto& r : reports) {
      if (r.match) {
        EXPECT_TRUE(*r.match) << spec << " " << r.quantity;
      }
    }
  }
  const auto f3 = verify_identities(ring("F_3"), 1);
  bool contrast = false;
  for (const auto& r : f3) {
    if (r.quantity != "index_vs_stab") continue;
    contrast = true;
    EXPECT_EQ(r.formula, C(27));
    EXPECT_EQ(r.oracle, C(8));
    EXPECT_EQ(r.relation, Relation::differ);
    EXPECT_EQ(r.match, true);
  }
  EXPECT_TRUE(contrast);
}

TEST(Names, ParseAndPrint) {
  EXPECT_EQ(parse_method("enum"), Method::enumeration);
  EXPECT_EQ(method_name(Method::enumeration), "enum");
  EXPECT_EQ(parse_quantity("stab"), Quantity::stab);
  EXPECT_THROW(parse_quantity("orbits"), Error);
  EXPECT_EQ(parse_stab_method(stab_method_name(StabMethod::index_formula)), StabMethod::index_formula);
}
