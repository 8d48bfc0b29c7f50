#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lsug/axioms.hpp"
#include "lsug/error.hpp"
#include "lsug/io.hpp"
#include "support.hpp"

using namespace lsug;
using oracle::Vec;
using testing_support::ops_of;
using testing_support::to_table;

namespace {

FunctionTable h_table() {
  auto l = make_chain(3);
  return FunctionTable::tabulate(l, 2, [](std::span<const Elem> x) -> Elem { return x[0] == 0 && x[1] == 0 ? 0 : 2; });
}

/// Coordinatewise g(0)=0, g(1)=g(2)=2 on the 3-chain.
Elem squash(Elem e) { return e == 0 ? 0 : 2; }

bool oracle_verdict(const oracle::Ops& o, const oracle::Table& f, AxiomKind kind) {
  switch (kind) {
    case AxiomKind::MonotoneBoundary: return oracle::is_aggregation(o, f);
    case AxiomKind::Idempotent: return oracle::idempotent(o, f);
    case AxiomKind::InfHomogeneous: return oracle::inf_homogeneous(o, f, false);
    case AxiomKind::SupHomogeneous: return oracle::sup_homogeneous(o, f, false);
    case AxiomKind::BooleanInfHomogeneous: return oracle::inf_homogeneous(o, f, true);
    case AxiomKind::BooleanSupHomogeneous: return oracle::sup_homogeneous(o, f, true);
    case AxiomKind::ComonotoneSupremal: return oracle::supremal(o, f, oracle::comonotone);
    case AxiomKind::ComonotoneInfimal: return oracle::infimal(o, f, oracle::comonotone);
    case AxiomKind::GComonotoneSupremal: return oracle::supremal(o, f, oracle::g_comonotone);
    case AxiomKind::GComonotoneInfimal: return oracle::infimal(o, f, oracle::g_comonotone);
  }
  return false;
}

/// Identity evaluations each check is expected to perform.
std::uint64_t expected_pairs(const oracle::Ops& o, int n, AxiomKind kind) {
  const std::uint64_t k = o.size, points = oracle::points(o.size, n).size();
  switch (kind) {
    case AxiomKind::Idempotent: return k;
    case AxiomKind::InfHomogeneous:
    case AxiomKind::SupHomogeneous: return k * points;
    case AxiomKind::BooleanInfHomogeneous:
    case AxiomKind::BooleanSupHomogeneous: return k << n;
    case AxiomKind::ComonotoneSupremal:
    case AxiomKind::ComonotoneInfimal: return oracle::unordered_pairs(o, n, oracle::comonotone);
    case AxiomKind::GComonotoneSupremal:
    case AxiomKind::GComonotoneInfimal: return oracle::unordered_pairs(o, n, oracle::g_comonotone);
    default: return 0;
  }
}

/// Lattice/arity combinations small enough for exhaustive aggregation enumeration.
std::vector<std::pair<LatticePtr, std::size_t>> small_domains() {
  return {{make_chain(2), 1}, {make_chain(2), 2}, {make_chain(2), 3}, {make_chain(3), 1},
          {make_chain(3), 2}, {make_chain(4), 1}, {make_boolean(2), 1}, {make_n5(), 1}};
}

}  // namespace

TEST(Axioms, SugenoIntegralsSatisfyEveryAxiom) {
  auto l = make_chain(3);
  for (const auto& m : collect_capacities(l, 2)) {
    const auto f = FunctionTable::of_sugeno(m);
    for (AxiomKind k : kAllAxioms) {
      const auto r = axiom_check(f, k);
      EXPECT_TRUE(r.holds) << to_string(k);
      EXPECT_FALSE(r.witness.has_value());
    }
    const auto report = theorem3_report(f);
    EXPECT_TRUE(report.all_conditions());
    EXPECT_TRUE(report.theorem3_consistent);
  }
}

TEST(Axioms, FunctionH) {
  const auto h = h_table();
  const auto& l = *h.lattice();
  EXPECT_TRUE(axiom_check(h, AxiomKind::MonotoneBoundary).holds);
  EXPECT_TRUE(axiom_check(h, AxiomKind::ComonotoneSupremal).holds);
  EXPECT_FALSE(axiom_check(h, AxiomKind::SupHomogeneous).holds);

  const auto idem = axiom_check(h, AxiomKind::Idempotent);
  ASSERT_FALSE(idem.holds);
  EXPECT_EQ(*idem.witness->constant, 1);
  EXPECT_EQ(idem.witness->lhs, 2);
  EXPECT_EQ(idem.witness->rhs, 1);
  EXPECT_EQ(idem.witness->describe(l, AxiomKind::Idempotent), "c=1: f(1,1) = 2 != 1");

  // h also commutes with meets of comonotone and g-comonotone pairs: a
  // nonzero meet of two such vectors is never the origin unless one factor is.
  const auto o = oracle::chain(3);
  const auto th = to_table(h);
  EXPECT_TRUE(oracle::infimal(o, th, oracle::comonotone));
  EXPECT_TRUE(oracle::infimal(o, th, oracle::g_comonotone));
  EXPECT_TRUE(axiom_check(h, AxiomKind::ComonotoneInfimal).holds);
  EXPECT_TRUE(axiom_check(h, AxiomKind::GComonotoneInfimal).holds);

  const auto report = theorem3_report(h);
  EXPECT_FALSE(report.condition(Condition::InfHomAndGComSupremal));
  EXPECT_FALSE(report.condition(Condition::SupHomAndGComInfimal));
  EXPECT_FALSE(report.condition(Condition::InfHomAndComSupremal));
  EXPECT_FALSE(report.condition(Condition::SupHomAndComInfimal));
  EXPECT_TRUE(report.condition(Condition::ComSupremalAndComInfimal));
  EXPECT_TRUE(report.condition(Condition::GComSupremalAndGComInfimal));
  EXPECT_FALSE(report.condition(Condition::BooleanSupAndBooleanInf));
  EXPECT_FALSE(report.theorem3_consistent);
}

TEST(Axioms, ProjectionSatisfiesEverything) {
  auto l = make_boolean(2);
  const auto f = FunctionTable::tabulate(l, 2, [](std::span<const Elem> x) { return x[0]; });
  for (AxiomKind k : kAllAxioms) EXPECT_TRUE(axiom_check(f, k).holds) << to_string(k);
}

TEST(Axioms, ConstantTopIsNotAnAggregation) {
  auto l = make_chain(3);
  const auto f = FunctionTable::tabulate(l, 2, [](std::span<const Elem>) -> Elem { return 2; });
  const auto r = axiom_check(f, AxiomKind::MonotoneBoundary);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.witness->y.empty());
  try {
    theorem3_report(f);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAggregation);
    EXPECT_NE(std::string(e.what()).find("boundary"), std::string::npos) << e.what();
  }
  // Boundaries hold but (0,1) <= (1,1) is mapped to 2 > 1.
  const auto bumpy = FunctionTable::tabulate(l, 2, [](std::span<const Elem> x) -> Elem {
    if (x[0] == 0 && x[1] == 1) return 2;
    if (x[0] == 1 && x[1] == 1) return 1;
    return std::max(x[0], x[1]);
  });
  const auto m = axiom_check(bumpy, AxiomKind::MonotoneBoundary);
  ASSERT_FALSE(m.holds);
  ASSERT_EQ(m.witness->y.size(), 2u);
  const auto o = oracle::chain(3);
  const Vec wx(m.witness->x.begin(), m.witness->x.end()), wy(m.witness->y.begin(), m.witness->y.end());
  EXPECT_TRUE(oracle::vec_leq(o, wx, wy));
  EXPECT_FALSE(o.leq(m.witness->lhs, m.witness->rhs));
  EXPECT_FALSE(oracle::is_aggregation(o, to_table(bumpy)));
}

TEST(Enumeration, AggregationCountsMatchOracle) {
  EXPECT_EQ(collect_aggregations(make_chain(2), 1).size(), 1u);
  EXPECT_EQ(collect_aggregations(make_chain(3), 1).size(), 3u);
  for (const auto& [l, n] : small_domains()) {
    SCOPED_TRACE(l->name() + " n=" + std::to_string(n));
    const auto o = ops_of(*l);
    const auto got = collect_aggregations(l, n);
    const auto expected = oracle::all_aggregations(o, static_cast<int>(n));
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) ASSERT_EQ(to_table(got[i]).values, expected[i].values);
  }
}

TEST(Enumeration, ExactlyNineSatisfyBooleanHomogeneityOnThreeChain) {
  std::size_t viii = 0;
  for (const auto& f : collect_aggregations(make_chain(3), 2))
    viii += theorem3_report(f).condition(Condition::BooleanSupAndBooleanInf);
  EXPECT_EQ(viii, 9u);
}

TEST(Enumeration, GuardAndSampling) {
  try {
    collect_aggregations(make_chain(4), 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EnumerationTooLarge);
    EXPECT_NE(std::string(e.what()).find("16"), std::string::npos) << e.what();
  }
  AggregationEnumeration opts;
  opts.seed = 7;
  opts.count = 40;
  for (const auto& [l, n] : std::vector<std::pair<LatticePtr, std::size_t>>{
           {make_boolean(2), 2}, {make_chain(5), 3}, {make_product({make_chain(2), make_chain(3)}), 2}}) {
    const auto a = collect_aggregations(l, n, opts), b = collect_aggregations(l, n, opts);
    ASSERT_EQ(a.size(), 40u);
    std::set<std::vector<Elem>> distinct;
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].values(), b[i].values());
      EXPECT_TRUE(oracle::is_aggregation(ops_of(*l), to_table(a[i])));
      distinct.insert(a[i].values());
    }
    EXPECT_GT(distinct.size(), 1u);
  }
}

TEST(Axioms, VerdictsPairCountsAndWitnessesMatchOracle) {
  for (const auto& [l, n] : small_domains()) {
    SCOPED_TRACE(l->name() + " n=" + std::to_string(n));
    const auto o = ops_of(*l);
    for (const auto& f : collect_aggregations(l, n)) {
      const auto tf = to_table(f);
      for (AxiomKind k : kAllAxioms) {
        EvaluationTally tally;
        const auto r = axiom_check(f, k, &tally);
        ASSERT_EQ(r.holds, oracle_verdict(o, tf, k)) << to_string(k);
        ASSERT_EQ(r.pairs_checked, tally.evaluations) << to_string(k);
        if (k != AxiomKind::MonotoneBoundary)
          ASSERT_EQ(r.pairs_checked, expected_pairs(o, static_cast<int>(n), k)) << to_string(k);
        if (r.holds) continue;
        const auto& w = *r.witness;
        const Vec x(w.x.begin(), w.x.end()), y(w.y.begin(), w.y.end());
        ASSERT_NE(w.lhs, w.rhs);
        switch (k) {
          case AxiomKind::InfHomogeneous:
          case AxiomKind::BooleanInfHomogeneous:
            ASSERT_EQ(w.lhs, oracle::eval(o, tf, oracle::vmeet(o, oracle::constant(tf.n, *w.constant), x)));
            ASSERT_EQ(w.rhs, o.meet[*w.constant][oracle::eval(o, tf, x)]);
            break;
          case AxiomKind::SupHomogeneous:
          case AxiomKind::BooleanSupHomogeneous:
            ASSERT_EQ(w.lhs, oracle::eval(o, tf, oracle::vjoin(o, oracle::constant(tf.n, *w.constant), x)));
            ASSERT_EQ(w.rhs, o.join[*w.constant][oracle::eval(o, tf, x)]);
            break;
          case AxiomKind::ComonotoneSupremal:
          case AxiomKind::GComonotoneSupremal:
            ASSERT_TRUE(k == AxiomKind::ComonotoneSupremal ? oracle::comonotone(o, x, y) : oracle::g_comonotone(o, x, y));
            ASSERT_LE(x, y);
            ASSERT_EQ(w.lhs, oracle::eval(o, tf, oracle::vjoin(o, x, y)));
            ASSERT_EQ(w.rhs, o.join[oracle::eval(o, tf, x)][oracle::eval(o, tf, y)]);
            break;
          case AxiomKind::ComonotoneInfimal:
          case AxiomKind::GComonotoneInfimal:
            ASSERT_TRUE(k == AxiomKind::ComonotoneInfimal ? oracle::comonotone(o, x, y) : oracle::g_comonotone(o, x, y));
            ASSERT_EQ(w.lhs, oracle::eval(o, tf, oracle::vmeet(o, x, y)));
            ASSERT_EQ(w.rhs, o.meet[oracle::eval(o, tf, x)][oracle::eval(o, tf, y)]);
            break;
          default: break;
        }
      }
    }
  }
}

TEST(Axioms, HomogeneityImpliesIdempotency) {
  for (const auto& [l, n] : small_domains())
    for (const auto& f : collect_aggregations(l, n)) {
      const bool idem = axiom_check(f, AxiomKind::Idempotent).holds;
      if (axiom_check(f, AxiomKind::InfHomogeneous).holds || axiom_check(f, AxiomKind::SupHomogeneous).holds)
        ASSERT_TRUE(idem);
      if (axiom_check(f, AxiomKind::BooleanInfHomogeneous).holds &&
          axiom_check(f, AxiomKind::BooleanSupHomogeneous).holds)
        ASSERT_TRUE(idem);
    }
}

TEST(Axioms, ImplicationChainForIdempotentTables) {
  std::size_t idempotent_tables = 0;
  for (const auto& [l, n] : small_domains())
    for (const auto& f : collect_aggregations(l, n)) {
      auto holds = [&](AxiomKind k) { return axiom_check(f, k).holds; };
      // Comonotone pairs are g-comonotone, so this step needs nothing else.
      if (holds(AxiomKind::GComonotoneSupremal)) ASSERT_TRUE(holds(AxiomKind::ComonotoneSupremal));
      if (holds(AxiomKind::GComonotoneInfimal)) ASSERT_TRUE(holds(AxiomKind::ComonotoneInfimal));
      if (!holds(AxiomKind::Idempotent)) continue;
      ++idempotent_tables;
      if (holds(AxiomKind::ComonotoneSupremal)) ASSERT_TRUE(holds(AxiomKind::BooleanSupHomogeneous));
      if (holds(AxiomKind::ComonotoneInfimal)) ASSERT_TRUE(holds(AxiomKind::BooleanInfHomogeneous));
    }
  EXPECT_GT(idempotent_tables, 0u);
}

TEST(Axioms, ComonotoneSupremalWithoutIdempotencyBreaksBooleanHomogeneity) {
  // Both h and the squashed first projection are join-compatible on comonotone
  // pairs without being Boolean homogeneous.
  const auto h = h_table();
  EXPECT_TRUE(axiom_check(h, AxiomKind::ComonotoneSupremal).holds);
  EXPECT_FALSE(axiom_check(h, AxiomKind::BooleanSupHomogeneous).holds);

  auto l = make_chain(3);
  const auto g1 = FunctionTable::tabulate(l, 2, [](std::span<const Elem> x) { return squash(x[0]); });
  const auto o = oracle::chain(3);
  const auto t = to_table(g1);
  EXPECT_TRUE(oracle::supremal(o, t, oracle::g_comonotone) && oracle::infimal(o, t, oracle::g_comonotone));
  EXPECT_FALSE(oracle::sup_homogeneous(o, t, true));
  EXPECT_FALSE(oracle::inf_homogeneous(o, t, true));
  const auto report = theorem3_report(g1);
  EXPECT_TRUE(report.condition(Condition::ComSupremalAndComInfimal));
  EXPECT_TRUE(report.condition(Condition::GComSupremalAndGComInfimal));
  EXPECT_FALSE(report.condition(Condition::BooleanSupAndBooleanInf));
  EXPECT_FALSE(report.condition(Condition::InfHomAndGComSupremal));
  EXPECT_FALSE(report.theorem3_consistent);
}

TEST(Axioms, CompositionWithNonSurjectiveEndomorphism) {
  auto l = make_chain(3);
  const auto o = oracle::chain(3);
  // squash preserves bounds and joins but misses the middle element.
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) EXPECT_EQ(squash(l->join(a, b)), l->join(squash(a), squash(b)));
  for (const auto& m : collect_capacities(l, 2)) {
    const auto su = FunctionTable::of_sugeno(m);
    const auto composite = FunctionTable::tabulate(l, 2, [&](std::span<const Elem> x) {
      const std::array<Elem, 2> gx{squash(x[0]), squash(x[1])};
      return su(std::span<const Elem>(gx));
    });
    EXPECT_TRUE(axiom_check(composite, AxiomKind::ComonotoneSupremal).holds);
    EXPECT_TRUE(oracle::supremal(o, to_table(composite), oracle::comonotone));
    EXPECT_FALSE(axiom_check(composite, AxiomKind::Idempotent).holds);
  }
}

TEST(Axioms, ParseNamesRoundTrip) {
  for (AxiomKind k : kAllAxioms) EXPECT_EQ(parse_axiom_kind(to_string(k)), k);
  EXPECT_THROW(parse_axiom_kind("bogus"), Error);
  EXPECT_EQ(condition_label(Condition::InfHomAndGComSupremal), "ii");
  EXPECT_EQ(condition_label(Condition::BooleanSupAndBooleanInf), "viii");
}
