#include "mono3sat/reducer.hpp"

#include "mono3sat/bench_gen.hpp"
#include "mono3sat/dimacs.hpp"
#include "mono3sat/oracle.hpp"
#include "mono3sat/validator.hpp"
#include "support/brute_force.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace mono3sat;

namespace {

/// The reduced formula with every original variable pinned to its value in
/// `model` by unit clauses.
CnfFormula pinned(const CnfFormula &reduced, const std::vector<bool> &model, std::uint32_t n) {
  auto clauses = reduced.clauses();
  for (std::uint32_t v = 1; v <= n; ++v)
    clauses.push_back(Clause{Literal(Variable(v), model[v])});
  return CnfFormula(std::move(clauses), reduced.variable_count());
}

std::set<Variable> originals(std::uint32_t n) {
  std::set<Variable> s;
  for (std::uint32_t v = 1; v <= n; ++v)
    s.insert(Variable(v));
  return s;
}

void check_trace_partition(const Reduction &r, std::uint32_t original_vars) {
  std::set<std::size_t> produced;
  std::set<std::uint32_t> allocated;
  for (const auto &s : r.trace.steps) {
    for (auto i : s.produced)
      EXPECT_TRUE(produced.insert(i).second) << "clause " << i << " attributed twice";
    for (auto v : s.allocated) {
      EXPECT_GT(v.index(), original_vars);
      EXPECT_TRUE(allocated.insert(v.index()).second);
    }
  }
  EXPECT_EQ(allocated.size(), r.formula.variable_count() - original_vars);
  EXPECT_EQ(r.trace.original_variable_ceiling, original_vars);
}

} // namespace

TEST(EliminateMixed, IdentityWithoutMixedClauses) {
  const CnfFormula f({Clause::of({1, 2, 3}), Clause::of({-1, -2, -4})});
  const auto r = eliminate_mixed(f);
  EXPECT_EQ(r.formula, f);
  EXPECT_TRUE(r.trace.steps.empty());
}

TEST(EliminateMixed, SingleClause) {
  const auto r = eliminate_mixed(CnfFormula({Clause::of({1, -2, 3})}));
  EXPECT_EQ(r.formula.clauses(), (std::vector<Clause>{Clause::of({1, 3, 4}), Clause::of({-2, -4})}));
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].rule, Rule::Gold);
  EXPECT_EQ(r.trace.steps[0].produced, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.trace.comment_lines(),
            (std::vector<std::string>{"trace 0 gold 0", "trace 1 gold 0"}));
}

TEST(EliminateMixed, InPlaceOrder) {
  const CnfFormula f({Clause::of({1, 2, 3}), Clause::of({-1, 4, -5}), Clause::of({2, 4, 5})});
  const auto r = eliminate_mixed(f);
  ASSERT_EQ(r.formula.size(), 4u);
  EXPECT_EQ(r.formula[0], f[0]);
  EXPECT_EQ(r.formula[1], Clause::of({-1, -5, -6}));
  EXPECT_EQ(r.formula[2], Clause::of({4, 6}));
  EXPECT_EQ(r.formula[3], f[2]);
}

TEST(EliminateMixed, RejectsNon3Sat4Input) {
  EXPECT_THROW(eliminate_mixed(CnfFormula({Clause::of({1, 2})})), ReductionError);
  EXPECT_THROW(to_monotone_3sat4(CnfFormula({Clause::of({1, 2})})), ReductionError);
  EXPECT_THROW(to_monotone_3sat5(CnfFormula({Clause::of({1, 2, 3, 4})})), ReductionError);
}

TEST(EliminateMixed, OccurrencesAndEquisat) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto f = generate({10, static_cast<std::uint32_t>(1 + seed % 13), seed});
    const auto r = eliminate_mixed(f);
    const OccurrenceTable before(f), after(r.formula);
    for (std::uint32_t v = 1; v <= f.variable_count(); ++v)
      EXPECT_EQ(before.total(Variable(v)), after.total(Variable(v)));
    for (std::uint32_t v = f.variable_count() + 1; v <= r.formula.variable_count(); ++v)
      EXPECT_EQ(after.total(Variable(v)), 2u);
    EXPECT_EQ(naive::brute_sat(f), naive::brute_sat(r.formula)) << "seed " << seed;
    check_trace_partition(r, f.variable_count());
  }
}

TEST(ToMono3Sat5, SingleClauseCounts) {
  const auto r = to_monotone_3sat5(CnfFormula({Clause::of({1, -2, 3})}));
  EXPECT_EQ(r.formula.size(), 20u);
  EXPECT_EQ(r.formula.variable_count(), 22u);
  const auto c = to_monotone_3sat5(CnfFormula({Clause::of({1, -2, 3})}), R3Mode::Compact);
  EXPECT_EQ(c.formula.size(), 18u);
  EXPECT_EQ(c.formula.variable_count(), 20u);
  EXPECT_TRUE(satisfies(r.formula, ProfileName::Mono3Sat5));
  // The gold 3-clause keeps its attribution; the r3 step owns the rest.
  ASSERT_EQ(r.trace.steps.size(), 2u);
  EXPECT_EQ(r.trace.steps[0].produced, std::vector<std::size_t>{0});
  EXPECT_EQ(r.trace.steps[1].produced.size(), 19u);
  EXPECT_EQ(r.trace.steps[1].rule, Rule::R3);
}

TEST(ToMono3Sat4, SingleClauseCounts) {
  const auto r = to_monotone_3sat4(CnfFormula({Clause::of({1, -2, 3})}));
  EXPECT_EQ(r.formula.size(), 27u);
  EXPECT_EQ(r.formula.variable_count(), 25u);
  // {¬x2, ¬u} widens with ¬z and pulls in a force-true gadget.
  EXPECT_EQ(r.formula[1], Clause::of({-2, -4, -7}));
  EXPECT_EQ(r.trace.steps[1].rule, Rule::GadgetTrue);
  const OccurrenceTable t(r.formula);
  EXPECT_EQ(t.total(Variable(7)), 4u);
  EXPECT_TRUE(satisfies(r.formula, ProfileName::Mono3Sat4));
}

TEST(ToMono3Sat4, PositivePairGetsForceFalseGadget) {
  const auto r = to_monotone_3sat4(CnfFormula({Clause::of({-1, -2, 3})}));
  EXPECT_EQ(r.formula[1], Clause::of({3, 4, 7}));
  EXPECT_EQ(r.trace.steps[1].rule, Rule::GadgetFalse);
  EXPECT_TRUE(solve_dpll(r.formula).satisfiable);
}

TEST(RelaxedEntry, AcceptsMono23Input) {
  // x1 != x2, x2 != x3, x1 != x3 has no solution.
  const CnfFormula odd_cycle({Clause::of({1, 2}), Clause::of({-1, -2}), Clause::of({2, 3}),
                              Clause::of({-2, -3}), Clause::of({1, 3}), Clause::of({-1, -3})});
  EXPECT_THROW(to_monotone_3sat4(odd_cycle), ReductionError);
  const auto five = replace_two_clauses_r3(odd_cycle);
  const auto four = replace_two_clauses_gadget(odd_cycle);
  EXPECT_TRUE(satisfies(five.formula, ProfileName::Mono3Sat5));
  EXPECT_TRUE(satisfies(four.formula, ProfileName::Mono3Sat4));
  EXPECT_FALSE(naive::brute_sat(odd_cycle));
  EXPECT_FALSE(solve_dpll(five.formula).satisfiable);
  EXPECT_FALSE(solve_dpll(four.formula).satisfiable);
  EXPECT_THROW(replace_two_clauses_r3(CnfFormula({Clause::of({1, -2})})), ReductionError);
}

TEST(Pipelines, Determinism) {
  const auto f = generate({8, 10, 77});
  EXPECT_EQ(dimacs::serialize(dimacs::make_document(to_monotone_3sat4(f).formula)),
            dimacs::serialize(dimacs::make_document(to_monotone_3sat4(f).formula)));
  EXPECT_EQ(to_monotone_3sat5(f).trace.comment_lines(), to_monotone_3sat5(f).trace.comment_lines());
}

// Extension: every model of the original extends to the reduced formula.
// Restriction: the reduced witness, cut back to original variables, is a model.
TEST(Pipelines, ExtensionAndRestriction) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto f = generate({6, static_cast<std::uint32_t>(2 + seed % 7), 1000 + seed});
    const std::uint32_t n = f.variable_count();
    for (const auto &r : {eliminate_mixed(f), to_monotone_3sat5(f),
                          to_monotone_3sat5(f, R3Mode::Compact), to_monotone_3sat4(f)}) {
      check_trace_partition(r, n);
      naive::for_each_assignment(n, [&](const std::vector<bool> &v) {
        if (naive::naive_eval(f.clauses(), v))
          EXPECT_TRUE(solve_dpll(pinned(r.formula, v, n)).satisfiable) << "seed " << seed;
        return true;
      });
      const auto verdict = solve_dpll(r.formula);
      ASSERT_EQ(verdict.satisfiable, naive::brute_sat(f));
      if (verdict.satisfiable)
        EXPECT_TRUE(evaluate(f, restrict_model(*verdict.witness, originals(n))));
    }
  }
}
