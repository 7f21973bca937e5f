#include "mono3sat/dimacs.hpp"

#include "mono3sat/bench_gen.hpp"
#include "mono3sat/reducer.hpp"

#include <gtest/gtest.h>

using namespace mono3sat;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    dimacs::parse(text);
  } catch (const dimacs::ParseError &e) {
    return e.line();
  }
  return 0;
}

} // namespace

TEST(DimacsParse, SingleClause) {
  const auto doc = dimacs::parse("p cnf 3 1\n1 -2 3 0\n");
  ASSERT_EQ(doc.formula.size(), 1u);
  EXPECT_EQ(doc.formula[0], Clause::of({1, -2, 3}));
  EXPECT_EQ(doc.declared_vars, 3u);
  EXPECT_EQ(doc.declared_clauses, 1u);
}

TEST(DimacsParse, RejectsDuplicateAndTautology) {
  EXPECT_THROW(dimacs::parse("p cnf 2 1\n1 1 0\n"), dimacs::ParseError);
  EXPECT_THROW(dimacs::parse("p cnf 2 1\n1 -1 0\n"), dimacs::ParseError);
  EXPECT_EQ(error_line("p cnf 2 2\n1 2 0\nc note\n2 -2 0\n"), 4u);
  try {
    dimacs::parse("p cnf 2 1\n1 -1 0\n");
  } catch (const dimacs::ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("tautological"), std::string::npos);
  }
}

TEST(DimacsParse, Errors) {
  EXPECT_EQ(error_line("p cnf x 1\n1 0\n"), 1u);
  EXPECT_EQ(error_line("p dnf 1 1\n1 0\n"), 1u);
  EXPECT_EQ(error_line("1 2 0\n"), 1u);
  EXPECT_EQ(error_line("p cnf 3 1\n1 2\n3\n"), 2u);   // unterminated
  EXPECT_EQ(error_line("p cnf 2 1\n1 3 0\n"), 2u);    // index beyond header
  EXPECT_NE(error_line("p cnf 3 2\n1 2 3 0\n"), 0u);  // count mismatch
  EXPECT_NE(error_line("p cnf 3 0\n1 2 3 0\n"), 0u);
  EXPECT_EQ(error_line("p cnf 3 1\n1 a 0\n"), 2u);
  EXPECT_EQ(error_line("p cnf 3 1\n0\n"), 2u);        // empty clause
  EXPECT_NE(error_line(""), 0u);
  EXPECT_EQ(error_line("p cnf 3 1\np cnf 3 1\n"), 2u);
}

TEST(DimacsParse, WhitespaceCommentsAndLineEndings) {
  const auto doc = dimacs::parse(
      "c leading\r\n\r\n  p   cnf  4 2 \r\n 1\t-2\r\nc inside\r\n  4 0 -3 0\r\n");
  ASSERT_EQ(doc.formula.size(), 2u);
  EXPECT_EQ(doc.formula[0], Clause::of({1, -2, 4}));
  EXPECT_EQ(doc.formula[1], Clause::of({-3}));
  EXPECT_EQ(doc.comments, (std::vector<std::string>{"leading", "inside"}));
}

TEST(DimacsParse, UnusedDeclaredVariablesKept) {
  const auto doc = dimacs::parse("p cnf 10 1\n2 0\n");
  EXPECT_EQ(doc.formula.variable_count(), 10u);
}

TEST(DimacsSerialize, CanonicalForm) {
  EXPECT_EQ(dimacs::serialize(dimacs::make_document(CnfFormula({Clause::of({3, 1, 2})}))),
            "p cnf 3 1\n1 2 3 0\n");
  EXPECT_EQ(dimacs::serialize(dimacs::make_document(CnfFormula{})), "p cnf 0 0\n");
  EXPECT_EQ(dimacs::serialize(dimacs::make_document(CnfFormula({Clause::of({-1})}),
                                                    {"trace 0 gold 0", ""})),
            "c trace 0 gold 0\nc\np cnf 1 1\n-1 0\n");
}

// serialize . parse . serialize == serialize, over generated and reduced formulas.
TEST(DimacsProperties, RoundTripIdempotent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = generate({12, 14, seed});
    for (const auto &doc :
         {dimacs::make_document(f), dimacs::make_document(to_monotone_3sat4(f).formula),
          dimacs::make_document(to_monotone_3sat5(f).formula,
                                to_monotone_3sat5(f).trace.comment_lines())}) {
      const auto once = dimacs::serialize(doc);
      const auto parsed = dimacs::parse(once);
      EXPECT_EQ(parsed.formula, doc.formula);
      EXPECT_EQ(dimacs::serialize(parsed), once);
    }
  }
}
