#include "rect_atg/theorem.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rect_atg/error.hpp"
#include "test_support.hpp"

namespace rect_atg {
namespace {

using testing::clause;
using testing::gen;
using testing::lit;

TEST(TheoremTest, CanonicalTwoAtoms) {
  const Theorem t = generate_theorem(gen("p, q"));
  EXPECT_EQ(t.premises, (ClauseSet{clause({"~p", "q"}), clause({"p", "~q"}), clause({"~p", "~q"})}));
  EXPECT_EQ(t.removed_columns, std::vector<std::size_t>{0});
  EXPECT_EQ(t.hypothesis_clauses, ClauseSet{clause({"p", "q"})});
  EXPECT_EQ(t.conclusion, Conclusion(LiteralConjunction{{lit("~p"), lit("~q")}}));
  EXPECT_TRUE(verify_theorem(t));
}

TEST(TheoremTest, UnitCase) {
  const Theorem t = generate_theorem(gen("p"));
  EXPECT_EQ(t.premises, ClauseSet{clause({"~p"})});
  EXPECT_EQ(t.conclusion, Conclusion(LiteralConjunction{{lit("~p")}}));
  EXPECT_TRUE(verify_theorem(t));
}

TEST(TheoremTest, FourAtomCanonical) {
  const Theorem t = generate_theorem(gen("w, x, y, z"));
  EXPECT_EQ(t.premises.size(), 15U);
  const auto rows = testing::split_rows(testing::read_data("example_propositional.txt"));
  for (std::size_t j = 1; j < 16; ++j) {
    std::vector<Literal> col;
    for (const auto& row : rows) col.push_back(lit(row[j]));
    EXPECT_EQ(t.premises[j - 1], Clause(col));
  }
  EXPECT_EQ(t.conclusion, Conclusion(LiteralConjunction{{lit("~w"), lit("~x"), lit("~y"), lit("~z")}}));
  EXPECT_TRUE(verify_theorem(t));
}

TEST(TheoremTest, MultiColumnPartitions) {
  const Theorem t = generate_theorem_with_partition(gen("p, q"), {0, 1});
  EXPECT_EQ(t.premises, (ClauseSet{clause({"p", "~q"}), clause({"~p", "~q"})}));
  EXPECT_EQ(t.conclusion, Conclusion(NegatedConjunction{{clause({"p", "q"}), clause({"~p", "q"})}}));
  EXPECT_TRUE(verify_theorem(t));

  const Theorem all = generate_theorem_with_partition(gen("p, q"), {0, 1, 2, 3});
  EXPECT_TRUE(all.premises.empty());
  EXPECT_TRUE(verify_theorem(all));
}

TEST(TheoremTest, Errors) {
  try {
    generate_theorem_with_partition(gen("p, q"), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyHypothesis);
  }
  try {
    generate_theorem_with_partition(gen("p, q"), {4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
}

TEST(TheoremTest, PartitionInvariantAndPremiseDeletion) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    const GenerationSet g = testing::random_generation_set(rng, 1 + rng() % 4);
    const Rectangle r = construct_from_template(g);
    std::set<std::size_t> cols;
    const std::size_t k = 1 + rng() % r.length();
    while (cols.size() < k) cols.insert(rng() % r.length());
    const Theorem t = generate_theorem_with_partition(g, cols);

    // premises and hypothesis partition the rectangle.
    ASSERT_EQ(t.premises.size() + t.hypothesis_clauses.size(), r.length());
    std::multiset<std::string> lhs;
    std::multiset<std::string> rhs;
    for (const Clause& c : t.premises) lhs.insert(to_string(c));
    for (const Clause& c : t.hypothesis_clauses) lhs.insert(to_string(c));
    for (const Clause& c : r.clauses()) rhs.insert(to_string(c));
    EXPECT_EQ(lhs, rhs);

    EXPECT_TRUE(verify_theorem(t));
    for (std::size_t d = 0; d < t.premises.size(); ++d) {
      Theorem weaker = t;
      weaker.premises.erase(weaker.premises.begin() + static_cast<std::ptrdiff_t>(d));
      EXPECT_FALSE(verify_theorem(weaker));
    }
  }
}

TEST(TheoremTest, FreshAtomConclusionFails) {
  Theorem t = generate_theorem(gen("p, q"));
  t.conclusion = LiteralConjunction{{lit("fresh")}};
  EXPECT_FALSE(verify_theorem(t));
}

TEST(TheoremTest, ImplicationOracleAgrees) {
  // Independent check of (AND A) -> not(AND H) via the text-keyed model counter:
  // the implication is a tautology iff A and H together have no model.
  for (std::size_t n = 1; n <= 3; ++n) {
    const GenerationSet g = testing::patterned_set(n, n, true);
    const Rectangle r = construct_from_template(g);
    std::vector<std::set<std::size_t>> partitions;
    for (std::size_t j = 0; j < r.length(); ++j) partitions.push_back({j});
    EXPECT_TRUE(check_mutual_equivalence(g, partitions));
    for (const auto& p : partitions) {
      const Theorem t = partition_rectangle(r, p);
      ClauseSet both = t.premises;
      both.insert(both.end(), t.hypothesis_clauses.begin(), t.hypothesis_clauses.end());
      EXPECT_EQ(testing::count_models(both), 0U);
    }
  }
  EXPECT_TRUE(check_mutual_equivalence(gen("p"), std::vector<std::set<std::size_t>>{{0}, {1}}));
  EXPECT_TRUE(check_mutual_equivalence(gen("p, q"), std::vector<std::set<std::size_t>>{{0}, {1}, {0, 1}}));
}

}  // namespace
}  // namespace rect_atg
