#include "rect_atg/rectangle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rect_atg/error.hpp"
#include "test_support.hpp"

namespace rect_atg {
namespace {

using testing::clause;
using testing::gen;
using testing::lit;

std::vector<std::vector<std::string>> rows_of(const Rectangle& r) {
  std::vector<std::vector<std::string>> rows(r.height());
  for (std::size_t i = 0; i < r.height(); ++i) {
    for (std::size_t j = 0; j < r.length(); ++j) rows[i].push_back(to_string(r.at(i, j)));
  }
  return rows;
}

// Doubling on rendered rows, written from the step description alone.
std::vector<std::vector<std::string>> doubling_oracle(const GenerationSet& g) {
  std::vector<std::vector<std::string>> rows;
  for (const Literal& x : g) {
    for (auto& row : rows) {
      const auto copy = row;
      row.insert(row.end(), copy.begin(), copy.end());
    }
    const std::size_t half = rows.empty() ? 1 : rows.front().size() / 2;
    std::vector<std::string> last(half, to_string(x));
    last.resize(2 * half, to_string(negate_literal(x)));
    rows.push_back(std::move(last));
  }
  return rows;
}

TEST(RectangleTest, PropositionalFixture) {
  const GenerationSet g = gen("w, x, y, z");
  const auto expected = testing::split_rows(testing::read_data("example_propositional.txt"));
  ASSERT_EQ(expected.size(), 4U);
  ASSERT_EQ(expected.front().size(), 16U);
  for (const Rectangle& r : {construct_naive(g), construct_from_template(g)}) {
    EXPECT_EQ(r.length(), 16U);
    EXPECT_EQ(rows_of(r), expected);
  }
}

TEST(RectangleTest, FirstOrderFixture) {
  const GenerationSet g = gen("P1(a), P2(f(x)), P3(g(y,a))");
  const auto expected = testing::split_rows(testing::read_data("example_first_order.txt"));
  for (const Rectangle& r : {construct_naive(g), construct_from_template(g)}) {
    EXPECT_EQ(r.length(), 8U);
    EXPECT_EQ(rows_of(r), expected);
  }
}

TEST(RectangleTest, SmallCases) {
  const Rectangle one = construct_naive(gen("p"));
  EXPECT_EQ(one.clauses(), (ClauseSet{clause({"p"}), clause({"~p"})}));

  const Rectangle two = construct_from_template(gen("p, q"));
  EXPECT_EQ(two.clauses(), (ClauseSet{clause({"p", "q"}), clause({"~p", "q"}), clause({"p", "~q"}),
                                      clause({"~p", "~q"})}));

  const Rectangle neg = construct_from_template(gen("~p"));
  EXPECT_EQ(neg.clauses(), (ClauseSet{clause({"~p"}), clause({"p"})}));
  EXPECT_EQ(neg, construct_naive(gen("~p")));
}

TEST(RectangleTest, RemoveClauses) {
  const Rectangle r = construct_from_template(gen("p, q"));
  EXPECT_EQ(remove_clauses(r, {0}), (ClauseSet{clause({"~p", "q"}), clause({"p", "~q"}), clause({"~p", "~q"})}));
  EXPECT_TRUE(remove_clauses(r, {0, 1, 2, 3}).empty());
  EXPECT_EQ(remove_clauses(r, {}), r.clauses());
  try {
    remove_clauses(r, {4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
  EXPECT_THROW(r.at(2, 0), Error);
  EXPECT_THROW(r.column(4), Error);
}

TEST(RectangleTest, RandomDualConstruction) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 100; ++i) {
    const GenerationSet g = testing::random_generation_set(rng, 1 + rng() % 10);
    const Rectangle naive = construct_naive(g);
    const Rectangle tmpl = construct_from_template(g);
    ASSERT_EQ(naive, tmpl);
    ASSERT_EQ(rows_of(naive), doubling_oracle(g));
  }
}

TEST(RectangleTest, Invariants) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const GenerationSet g = testing::random_generation_set(rng, 1 + rng() % 8);
    const Rectangle r = construct_from_template(g);
    ASSERT_EQ(r.length(), std::size_t{1} << g.size());
    EXPECT_EQ(r.clause(0), Clause(std::vector<Literal>(g.begin(), g.end())));
    std::set<std::vector<std::string>> distinct;
    for (std::size_t j = 0; j < r.length(); ++j) {
      std::vector<std::string> col;
      for (std::size_t k = 0; k < r.height(); ++k) {
        const Literal& cell = r.at(k, j);
        EXPECT_EQ(cell.atom(), g[k].atom());
        EXPECT_EQ(cell == g[k], ((j >> k) & 1U) == 0);
        EXPECT_EQ(r.column(j)[k], cell);
        col.push_back(to_string(cell));
      }
      distinct.insert(col);
    }
    EXPECT_EQ(distinct.size(), r.length());
  }
}

TEST(RectangleTest, SizeCap) {
  std::vector<Literal> lits;
  for (int i = 0; i < 21; ++i) lits.emplace_back(Atom::proposition("p" + std::to_string(i)));
  const GenerationSet big = validate_generation_set(lits);
  for (auto build : {construct_naive, construct_from_template}) {
    try {
      build(big, kDefaultMaxLevel);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSizeCap);
    }
  }
  EXPECT_THROW(construct_from_template(gen("p, q, r"), 2), Error);
  EXPECT_NO_THROW(construct_from_template(gen("p, q, r"), 3));
}

}  // namespace
}  // namespace rect_atg
