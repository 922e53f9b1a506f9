#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <variant>
#include <vector>

#include "rect_atg/logic.hpp"
#include "rect_atg/parser.hpp"
#include "rect_atg/rectangle.hpp"
#include "rect_atg/semantics.hpp"

namespace rect_atg {

// not(l1 v ... v ln), kept flattened as the conjunction of the negated
// literals.
struct LiteralConjunction {
  std::vector<Literal> literals;
  friend bool operator==(const LiteralConjunction&, const LiteralConjunction&) = default;
};

// not(C1 & ... & Ck), kept unexpanded.
struct NegatedConjunction {
  ClauseSet clauses;
  friend bool operator==(const NegatedConjunction&, const NegatedConjunction&) = default;
};

using Conclusion = std::variant<LiteralConjunction, NegatedConjunction>;

// The clauses a conclusion denies. For a literal conjunction this is the one
// clause of the complemented literals.
ClauseSet negated_clauses(const Conclusion& conclusion);

// premises |- conclusion, where premises and hypothesis_clauses partition the
// rectangle built from `generators`, and removed_columns are the columns of
// the hypothesis.
struct Theorem {
  GenerationSet generators;
  std::vector<std::size_t> removed_columns;  // ascending
  ClauseSet premises;
  ClauseSet hypothesis_clauses;
  Conclusion conclusion;

  friend bool operator==(const Theorem&, const Theorem&) = default;
};

// Premises: every column but the first. Conclusion: the complement of each
// generator, conjoined.
Theorem generate_theorem(const GenerationSet& g, std::size_t max_level = kDefaultMaxLevel);

// Hypothesis: the selected columns. One column gives a flattened literal
// conjunction, more give not(H1 & ... & Hk). Throws Error(kEmptyHypothesis)
// and Error(kIndexOutOfRange).
Theorem generate_theorem_with_partition(const GenerationSet& g, const std::set<std::size_t>& columns,
                                        std::size_t max_level = kDefaultMaxLevel);

// Same partition, over an already constructed rectangle.
Theorem partition_rectangle(const Rectangle& r, const std::set<std::size_t>& columns);

// Whether the premises entail the conclusion, checked by refuting the
// premises together with the clauses the conclusion denies.
bool verify_theorem(const Theorem& t, const OracleLimits& limits = {});

// For each partition, (AND A) -> not(AND H) must be a tautology. Tautologies
// are pairwise equivalent, so all theorems of the rectangle coincide.
bool check_mutual_equivalence(const GenerationSet& g,
                              std::span<const std::set<std::size_t>> partitions,
                              const OracleLimits& limits = {});

}  // namespace rect_atg
