#include "rect_atg/theorem.hpp"

#include "rect_atg/error.hpp"

namespace rect_atg {

ClauseSet negated_clauses(const Conclusion& conclusion) {
  if (const auto* conj = std::get_if<LiteralConjunction>(&conclusion)) {
    std::vector<Literal> denied;
    denied.reserve(conj->literals.size());
    for (const Literal& l : conj->literals) denied.push_back(negate_literal(l));
    return ClauseSet{Clause(std::move(denied))};
  }
  return std::get<NegatedConjunction>(conclusion).clauses;
}

Theorem partition_rectangle(const Rectangle& r, const std::set<std::size_t>& columns) {
  if (columns.empty()) throw Error(ErrorCode::kEmptyHypothesis, "no hypothesis columns selected");

  Theorem t{r.generators(), {columns.begin(), columns.end()}, remove_clauses(r, columns), {}, {}};
  t.hypothesis_clauses.reserve(columns.size());
  for (std::size_t c : columns) t.hypothesis_clauses.push_back(r.clause(c));

  if (columns.size() == 1) {
    t.conclusion = LiteralConjunction{negate_clause(t.hypothesis_clauses.front())};
  } else {
    t.conclusion = NegatedConjunction{t.hypothesis_clauses};
  }
  return t;
}

Theorem generate_theorem_with_partition(const GenerationSet& g, const std::set<std::size_t>& columns,
                                        std::size_t max_level) {
  if (columns.empty()) throw Error(ErrorCode::kEmptyHypothesis, "no hypothesis columns selected");
  return partition_rectangle(construct_from_template(g, max_level), columns);
}

Theorem generate_theorem(const GenerationSet& g, std::size_t max_level) {
  return generate_theorem_with_partition(g, {0}, max_level);
}

bool verify_theorem(const Theorem& t, const OracleLimits& limits) {
  return entails(t.premises, negated_clauses(t.conclusion), limits);
}

bool check_mutual_equivalence(const GenerationSet& g,
                              std::span<const std::set<std::size_t>> partitions,
                              const OracleLimits& limits) {
  const Rectangle r = construct_from_template(g);
  for (const auto& columns : partitions) {
    const Theorem t = partition_rectangle(r, columns);
    if (!implication_is_tautology(t.premises, t.hypothesis_clauses, limits)) return false;
  }
  return true;
}

}  // namespace rect_atg
