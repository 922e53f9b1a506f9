#pragma once

// Brute-force semantic oracles.
//
// Satisfiability works under propositional abstraction: every syntactically
// distinct atom is an independent boolean. Assignments are enumerated in
// increasing index order with atom k of the universe as bit k, so the witness
// returned is always the lowest-index satisfying assignment, also when the
// range is split across threads.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rect_atg/logic.hpp"
#include "rect_atg/parser.hpp"
#include "rect_atg/rectangle.hpp"

namespace rect_atg {

struct OracleLimits {
  // Truth-table bound: at most 2^max_atoms assignments.
  std::size_t max_atoms = 24;
  // Search nodes the standard-contradiction check may expand.
  std::uint64_t max_search_nodes = 10'000'000;
  // Worker threads for truth-table enumeration; 0 or 1 runs inline.
  unsigned threads = 1;
};

class Assignment {
 public:
  Assignment(std::vector<Atom> universe, std::vector<bool> values);

  std::span<const Atom> universe() const noexcept { return universe_; }
  // nullopt if the atom is outside the universe.
  std::optional<bool> value(const Atom& atom) const;

  // These throw std::out_of_range for atoms outside the universe.
  bool satisfies(const Literal& l) const;
  bool satisfies(const Clause& c) const;
  bool satisfies(const ClauseSet& s) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Atom> universe_;
  std::vector<bool> values_;
  std::map<Atom, std::size_t> index_;
};

enum class Verdict { kSat, kUnsat };

struct SatResult {
  Verdict verdict;
  // Present iff verdict is kSat.
  std::optional<Assignment> witness;

  bool sat() const noexcept { return verdict == Verdict::kSat; }
};

// Distinct atoms in order of first appearance.
std::vector<Atom> atom_universe(const ClauseSet& s);
std::vector<Atom> atom_universe(const GenerationSet& g);

// Throws Error(kTooManyAtoms) when the universe exceeds limits.max_atoms.
SatResult is_satisfiable(const ClauseSet& s, const OracleLimits& limits = {});
// `universe` must cover every atom of `s`; extra atoms are allowed.
SatResult is_satisfiable(const ClauseSet& s, std::span<const Atom> universe,
                         const OracleLimits& limits = {});

// True iff every tuple drawn one literal per clause contains a complementary
// pair. Prefixes that already hold a pair are not extended, and prefixes
// proven to have no pair-free completion are remembered, so rectangles with
// far more than 10^7 tuples are decided exactly. Throws
// Error(kProductTooLarge) once limits.max_search_nodes is exhausted.
bool is_standard_contradiction(const ClauseSet& s, const OracleLimits& limits = {});

struct MinimalityReport {
  SatResult full;
  // removals[j]: the rectangle without column j.
  std::vector<SatResult> removals;

  std::size_t sat_removals() const;
  bool passed() const { return !full.sat() && sat_removals() == removals.size(); }
};

// Full set UNSAT and every single-column removal SAT, with witnesses over the
// generator atoms.
MinimalityReport check_minimality(const Rectangle& r, const OracleLimits& limits = {});

// premises |= not(H), decided by refutation: premises together with H is UNSAT.
bool entails(const ClauseSet& premises, const ClauseSet& hypothesis,
             const OracleLimits& limits = {});

// Evaluates (AND premises) -> not(AND hypothesis) under every assignment of
// the combined atoms, without going through the SAT search.
bool implication_is_tautology(const ClauseSet& premises, const ClauseSet& hypothesis,
                              const OracleLimits& limits = {});

}  // namespace rect_atg
