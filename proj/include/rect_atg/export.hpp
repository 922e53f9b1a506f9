#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rect_atg/logic.hpp"
#include "rect_atg/parser.hpp"
#include "rect_atg/rectangle.hpp"
#include "rect_atg/theorem.hpp"

namespace rect_atg {

// Bijection between atoms and DIMACS variables 1..n.
class AtomNumbering {
 public:
  // Row i of the generation set becomes variable i + 1.
  static AtomNumbering from_generators(const GenerationSet& g);
  // Variables in order of first appearance.
  static AtomNumbering from_clauses(const ClauseSet& s);

  std::size_t size() const noexcept { return atoms_.size(); }
  std::optional<int> number(const Atom& atom) const;
  // 1-based.
  const Atom& atom(int number) const { return atoms_.at(static_cast<std::size_t>(number - 1)); }

 private:
  void add(const Atom& atom);

  std::vector<Atom> atoms_;
  std::map<Atom, int> numbers_;
};

// One line per row; each column padded to its widest cell, trailing blanks
// trimmed.
std::string render_matrix(const Rectangle& r);

// "¬p ∧ ¬q" or "¬((p ∨ q) ∧ (¬p ∨ q))".
std::string render_conclusion(const Conclusion& c);

// Numbered premises followed by the "⊢ conclusion" line.
std::string render_theorem(const Theorem& t);

// "p cnf <vars> <clauses>" then one 0-terminated clause per line. When any
// atom is first-order, a "c <var> <atom>" block precedes the header.
// Throws Error(kUnnumberedAtom).
std::string export_dimacs(const ClauseSet& s, const AtomNumbering& numbering);

// Premises as cnf axioms named premise_0001..., conclusion as a fof
// conjecture. Free variables of the conclusion are bound existentially,
// the dual of the universal closure of the denied clauses.
std::string export_tptp(const Theorem& t);
// Every column as a cnf axiom, for handing the refutation to a prover.
std::string export_tptp(const Rectangle& r);

// Grid and generators as a JSON document.
std::string export_json(const Rectangle& r, VarStyle style);

inline constexpr int kRecordVersion = 1;

// {version, var_style, generators, removed_indices, premises, conclusion}
std::string save_record(const Theorem& t, VarStyle style);

// Rebuilds the theorem from its provenance and checks the stored premises and
// conclusion against it. Throws Error(kSchemaMismatch) for an unknown
// version, Error(kMalformedRecord) for anything that does not reproduce.
Theorem load_record(std::string_view json, std::size_t max_level = kDefaultMaxLevel);

}  // namespace rect_atg
