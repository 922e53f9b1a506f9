#pragma once

// Terms, atoms, literals and clauses.
//
// All values are immutable once built. Literals share their atom through a
// reference-counted pointer, so copying a literal (or a whole rectangle
// column) never deep-copies the term tree.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rect_atg {

// Symbols are non-empty strings over [A-Za-z0-9_].
bool is_valid_symbol(std::string_view name);

class Term {
 public:
  enum class Kind : std::uint8_t { kConstant, kVariable, kFunction };

  static Term constant(std::string name);
  static Term variable(std::string name);
  static Term function(std::string name, std::vector<Term> args);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  std::span<const Term> args() const noexcept { return args_; }
  bool is_variable() const noexcept { return kind_ == Kind::kVariable; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term(Kind kind, std::string name, std::vector<Term> args);

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
};

class Atom {
 public:
  enum class Kind : std::uint8_t { kProposition, kPredicate };

  static constexpr std::string_view kEquality = "=";

  static Atom proposition(std::string name);
  // `symbol` may be "=", in which case exactly two arguments are required.
  static Atom predicate(std::string symbol, std::vector<Term> args);
  static Atom equality(Term lhs, Term rhs);

  Kind kind() const noexcept { return kind_; }
  // Proposition name or predicate symbol.
  const std::string& symbol() const noexcept { return symbol_; }
  std::span<const Term> args() const noexcept { return args_; }
  bool is_proposition() const noexcept { return kind_ == Kind::kProposition; }
  bool is_equality() const noexcept { return symbol_ == kEquality; }

  friend bool operator==(const Atom& a, const Atom& b);
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

 private:
  Atom(Kind kind, std::string symbol, std::vector<Term> args);

  Kind kind_;
  std::string symbol_;
  std::vector<Term> args_;
};

enum class Polarity : std::uint8_t { kPositive, kNegative };

constexpr Polarity flip(Polarity p) noexcept {
  return p == Polarity::kPositive ? Polarity::kNegative : Polarity::kPositive;
}

class Literal {
 public:
  explicit Literal(Atom atom, Polarity polarity = Polarity::kPositive);
  Literal(std::shared_ptr<const Atom> atom, Polarity polarity);

  static Literal positive(Atom atom) { return Literal(std::move(atom), Polarity::kPositive); }
  static Literal negative(Atom atom) { return Literal(std::move(atom), Polarity::kNegative); }

  const Atom& atom() const noexcept { return *atom_; }
  const std::shared_ptr<const Atom>& shared_atom() const noexcept { return atom_; }
  Polarity polarity() const noexcept { return polarity_; }
  bool is_positive() const noexcept { return polarity_ == Polarity::kPositive; }

  friend bool operator==(const Literal& a, const Literal& b);
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);

 private:
  std::shared_ptr<const Atom> atom_;
  Polarity polarity_;
};

// Disjunction of literals. Keeps insertion (row) order for display; equality
// compares literal multisets.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {}
  Clause(std::initializer_list<Literal> literals) : literals_(literals) {}

  std::span<const Literal> literals() const noexcept { return literals_; }
  std::size_t size() const noexcept { return literals_.size(); }
  bool empty() const noexcept { return literals_.empty(); }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }
  auto begin() const noexcept { return literals_.begin(); }
  auto end() const noexcept { return literals_.end(); }

  friend bool operator==(const Clause& a, const Clause& b);

 private:
  std::vector<Literal> literals_;
};

// Conjunction of clauses, in order. An empty set is distinct from a set that
// holds the empty clause.
using ClauseSet = std::vector<Clause>;

Literal negate_literal(const Literal& l);

// Literal-wise negation of a clause, read conjunctively by callers.
// Throws Error(kEmptyClause) for the empty clause.
std::vector<Literal> negate_clause(const Clause& c);

bool complementary(const Literal& a, const Literal& b);

// Display forms: "P3(g(y,a))", "¬p", "a=b", "(¬p ∨ q)", "□".
std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Atom& a);
std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const Clause& c);

}  // namespace rect_atg
