#include "rect_atg/logic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rect_atg/error.hpp"

namespace rect_atg {

namespace {

bool is_symbol_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

void require_symbol(std::string_view name) {
  if (!is_valid_symbol(name)) {
    throw std::invalid_argument("invalid symbol '" + std::string(name) + "'");
  }
}

template <typename T>
std::strong_ordering compare_sequences(std::span<const T> a, std::span<const T> b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

void write_args(std::ostream& os, std::span<const Term> args) {
  os << '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i != 0) os << ',';
    os << args[i];
  }
  os << ')';
}

}  // namespace

bool is_valid_symbol(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), is_symbol_char);
}

// ---------------------------------------------------------------------------
// Term

Term::Term(Kind kind, std::string name, std::vector<Term> args)
    : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

Term Term::constant(std::string name) {
  require_symbol(name);
  return Term(Kind::kConstant, std::move(name), {});
}

Term Term::variable(std::string name) {
  require_symbol(name);
  return Term(Kind::kVariable, std::move(name), {});
}

Term Term::function(std::string name, std::vector<Term> args) {
  require_symbol(name);
  if (args.empty()) throw std::invalid_argument("function '" + name + "' needs arguments");
  return Term(Kind::kFunction, std::move(name), std::move(args));
}

bool operator==(const Term& a, const Term& b) {
  return a.kind_ == b.kind_ && a.name_ == b.name_ && a.args_ == b.args_;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  return compare_sequences(a.args(), b.args());
}

// ---------------------------------------------------------------------------
// Atom

Atom::Atom(Kind kind, std::string symbol, std::vector<Term> args)
    : kind_(kind), symbol_(std::move(symbol)), args_(std::move(args)) {}

Atom Atom::proposition(std::string name) {
  require_symbol(name);
  return Atom(Kind::kProposition, std::move(name), {});
}

Atom Atom::predicate(std::string symbol, std::vector<Term> args) {
  if (symbol == kEquality) {
    if (args.size() != 2) throw std::invalid_argument("'=' takes exactly two arguments");
  } else {
    require_symbol(symbol);
  }
  return Atom(Kind::kPredicate, std::move(symbol), std::move(args));
}

Atom Atom::equality(Term lhs, Term rhs) {
  std::vector<Term> args;
  args.push_back(std::move(lhs));
  args.push_back(std::move(rhs));
  return predicate(std::string(kEquality), std::move(args));
}

bool operator==(const Atom& a, const Atom& b) {
  return a.kind_ == b.kind_ && a.symbol_ == b.symbol_ && a.args_ == b.args_;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.symbol_ <=> b.symbol_; c != 0) return c;
  return compare_sequences(a.args(), b.args());
}

// ---------------------------------------------------------------------------
// Literal

Literal::Literal(Atom atom, Polarity polarity)
    : atom_(std::make_shared<const Atom>(std::move(atom))), polarity_(polarity) {}

Literal::Literal(std::shared_ptr<const Atom> atom, Polarity polarity)
    : atom_(std::move(atom)), polarity_(polarity) {
  if (!atom_) throw std::invalid_argument("literal without atom");
}

bool operator==(const Literal& a, const Literal& b) {
  return a.polarity_ == b.polarity_ && (a.atom_ == b.atom_ || *a.atom_ == *b.atom_);
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (a.atom_ != b.atom_) {
    if (auto c = *a.atom_ <=> *b.atom_; c != 0) return c;
  }
  return a.polarity_ <=> b.polarity_;
}

bool operator==(const Clause& a, const Clause& b) {
  if (a.size() != b.size()) return false;
  std::vector<Literal> lhs(a.begin(), a.end());
  std::vector<Literal> rhs(b.begin(), b.end());
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

Literal negate_literal(const Literal& l) {
  return Literal(l.shared_atom(), flip(l.polarity()));
}

std::vector<Literal> negate_clause(const Clause& c) {
  if (c.empty()) throw Error(ErrorCode::kEmptyClause, "cannot negate the empty clause");
  std::vector<Literal> out;
  out.reserve(c.size());
  for (const Literal& l : c) out.push_back(negate_literal(l));
  return out;
}

bool complementary(const Literal& a, const Literal& b) {
  return a.polarity() != b.polarity() && a.atom() == b.atom();
}

// ---------------------------------------------------------------------------
// Display

std::ostream& operator<<(std::ostream& os, const Term& t) {
  os << t.name();
  if (t.kind() == Term::Kind::kFunction) write_args(os, t.args());
  return os;
}

std::ostream& operator<<(std::ostream& os, const Atom& a) {
  if (a.is_equality()) return os << a.args()[0] << '=' << a.args()[1];
  os << a.symbol();
  if (!a.is_proposition()) write_args(os, a.args());
  return os;
}

std::ostream& operator<<(std::ostream& os, const Literal& l) {
  if (!l.is_positive()) os << "¬";
  return os << l.atom();
}

std::ostream& operator<<(std::ostream& os, const Clause& c) {
  if (c.empty()) return os << "□";
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) os << " ∨ ";
    os << c[i];
  }
  return os << ')';
}

namespace {
template <typename T>
std::string stream_to_string(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}
}  // namespace

std::string to_string(const Term& t) { return stream_to_string(t); }
std::string to_string(const Atom& a) { return stream_to_string(a); }
std::string to_string(const Literal& l) { return stream_to_string(l); }
std::string to_string(const Clause& c) { return stream_to_string(c); }

}  // namespace rect_atg
