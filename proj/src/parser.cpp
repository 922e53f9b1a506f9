#include "rect_atg/parser.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "rect_atg/error.hpp"

namespace rect_atg {

namespace {

constexpr std::string_view kNotSign = "¬";

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_ident_char(char c) { return is_alpha(c) || (c >= '0' && c <= '9') || c == '_'; }
bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool is_separator(char c) { return c == ',' || c == ';' || c == '\n'; }

// Identifier with an optional argument list, before we know whether it is a
// predicate head or a term.
struct Head {
  std::string name;
  std::optional<std::vector<Term>> args;
};

class LiteralParser {
 public:
  LiteralParser(std::string_view text, VarStyle style, std::size_t start = 0)
      : text_(text), style_(style), pos_(start) {}

  std::size_t pos() const { return pos_; }

  bool at_end() {
    skip_blanks();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_blanks();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_blanks() {
    while (pos_ < text_.size() && is_blank(text_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(std::string expected) const {
    throw SyntaxError(pos_, std::move(expected), text_);
  }

  Literal literal() {
    Polarity polarity = Polarity::kPositive;
    if (consume_negation()) {
      polarity = Polarity::kNegative;
      if (consume_negation()) fail("atom (stacked negation is not allowed)");
    }
    Head head = parse_head();
    if (peek() == '=') {
      ++pos_;
      Term rhs = term();
      return Literal(Atom::equality(to_term(std::move(head)), std::move(rhs)), polarity);
    }
    if (head.args) return Literal(Atom::predicate(std::move(head.name), std::move(*head.args)), polarity);
    return Literal(Atom::proposition(std::move(head.name)), polarity);
  }

 private:
  bool consume_negation() {
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == '~') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, kNotSign.size()) == kNotSign) {
      pos_ += kNotSign.size();
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_blanks();
    if (pos_ >= text_.size() || !is_alpha(text_[pos_])) fail("identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Head parse_head() {
    Head head{identifier(), std::nullopt};
    if (peek() == '(') {
      ++pos_;
      std::vector<Term> args;
      args.push_back(term());
      while (peek() == ',') {
        ++pos_;
        args.push_back(term());
      }
      if (peek() != ')') fail("',' or ')'");
      ++pos_;
      head.args = std::move(args);
    }
    return head;
  }

  Term term() { return to_term(parse_head()); }

  Term to_term(Head head) const {
    if (head.args) return Term::function(std::move(head.name), std::move(*head.args));
    if (is_variable_name(head.name, style_)) return Term::variable(std::move(head.name));
    return Term::constant(std::move(head.name));
  }

  std::string_view text_;
  VarStyle style_;
  std::size_t pos_;
};

std::string predicate_key(const Atom& atom) { return atom.symbol(); }

}  // namespace

std::string_view to_string(VarStyle style) {
  return style == VarStyle::kUpper ? "upper" : "lower";
}

VarStyle parse_var_style(std::string_view text) {
  if (text == "upper") return VarStyle::kUpper;
  if (text == "lower") return VarStyle::kLower;
  throw std::invalid_argument("unknown var style '" + std::string(text) + "'");
}

bool is_variable_name(std::string_view name, VarStyle style) {
  if (name.empty()) return false;
  const char c = name.front();
  if (style == VarStyle::kUpper) return c >= 'A' && c <= 'Z';
  return c >= 'u' && c <= 'z';
}

Literal parse_literal(std::string_view text, VarStyle style) {
  LiteralParser parser(text, style);
  Literal l = parser.literal();
  if (!parser.at_end()) parser.fail("end of literal");
  return l;
}

GenerationSet parse_generation_set(std::string_view text, VarStyle style) {
  std::vector<Literal> literals;

  // Literal list: separators (and blank runs of them) between literals.
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && (is_blank(text[pos]) || is_separator(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    LiteralParser item(text, style, pos);
    literals.push_back(item.literal());
    std::size_t end = item.pos();
    while (end < text.size() && is_blank(text[end])) ++end;
    if (end < text.size() && !is_separator(text[end])) {
      throw SyntaxError(end, "',', ';' or newline", text);
    }
    pos = end;
  }
  return validate_generation_set(std::move(literals));
}

GenerationSet validate_generation_set(std::vector<Literal> literals) {
  if (literals.empty()) throw Error(ErrorCode::kEmptySet, "generation set has no literals");
  std::map<std::string, std::size_t> first_use;
  for (std::size_t i = 0; i < literals.size(); ++i) {
    auto [it, inserted] = first_use.emplace(predicate_key(literals[i].atom()), i + 1);
    if (!inserted) throw DuplicatePredicateError(it->first, it->second, i + 1);
  }
  return GenerationSet(std::move(literals));
}

}  // namespace rect_atg
