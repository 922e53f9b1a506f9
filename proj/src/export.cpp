#include "rect_atg/export.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "rect_atg/error.hpp"

namespace rect_atg {

namespace {

using json = nlohmann::json;

// Display width of a UTF-8 string in code points.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

// ---------------------------------------------------------------------------
// TPTP spelling

bool is_lower_word(std::string_view s) {
  return !s.empty() && s.front() >= 'a' && s.front() <= 'z' && is_valid_symbol(s);
}

std::string tptp_functor(const std::string& name) {
  return is_lower_word(name) ? name : "'" + name + "'";
}

std::string tptp_variable(const std::string& name) {
  std::string out = name;
  if (out.front() >= 'a' && out.front() <= 'z') out.front() = static_cast<char>(out.front() - 'a' + 'A');
  return out;
}

void write_tptp(std::ostream& os, const Term& t) {
  if (t.is_variable()) {
    os << tptp_variable(t.name());
    return;
  }
  os << tptp_functor(t.name());
  if (t.kind() == Term::Kind::kFunction) {
    os << '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i != 0) os << ',';
      write_tptp(os, t.args()[i]);
    }
    os << ')';
  }
}

void write_tptp(std::ostream& os, const Literal& l) {
  const Atom& a = l.atom();
  if (a.is_equality()) {
    write_tptp(os, a.args()[0]);
    os << (l.is_positive() ? " = " : " != ");
    write_tptp(os, a.args()[1]);
    return;
  }
  if (!l.is_positive()) os << '~';
  os << tptp_functor(a.symbol());
  if (!a.is_proposition()) {
    os << '(';
    for (std::size_t i = 0; i < a.args().size(); ++i) {
      if (i != 0) os << ',';
      write_tptp(os, a.args()[i]);
    }
    os << ')';
  }
}

// Joins literals with `op`; parenthesized when there is more than one.
void write_tptp_junction(std::ostream& os, std::span<const Literal> lits, std::string_view op) {
  if (lits.size() != 1) os << '(';
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i != 0) os << ' ' << op << ' ';
    write_tptp(os, lits[i]);
  }
  if (lits.size() != 1) os << ')';
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.is_variable()) {
    std::string v = tptp_variable(t.name());
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  for (const Term& arg : t.args()) collect_variables(arg, out);
}

std::vector<std::string> variables_of(const ClauseSet& s) {
  std::vector<std::string> out;
  for (const Clause& c : s) {
    for (const Literal& l : c) {
      for (const Term& t : l.atom().args()) collect_variables(t, out);
    }
  }
  return out;
}

std::string premise_name(std::size_t index) {
  std::ostringstream os;
  os << "premise_";
  os.width(4);
  os.fill('0');
  os << index;
  return os.str();
}

void write_cnf_axioms(std::ostream& os, const ClauseSet& clauses) {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    os << "cnf(" << premise_name(i + 1) << ", axiom, ";
    write_tptp_junction(os, clauses[i].literals(), "|");
    os << ").\n";
  }
}

// ---------------------------------------------------------------------------
// JSON helpers

json literals_to_json(std::span<const Literal> lits) {
  json out = json::array();
  for (const Literal& l : lits) out.push_back(to_string(l));
  return out;
}

json clauses_to_json(const ClauseSet& s) {
  json out = json::array();
  for (const Clause& c : s) out.push_back(literals_to_json(c.literals()));
  return out;
}

std::vector<Literal> literals_from_json(const json& j, VarStyle style) {
  std::vector<Literal> out;
  for (const auto& item : j) out.push_back(parse_literal(item.get<std::string>(), style));
  return out;
}

ClauseSet clauses_from_json(const json& j, VarStyle style) {
  ClauseSet out;
  for (const auto& item : j) out.emplace_back(literals_from_json(item, style));
  return out;
}

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::kMalformedRecord, why); }

}  // namespace

// ---------------------------------------------------------------------------
// AtomNumbering

void AtomNumbering::add(const Atom& atom) {
  if (numbers_.emplace(atom, static_cast<int>(atoms_.size()) + 1).second) atoms_.push_back(atom);
}

AtomNumbering AtomNumbering::from_generators(const GenerationSet& g) {
  AtomNumbering n;
  for (const Literal& l : g) n.add(l.atom());
  return n;
}

AtomNumbering AtomNumbering::from_clauses(const ClauseSet& s) {
  AtomNumbering n;
  for (const Clause& c : s) {
    for (const Literal& l : c) n.add(l.atom());
  }
  return n;
}

std::optional<int> AtomNumbering::number(const Atom& atom) const {
  auto it = numbers_.find(atom);
  if (it == numbers_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Text renderings

std::string render_matrix(const Rectangle& r) {
  const std::size_t n = r.height();
  const std::size_t length = r.length();
  std::vector<std::string> cells(n * length);
  std::vector<std::size_t> widths(length, 0);
  for (std::size_t j = 0; j < length; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      std::string& cell = cells[i * length + j];
      cell = to_string(r.at(i, j));
      widths[j] = std::max(widths[j], display_width(cell));
    }
  }

  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string line;
    for (std::size_t j = 0; j < length; ++j) {
      const std::string& cell = cells[i * length + j];
      if (j != 0) line += ' ';
      line += cell;
      line.append(widths[j] - display_width(cell), ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_conclusion(const Conclusion& c) {
  std::ostringstream os;
  if (const auto* conj = std::get_if<LiteralConjunction>(&c)) {
    for (std::size_t i = 0; i < conj->literals.size(); ++i) {
      if (i != 0) os << " ∧ ";
      os << conj->literals[i];
    }
    return os.str();
  }
  const auto& clauses = std::get<NegatedConjunction>(c).clauses;
  os << "¬(";
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i != 0) os << " ∧ ";
    os << clauses[i];
  }
  os << ')';
  return os.str();
}

std::string render_theorem(const Theorem& t) {
  std::ostringstream os;
  os << "premises (" << t.premises.size() << "):\n";
  for (std::size_t i = 0; i < t.premises.size(); ++i) {
    os << "  " << (i + 1) << ". " << t.premises[i] << '\n';
  }
  os << "⊢ " << render_conclusion(t.conclusion) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// DIMACS

std::string export_dimacs(const ClauseSet& s, const AtomNumbering& numbering) {
  std::ostringstream body;
  for (const Clause& c : s) {
    for (const Literal& l : c) {
      const auto var = numbering.number(l.atom());
      if (!var) throw Error(ErrorCode::kUnnumberedAtom, "no DIMACS variable for " + to_string(l.atom()));
      body << (l.is_positive() ? "" : "-") << *var << ' ';
    }
    body << "0\n";
  }

  bool first_order = false;
  for (std::size_t v = 1; v <= numbering.size(); ++v) {
    first_order = first_order || !numbering.atom(static_cast<int>(v)).is_proposition();
  }
  std::ostringstream os;
  if (first_order) {
    for (std::size_t v = 1; v <= numbering.size(); ++v) {
      os << "c " << v << ' ' << numbering.atom(static_cast<int>(v)) << '\n';
    }
  }
  os << "p cnf " << numbering.size() << ' ' << s.size() << '\n' << body.str();
  return os.str();
}

// ---------------------------------------------------------------------------
// TPTP

std::string export_tptp(const Theorem& t) {
  std::ostringstream os;
  os << "% " << t.premises.size() << " premises; hypothesis columns";
  for (std::size_t c : t.removed_columns) os << ' ' << c;
  os << '\n';
  write_cnf_axioms(os, t.premises);

  os << "fof(conclusion, conjecture, ";
  const ClauseSet denied = negated_clauses(t.conclusion);
  const std::vector<std::string> vars = variables_of(denied);
  if (!vars.empty()) {
    os << "? [";
    for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i];
    os << "] : ";
  }
  if (const auto* conj = std::get_if<LiteralConjunction>(&t.conclusion)) {
    write_tptp_junction(os, conj->literals, "&");
  } else {
    os << "~(";
    for (std::size_t i = 0; i < denied.size(); ++i) {
      if (i != 0) os << " & ";
      // Inner clauses always parenthesized so '&' never binds into them.
      if (denied[i].size() == 1) os << '(';
      write_tptp_junction(os, denied[i].literals(), "|");
      if (denied[i].size() == 1) os << ')';
    }
    os << ')';
  }
  os << ").\n";
  return os.str();
}

std::string export_tptp(const Rectangle& r) {
  std::ostringstream os;
  os << "% rectangle of " << r.height() << " generators, " << r.length() << " clauses\n";
  write_cnf_axioms(os, r.clauses());
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON

std::string export_json(const Rectangle& r, VarStyle style) {
  json doc;
  doc["var_style"] = std::string(to_string(style));
  doc["generators"] = literals_to_json(r.generators().literals());
  json columns = json::array();
  for (std::size_t j = 0; j < r.length(); ++j) columns.push_back(literals_to_json(r.column(j)));
  doc["columns"] = std::move(columns);
  return doc.dump(2) + "\n";
}

std::string save_record(const Theorem& t, VarStyle style) {
  json doc;
  doc["version"] = kRecordVersion;
  doc["var_style"] = std::string(to_string(style));
  doc["generators"] = literals_to_json(t.generators.literals());
  doc["removed_indices"] = t.removed_columns;
  doc["premises"] = clauses_to_json(t.premises);
  if (const auto* conj = std::get_if<LiteralConjunction>(&t.conclusion)) {
    doc["conclusion"] = {{"form", "literal_conjunction"}, {"literals", literals_to_json(conj->literals)}};
  } else {
    doc["conclusion"] = {{"form", "negated_conjunction"},
                         {"clauses", clauses_to_json(std::get<NegatedConjunction>(t.conclusion).clauses)}};
  }
  return doc.dump(2) + "\n";
}

Theorem load_record(std::string_view text, std::size_t max_level) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version")) malformed("missing version");
  if (!doc["version"].is_number_integer() || doc["version"].get<int>() != kRecordVersion) {
    throw Error(ErrorCode::kSchemaMismatch,
                "record version " + doc["version"].dump() + ", expected " + std::to_string(kRecordVersion));
  }

  try {
    const VarStyle style = parse_var_style(doc.at("var_style").get<std::string>());
    const GenerationSet generators = validate_generation_set(literals_from_json(doc.at("generators"), style));
    const auto indices = doc.at("removed_indices").get<std::vector<std::size_t>>();
    const std::set<std::size_t> columns(indices.begin(), indices.end());
    if (columns.size() != indices.size() || !std::is_sorted(indices.begin(), indices.end())) {
      malformed("removed_indices must be ascending and distinct");
    }

    Theorem rebuilt = generate_theorem_with_partition(generators, columns, max_level);

    const ClauseSet premises = clauses_from_json(doc.at("premises"), style);
    if (premises != rebuilt.premises) malformed("premises do not partition the rectangle");

    const json& conclusion = doc.at("conclusion");
    const std::string form = conclusion.at("form").get<std::string>();
    Conclusion stored;
    if (form == "literal_conjunction") {
      stored = LiteralConjunction{literals_from_json(conclusion.at("literals"), style)};
    } else if (form == "negated_conjunction") {
      stored = NegatedConjunction{clauses_from_json(conclusion.at("clauses"), style)};
    } else {
      malformed("unknown conclusion form '" + form + "'");
    }
    if (stored != rebuilt.conclusion) malformed("conclusion does not negate the removed columns");
    return rebuilt;
  } catch (const json::exception& e) {
    malformed(std::string("bad field: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedRecord || is_resource_error(e.code())) throw;
    malformed(e.what());
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
}

}  // namespace rect_atg
