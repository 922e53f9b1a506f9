#include "rect_atg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "rect_atg/error.hpp"
#include "rect_atg/export.hpp"
#include "rect_atg/parser.hpp"
#include "rect_atg/polarity_template.hpp"
#include "rect_atg/rectangle.hpp"
#include "rect_atg/semantics.hpp"
#include "rect_atg/theorem.hpp"

namespace rect_atg::cli {

namespace {

enum class OutputFormat { kMatrix, kDimacs, kTptp, kJson };

struct RunConfig {
  std::string literals;
  std::string literal_file;
  std::string record_file;
  std::string var_style = "upper";
  std::vector<std::size_t> hypothesis;
  OutputFormat format = OutputFormat::kMatrix;
  std::size_t max_level = kDefaultMaxLevel;
  OracleLimits limits;
  bool verify = false;
  int template_level = 0;
};

// Usage problems that CLI11 cannot see (unreadable files, bad env values).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GenerationSet load_generators(const RunConfig& cfg) {
  const VarStyle style = parse_var_style(cfg.var_style);
  if (!cfg.literal_file.empty()) return parse_generation_set(read_file(cfg.literal_file), style);
  return parse_generation_set(cfg.literals, style);
}

std::set<std::size_t> hypothesis_columns(const RunConfig& cfg) {
  if (cfg.hypothesis.empty()) return {0};
  return {cfg.hypothesis.begin(), cfg.hypothesis.end()};
}

int cmd_rectangle(const RunConfig& cfg, std::ostream& out) {
  const GenerationSet g = load_generators(cfg);
  const Rectangle r = construct_from_template(g, cfg.max_level);
  switch (cfg.format) {
    case OutputFormat::kMatrix: out << render_matrix(r); break;
    case OutputFormat::kDimacs: out << export_dimacs(r.clauses(), AtomNumbering::from_generators(g)); break;
    case OutputFormat::kTptp: out << export_tptp(r); break;
    case OutputFormat::kJson: out << export_json(r, parse_var_style(cfg.var_style)); break;
  }
  return kOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GenerationSet g = load_generators(cfg);
  const Theorem t = generate_theorem_with_partition(g, hypothesis_columns(cfg), cfg.max_level);
  if (cfg.verify && !verify_theorem(t, cfg.limits)) {
    err << "verification failed: premises do not entail the conclusion\n";
    return kCheckFailed;
  }
  switch (cfg.format) {
    case OutputFormat::kMatrix: out << render_theorem(t); break;
    case OutputFormat::kDimacs: {
      // Refutation problem: premises followed by the hypothesis clauses.
      ClauseSet problem = t.premises;
      problem.insert(problem.end(), t.hypothesis_clauses.begin(), t.hypothesis_clauses.end());
      out << "c premises 1.." << t.premises.size() << ", hypothesis " << t.premises.size() + 1 << ".."
          << problem.size() << '\n';
      out << export_dimacs(problem, AtomNumbering::from_generators(g));
      break;
    }
    case OutputFormat::kTptp: out << export_tptp(t); break;
    case OutputFormat::kJson: out << save_record(t, parse_var_style(cfg.var_style)); break;
  }
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<Theorem> theorem;
  std::optional<GenerationSet> generators;
  if (!cfg.record_file.empty()) {
    theorem = load_record(read_file(cfg.record_file), cfg.max_level);
    generators = theorem->generators;
  } else {
    generators = load_generators(cfg);
  }

  const std::size_t bound = std::min(cfg.limits.max_atoms, cfg.max_level);
  if (generators->size() > bound) {
    throw Error(ErrorCode::kTooManyAtoms, std::to_string(generators->size()) +
                                              " generators exceed the check bound of " +
                                              std::to_string(bound));
  }

  const Rectangle r = construct_from_template(*generators, cfg.max_level);
  if (!theorem && !cfg.hypothesis.empty()) theorem = partition_rectangle(r, hypothesis_columns(cfg));

  bool ok = true;
  const MinimalityReport report = check_minimality(r, cfg.limits);
  out << "full: " << (report.full.sat() ? "SAT" : "UNSAT") << "; removals: " << report.sat_removals()
      << "/" << report.removals.size() << " SAT\n";
  ok = ok && report.passed();

  try {
    const bool sc = is_standard_contradiction(r.clauses(), cfg.limits);
    out << "standard contradiction: " << (sc ? "yes" : "no") << '\n';
    ok = ok && sc;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kProductTooLarge) throw;
    out << "standard contradiction: skipped (search budget exhausted)\n";
  }

  if (theorem) {
    const bool valid = verify_theorem(*theorem, cfg.limits);
    out << "theorem: " << (valid ? "valid" : "INVALID") << '\n';
    ok = ok && valid;
  }
  if (!ok) err << "semantic check failed\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_template(const RunConfig& cfg, std::ostream& out) {
  out << make_template(cfg.template_level).dump();
  return kOk;
}

std::size_t default_max_level() {
  const char* env = std::getenv(kMaxLevelEnv);
  if (env == nullptr || *env == '\0') return kDefaultMaxLevel;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1) {
    throw InputError(std::string(kMaxLevelEnv) + " must be a positive integer, got '" + env + "'");
  }
  return static_cast<std::size_t>(value);
}

void add_input_options(CLI::App& cmd, RunConfig& cfg, CLI::Option*& inline_opt, CLI::Option*& file_opt) {
  inline_opt = cmd.add_option("-l,--literals", cfg.literals, "generation literals, e.g. \"p, q, ~r\"");
  file_opt = cmd.add_option("-f,--file", cfg.literal_file, "file with one literal per line");
  inline_opt->excludes(file_opt);
  cmd.add_option("--var-style", cfg.var_style, "variable convention for bare terms")
      ->check(CLI::IsMember({"upper", "lower"}))
      ->capture_default_str();
}

void add_cap_option(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--max-n", cfg.max_level, "largest generation set to materialize")
      ->check(CLI::Range(std::size_t{1}, std::size_t{62}))
      ->capture_default_str();
}

void add_oracle_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--max-atoms", cfg.limits.max_atoms, "truth-table atom bound")
      ->check(CLI::Range(std::size_t{1}, std::size_t{63}))
      ->capture_default_str();
  cmd.add_option("--max-search", cfg.limits.max_search_nodes, "standard-contradiction search budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--threads", cfg.limits.threads, "truth-table worker threads")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();
}

void add_format_option(CLI::App& cmd, RunConfig& cfg) {
  const std::map<std::string, OutputFormat> formats{{"matrix", OutputFormat::kMatrix},
                                                    {"dimacs", OutputFormat::kDimacs},
                                                    {"tptp", OutputFormat::kTptp},
                                                    {"json", OutputFormat::kJson}};
  cmd.add_option("-o,--output", cfg.format, "output format: matrix, dimacs, tptp, json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.max_level = default_max_level();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  CLI::App app{"Rectangular standard contradictions and the theorems they generate"};
  app.name(args.empty() ? "rect-atg" : args.front());
  app.require_subcommand(1);

  CLI::Option* inline_opt = nullptr;
  CLI::Option* file_opt = nullptr;

  auto* generate = app.add_subcommand("generate", "build the rectangle and emit a theorem");
  add_input_options(*generate, cfg, inline_opt, file_opt);
  generate->add_option("-H,--hypothesis", cfg.hypothesis, "hypothesis column indices (default 0)")
      ->delimiter(',');
  add_format_option(*generate, cfg);
  generate->add_flag("--verify", cfg.verify, "check the theorem with the truth-table oracle first");
  add_cap_option(*generate, cfg);
  add_oracle_options(*generate, cfg);

  auto* rectangle = app.add_subcommand("rectangle", "print the rectangle");
  add_input_options(*rectangle, cfg, inline_opt, file_opt);
  add_format_option(*rectangle, cfg);
  add_cap_option(*rectangle, cfg);

  auto* check = app.add_subcommand("check", "run the minimality and theorem checks");
  CLI::Option* check_inline = nullptr;
  CLI::Option* check_file = nullptr;
  add_input_options(*check, cfg, check_inline, check_file);
  auto* record = check->add_option("--record", cfg.record_file, "saved theorem record (JSON)");
  record->excludes(check_inline)->excludes(check_file);
  check->add_option("-H,--hypothesis", cfg.hypothesis, "also verify this partition")->delimiter(',');
  add_cap_option(*check, cfg);
  add_oracle_options(*check, cfg);

  auto* tmpl = app.add_subcommand("template", "print the n-level polarity template");
  tmpl->add_option("-n,--level", cfg.template_level, "template level")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("rect-atg");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*generate) return cmd_generate(cfg, out, err);
    if (*rectangle) return cmd_rectangle(cfg, out);
    if (*check) return cmd_check(cfg, out, err);
    if (*tmpl) return cmd_template(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_resource_error(e.code()) ? kResourceCap : kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace rect_atg::cli
