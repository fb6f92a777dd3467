// contextlab: check systems of random variables for contextuality, and write
// the standard scenarios out as system files.
//
//   contextlab check FILE [--cbd] [--fine] [--octuple] [--nonsignaling] [--json]
//   contextlab scenario KIND [--preset NAME] [--tables T;T;...] [--p P1,...,P16]
//                            [--labels 01|pm] [--out PATH]
//
// Exit codes: 0 analyses ran, 2 input error, 1 internal error.

#include <contextlab/report.hpp>
#include <contextlab/scenarios.hpp>
#include <contextlab/system_file.hpp>

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

using namespace contextlab;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInput = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<PairTable> parse_tables(const std::string& text) {
  std::vector<PairTable> tables;
  for (const auto& chunk : split(text, ';')) {
    auto cells = split(chunk, ',');
    if (cells.size() != 4)
      throw Error(ErrorKind::ValidationError, "table '" + chunk + "' must have 4 comma-separated entries");
    PairTable t;
    for (std::size_t i = 0; i < 4; ++i) t[i] = parse_rational(cells[i]);
    tables.push_back(std::move(t));
  }
  return tables;
}

std::vector<PairTable> preset_tables(ScenarioKind kind, const std::string& preset) {
  const auto c = perfectly_correlated();
  const auto a = perfectly_anticorrelated();
  const auto u = independent_uniform();
  if (kind == ScenarioKind::BellChsh) {
    if (preset == "uniform") return {u, u, u, u};
    if (preset == "pr-box") return {c, c, c, a};
    if (preset == "correlated") return {c, c, c, c};
  } else if (kind == ScenarioKind::LeggettGarg) {
    if (preset == "correlated") return {c, c, c};
    if (preset == "anticorrelated") return {a, a, a};
    if (preset == "two-correlated-one-anti") return {c, c, a};
  }
  throw Error(ErrorKind::ValidationError,
              "unknown preset '" + preset + "' for scenario '" + std::string(to_string(kind)) + "'");
}

bool use_color() {
  const char* env = std::getenv("CONTEXTLAB_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

struct CheckOptions {
  std::string path;
  bool cbd = false;
  bool fine = false;
  bool octuple = false;
  bool nonsignaling = false;
  bool json = false;
};

int run_check(const CheckOptions& opt) {
  System system = load_system(opt.path);
  AnalysisSelection selection;
  if (opt.cbd || opt.fine || opt.octuple || opt.nonsignaling)
    selection = {opt.cbd, opt.fine, opt.octuple, opt.nonsignaling};
  Report report = analyze(system, selection);
  std::cout << (opt.json ? render_json(report) : render_text(report, use_color()));
  return kOk;
}

struct ScenarioOptions {
  std::string kind;
  std::string preset;
  std::string tables;
  std::string bell_p;
  std::string labels;
  std::string out;
};

int run_scenario(const ScenarioOptions& opt) {
  ScenarioSpec spec;
  spec.kind = parse_scenario_kind(opt.kind);
  const bool bell = spec.kind == ScenarioKind::BellChsh;

  if (opt.labels.empty()) {
    spec.labels = bell ? BinaryLabels::PlusMinus : BinaryLabels::ZeroOne;
  } else if (opt.labels == "01") {
    spec.labels = BinaryLabels::ZeroOne;
  } else if (opt.labels == "pm") {
    spec.labels = BinaryLabels::PlusMinus;
  } else {
    throw Error(ErrorKind::ValidationError, "--labels must be '01' or 'pm'");
  }

  const int sources = !opt.preset.empty() + !opt.tables.empty() + !opt.bell_p.empty();
  if (sources > 1) throw Error(ErrorKind::ValidationError, "give at most one of --preset, --tables, --p");

  System system;
  if (!opt.bell_p.empty()) {
    if (!bell) throw Error(ErrorKind::ValidationError, "--p only applies to the bell scenario");
    auto cells = split(opt.bell_p, ',');
    if (cells.size() != 16) throw Error(ErrorKind::ValidationError, "--p needs 16 comma-separated entries");
    std::array<Rational, 16> p;
    for (std::size_t i = 0; i < 16; ++i) p[i] = parse_rational(cells[i]);
    system = bell_system(p, spec.labels);
  } else {
    if (!opt.tables.empty()) {
      spec.tables = parse_tables(opt.tables);
    } else if (!opt.preset.empty()) {
      spec.tables = preset_tables(spec.kind, opt.preset);
    } else if (bell) {
      spec.tables = preset_tables(spec.kind, "uniform");
    } else if (spec.kind != ScenarioKind::Specker) {
      throw Error(ErrorKind::ValidationError,
                  std::string("scenario '") + to_string(spec.kind) + "' needs --tables or --preset");
    }
    system = build_scenario(spec);
  }

  if (opt.out.empty() || opt.out == "-") {
    std::cout << format_system(system);
  } else {
    save_system(system, opt.out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contextuality-by-Default analysis of systems of random variables", "contextlab"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Analyze a system file");
  check_cmd->add_option("path", check.path, "System file")->required();
  check_cmd->add_flag("--cbd", check.cbd, "Maximally connected coupling verdict");
  check_cmd->add_flag("--fine", check.fine, "Fine-style content-keyed hidden-variable model");
  check_cmd->add_flag("--octuple", check.octuple, "Variable-keyed hidden-variable model with maximality");
  check_cmd->add_flag("--nonsignaling", check.nonsignaling, "Pairwise marginal comparisons per connection");
  check_cmd->add_flag("--json", check.json, "Machine-readable report");

  ScenarioOptions scenario;
  auto* scenario_cmd = app.add_subcommand("scenario", "Write a standard scenario as a system file");
  scenario_cmd->add_option("kind", scenario.kind, "bell | specker | leggett-garg | rank2 | cyclic")->required();
  scenario_cmd->add_option("--preset", scenario.preset,
                           "bell: uniform, pr-box, correlated; leggett-garg: correlated, anticorrelated, "
                           "two-correlated-one-anti");
  scenario_cmd->add_option("--tables", scenario.tables,
                           "';'-separated 2x2 tables, each 'p00,p01,p10,p11' (row-major)");
  scenario_cmd->add_option("--p", scenario.bell_p, "bell only: p1,...,p16 in the Bell table layout");
  scenario_cmd->add_option("--labels", scenario.labels, "outcome labels: 01 or pm (+1/-1)");
  scenario_cmd->add_option("--out", scenario.out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*check_cmd) return run_check(check);
    return run_scenario(scenario);
  } catch (const Error& e) {
    std::cerr << "contextlab: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "contextlab: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
