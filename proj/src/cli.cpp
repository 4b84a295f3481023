#include "lyubgraph/cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lyubgraph/error.hpp"
#include "lyubgraph/io.hpp"
#include "lyubgraph/section.hpp"
#include "lyubgraph/sweep.hpp"

namespace lyubgraph::cli {
namespace {

enum class Format { json, md, dot };

struct RunConfig {
  std::string input;
  Format format = Format::json;
  bool strict = false;
  bool check = false;
  std::size_t bruteforce_cap = kDefaultBruteforceCap;

  // analyze
  std::optional<int> depth;
  std::optional<int> cd;
  std::optional<int> ambient;

  // gamma
  int threshold = 1;

  // conn
  bool oracle = false;

  // section
  int iterate = 1;

  // sweep
  SweepConfig sweep;
  std::string repro_dir;
};

void add_format_flags(CLI::App* cmd, RunConfig& cfg, bool allow_md, bool allow_dot) {
  auto* group = cmd->add_option_group("format");
  group->add_flag_callback("--json", [&cfg] { cfg.format = Format::json; }, "JSON output (default)");
  if (allow_md) {
    group->add_flag_callback("--md", [&cfg] { cfg.format = Format::md; }, "Markdown report");
  }
  if (allow_dot) {
    group->add_flag_callback("--dot", [&cfg] { cfg.format = Format::dot; }, "Graphviz DOT");
  }
  group->require_option(0, 1);
}

void add_input(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("FILE", cfg.input, "Input JSON document")->required();
  cmd->add_flag("--strict", cfg.strict, "Reject unknown keys and non-minimal prime lists");
}

ParsedDocument load(const RunConfig& cfg, std::ostream& err) {
  ParseOptions opts;
  opts.strict = cfg.strict;
  auto parsed = load_document(cfg.input, opts);
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  return parsed;
}

AbstractArrangement require_affine(const Document& doc, const char* command) {
  if (const auto* c = std::get_if<CoordinateArrangement>(&doc)) {
    if (!c->is_equidimensional()) {
      throw InputError("input is not equidimensional: all primes must have the same size");
    }
    return to_abstract(*c);
  }
  if (const auto* a = std::get_if<AbstractArrangement>(&doc)) return *a;
  throw InputError(std::string(command) +
                   " expects a coordinate or abstract arrangement; use 'proj' for projective input");
}

std::vector<std::string> vertex_labels(const Document& doc) {
  if (const auto* c = std::get_if<CoordinateArrangement>(&doc)) return prime_labels(*c);
  if (const auto* x = std::get_if<ProjectiveVariety>(&doc)) return x->labels();
  return default_prime_labels(std::get<AbstractArrangement>(doc).size());
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto parsed = load(cfg, err);
  const auto arr = require_affine(parsed.document, "analyze");
  AnalyzeOptions opts;
  opts.bruteforce_cap = cfg.bruteforce_cap;
  opts.asserts = {cfg.depth, cfg.cd, cfg.ambient};
  const auto report = analyze(arr, opts);
  if (cfg.format == Format::md) {
    out << to_markdown(report);
  } else {
    emit(out, to_json(report));
  }
  return cfg.check && !report.all_checks_passed() ? kCheckFailed : kOk;
}

int cmd_gamma(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto parsed = load(cfg, err);
  const auto labels = vertex_labels(parsed.document);
  const auto g = std::holds_alternative<ProjectiveVariety>(parsed.document)
                     ? gamma_proj(std::get<ProjectiveVariety>(parsed.document), cfg.threshold)
                     : gamma(require_affine(parsed.document, "gamma"), cfg.threshold);
  if (cfg.format == Format::dot) {
    out << to_dot(g, labels);
  } else {
    emit(out, to_json(g, labels));
  }
  return kOk;
}

int cmd_conn(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto parsed = load(cfg, err);
  const auto arr = require_affine(parsed.document, "conn");
  Json j;
  j["d"] = arr.dim();
  j["s"] = arr.size();
  if (arr.dim() >= 2) {
    j["graph"] = to_json(conn_dim(arr));
  } else {
    j["graph"] = nullptr;
    j["note"] = "dim <= 1: graph method undefined; cover search used";
  }
  if (cfg.oracle || arr.dim() < 2) j["oracle"] = to_json(conn_dim_bruteforce(arr, cfg.bruteforce_cap));
  emit(out, j);
  if (cfg.oracle && arr.dim() >= 2 && j["graph"]["c"] != j["oracle"]["c"]) return kCheckFailed;
  return kOk;
}

int cmd_section(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto parsed = load(cfg, err);
  auto arr = require_affine(parsed.document, "section");
  Json checks = Json::array();
  bool ok = true;
  for (int k = 0; k < cfg.iterate; ++k) {
    if (cfg.check) {
      const auto sp = section_profile_check(arr);
      ok = ok && sp.check.passed;
      checks.push_back({{"step", k + 1}, {"name", sp.check.name}, {"passed", sp.check.passed},
                        {"detail", sp.check.detail}});
      if (arr.size() > 1) {
        const auto sc = section_conn_check(arr);
        ok = ok && sc.passed;
        checks.push_back({{"step", k + 1}, {"name", sc.name}, {"passed", sc.passed},
                          {"detail", sc.detail}});
      }
    }
    arr = generic_section(arr);
  }
  Json j{{"result", to_json(arr)}};
  if (cfg.check) j["checks"] = std::move(checks);
  emit(out, j);
  return ok ? kOk : kCheckFailed;
}

int cmd_proj(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto parsed = load(cfg, err);
  const auto* x = std::get_if<ProjectiveVariety>(&parsed.document);
  if (!x) throw InputError("proj expects an input of type 'projective'");
  const auto report = analyze_projective(*x);
  if (cfg.format == Format::md) {
    out << to_markdown(report);
  } else {
    emit(out, to_json(report));
  }
  return cfg.check && !report.all_checks_passed() ? kCheckFailed : kOk;
}

int cmd_sweep(RunConfig cfg, std::ostream& out, std::ostream&) {
  cfg.sweep.bruteforce_cap = cfg.bruteforce_cap;
  if (!cfg.repro_dir.empty()) cfg.sweep.repro_dir = cfg.repro_dir;
  const auto summary = sweep(cfg.sweep);
  Json tallies = Json::object();
  for (const auto& [name, t] : summary.tallies) {
    tallies[name] = {{"run", t.run}, {"failed", t.failed}};
  }
  Json failures = Json::array();
  for (const auto& f : summary.failures) {
    Json entry{{"check", f.check}, {"instance", f.instance}, {"detail", f.detail}};
    if (f.repro_file) entry["repro"] = f.repro_file->string();
    failures.push_back(std::move(entry));
  }
  emit(out, Json{{"mode", cfg.sweep.exhaustive ? "exhaustive" : "random"},
                 {"seed", cfg.sweep.seed},
                 {"max_n", cfg.sweep.max_n},
                 {"max_s", cfg.sweep.max_s},
                 {"instances", summary.instances},
                 {"checks", std::move(tallies)},
                 {"failures", std::move(failures)}});
  return summary.ok() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Connectedness and Lyubeznik-number invariants of subspace arrangements",
               "lyubgraph"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Full invariant report");
  add_input(analyze_cmd, cfg);
  add_format_flags(analyze_cmd, cfg, true, false);
  analyze_cmd->add_option("--depth", cfg.depth, "Asserted depth(A)");
  auto* cd = analyze_cmd->add_option("--cd", cfg.cd, "Asserted cd(I, R)");
  auto* ambient = analyze_cmd->add_option("--ambient", cfg.ambient, "Dimension n of R");
  cd->needs(ambient);
  analyze_cmd->add_flag("--check", cfg.check, "Exit 1 when a check fails");
  analyze_cmd->add_option("--max-bruteforce", cfg.bruteforce_cap, "Cover-search cap")
      ->check(CLI::PositiveNumber);

  auto* gamma_cmd = app.add_subcommand("gamma", "The graph Gamma_t");
  add_input(gamma_cmd, cfg);
  add_format_flags(gamma_cmd, cfg, false, true);
  gamma_cmd->add_option("--t", cfg.threshold, "Threshold t")->required();

  auto* conn_cmd = app.add_subcommand("conn", "Connectedness dimension");
  add_input(conn_cmd, cfg);
  conn_cmd->add_flag("--oracle", cfg.oracle, "Also run the cover search");
  conn_cmd->add_option("--max-bruteforce", cfg.bruteforce_cap, "Cover-search cap")
      ->check(CLI::PositiveNumber);

  auto* section_cmd = app.add_subcommand("section", "Generic hyperplane section");
  add_input(section_cmd, cfg);
  section_cmd->add_option("--iterate", cfg.iterate, "Number of sections")
      ->check(CLI::NonNegativeNumber);
  section_cmd->add_flag("--check", cfg.check, "Check invariance at every step");

  auto* proj_cmd = app.add_subcommand("proj", "Projective variety report");
  add_input(proj_cmd, cfg);
  add_format_flags(proj_cmd, cfg, true, false);
  proj_cmd->add_flag("--check", cfg.check, "Exit 1 when a check fails");

  auto* sweep_cmd = app.add_subcommand("sweep", "Property sweep over generated arrangements");
  sweep_cmd->add_option("--max-n", cfg.sweep.max_n, "Largest variable count");
  sweep_cmd->add_option("--max-s", cfg.sweep.max_s, "Largest prime count");
  sweep_cmd->add_flag("--exhaustive", cfg.sweep.exhaustive, "Enumerate every instance");
  sweep_cmd->add_option("--seed", cfg.sweep.seed, "Random seed");
  sweep_cmd->add_option("--count", cfg.sweep.count, "Random instance count");
  sweep_cmd->add_option("--repro-dir", cfg.repro_dir, "Directory for failing instances");
  sweep_cmd->add_option("--max-bruteforce", cfg.bruteforce_cap, "Cover-search cap")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(cfg, out, err);
    if (*gamma_cmd) return cmd_gamma(cfg, out, err);
    if (*conn_cmd) return cmd_conn(cfg, out, err);
    if (*section_cmd) return cmd_section(cfg, out, err);
    if (*proj_cmd) return cmd_proj(cfg, out, err);
    if (*sweep_cmd) return cmd_sweep(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace lyubgraph::cli
