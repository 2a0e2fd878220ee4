// Copyright 2026 The chemqfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "chemqfa/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "chemqfa/baselines.hpp"
#include "chemqfa/chem.hpp"
#include "chemqfa/errors.hpp"
#include "chemqfa/machines.hpp"
#include "chemqfa/records.hpp"
#include "chemqfa/simulator.hpp"
#include "chemqfa/spec_io.hpp"
#include "json.hpp"

namespace chemqfa::cli {

namespace {

class UsageError : public Error {
 public:
  UsageError(std::string flag, const std::string& what) : Error(what), flag_(std::move(flag)) {}
  const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

bool is_builtin(const std::string& machine) { return machine == "m1" || machine == "m2" || machine == "m3"; }

std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(flag, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TwoWayQfaSpec load_machine(const CliConfig& c) {
  if (c.machine.empty()) throw UsageError("--machine", "--machine is required");
  if (c.machine == "m1") {
    if (c.n_paths) throw UsageError("--n-paths", "--n-paths is not accepted for m1");
    return build_m1();
  }
  if (is_builtin(c.machine)) {
    if (!c.n_paths) throw UsageError("--n-paths", "--n-paths is required for " + c.machine);
    if (*c.n_paths < 2) throw UsageError("--n-paths", "--n-paths must be at least 2");
    return build_machine(c.machine, *c.n_paths);
  }
  if (c.n_paths) throw UsageError("--n-paths", "--n-paths is not accepted for machine files");
  try {
    return read_spec(read_file(c.machine, "--machine"));
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError("--machine", c.machine + ": " + e.what());
  }
}

/// Lets users type o/c for parentheses without shell quoting.
std::string apply_aliases(const TwoWayQfaSpec& spec, std::string word) {
  if (!spec.in_input_alphabet('(') || !spec.in_input_alphabet(')')) return word;
  if (spec.in_input_alphabet('o') || spec.in_input_alphabet('c')) return word;
  for (char& ch : word) {
    if (ch == 'o') ch = '(';
    if (ch == 'c') ch = ')';
  }
  return word;
}

void print_run_human(std::ostream& out, const RunRecord& r) {
  out << "machine " << r.machine << " (N = " << r.n_paths << "), word \"" << r.word << "\"\n"
      << "  p_accept   " << format_probability(r.result.p_accept) << '\n'
      << "  p_reject   " << format_probability(r.result.p_reject) << '\n'
      << "  p_residual " << format_probability(r.result.p_residual) << '\n'
      << "  steps      " << r.result.steps << (r.result.halted ? " (halted)" : " (step budget exhausted)") << '\n';
  for (std::size_t i = 0; i < r.result.trace.size(); ++i) {
    const auto& t = r.result.trace[i];
    out << "  step " << i + 1 << ": accept " << format_probability(t.p_accept) << ", reject "
        << format_probability(t.p_reject) << ", residual " << format_probability(t.residual) << '\n';
  }
}

int do_validate(const CliConfig& c, std::ostream& out) {
  const TwoWayQfaSpec spec = load_machine(c);
  const WellFormednessReport report = validate(spec);
  if (c.export_path) {
    std::ofstream file(*c.export_path, std::ios::binary);
    if (!file) throw UsageError("--export", "cannot write '" + *c.export_path + "'");
    file << write_spec(spec);
  }
  if (c.format == OutputFormat::kStructured) {
    nlohmann::ordered_json j;
    j["machine"] = spec.name;
    j["N"] = spec.path_count;
    j["states"] = spec.num_states();
    j["ok"] = report.ok();
    auto cond = [](const ConditionCheck& k) { return nlohmann::ordered_json{{"ok", k.ok}, {"max_violation", k.max_violation}}; };
    j["unitarity"] = cond(report.unitarity);
    j["local_probability"] = cond(report.local_probability);
    j["separability1"] = cond(report.separability1);
    j["separability2"] = cond(report.separability2);
    j["padded_entries"] = report.padded_entries.size();
    out << j.dump() << '\n';
  } else if (c.format == OutputFormat::kCsv) {
    out << "machine,N,condition,ok,max_violation\n";
    const std::pair<const char*, const ConditionCheck*> rows[] = {{"unitarity", &report.unitarity},
                                                                   {"local_probability", &report.local_probability},
                                                                   {"separability1", &report.separability1},
                                                                   {"separability2", &report.separability2}};
    for (const auto& [name, k] : rows) {
      out << spec.name << ',' << spec.path_count << ',' << name << ',' << (k->ok ? "true" : "false") << ','
          << format_probability(k->max_violation) << '\n';
    }
  } else {
    out << "machine " << spec.name << " (N = " << spec.path_count << ", " << spec.num_states() << " states)\n";
    auto line = [&out](const char* name, const ConditionCheck& k) {
      out << "  " << std::left << std::setw(18) << name << (k.ok ? "pass" : "FAIL") << "  max violation "
          << format_probability(k.max_violation) << '\n';
    };
    line("unitarity", report.unitarity);
    line("local probability", report.local_probability);
    line("separability (1)", report.separability1);
    line("separability (2)", report.separability2);
    out << "  padded entries    " << report.padded_entries.size() << '\n';
    out << (report.ok() ? "all conditions pass\n" : "well-formedness FAILED\n");
  }
  return report.ok() ? kExitOk : kExitValidationFailure;
}

int do_run(const CliConfig& c, std::ostream& out) {
  if (c.word.has_value() == c.recipe_path.has_value()) {
    throw UsageError(c.word ? "--recipe" : "--word", "give exactly one of --word and --recipe");
  }
  const TwoWayQfaSpec spec = load_machine(c);
  std::optional<Recipe> recipe;
  std::string word;
  if (c.recipe_path) {
    try {
      recipe = parse_recipe(read_file(*c.recipe_path, "--recipe"));
      word = transcribe(*recipe);
    } catch (const Error& e) {
      throw UsageError("--recipe", e.what());
    }
  } else {
    word = apply_aliases(spec, *c.word);
  }
  try {
    check_word(spec, word);
  } catch (const SymbolError& e) {
    throw UsageError(c.recipe_path ? "--recipe" : "--word", e.what());
  }
  if (c.max_steps && *c.max_steps < 1) throw UsageError("--max-steps", "--max-steps must be at least 1");
  if (!(c.halt_threshold > 0.0 && c.halt_threshold < 1.0)) {
    throw UsageError("--halt-threshold", "--halt-threshold must lie in (0, 1)");
  }

  RunOptions options;
  options.max_steps = c.max_steps;
  options.halt_threshold = c.halt_threshold;
  options.trace = c.trace;
  const RunRecord record{spec.name, spec.path_count, word, run(spec, word, options)};

  switch (c.format) {
    case OutputFormat::kStructured:
      out << format_record(record) << '\n';
      break;
    case OutputFormat::kCsv:
      out << kRunCsvHeader << '\n' << format_csv_row(record) << '\n';
      break;
    case OutputFormat::kHuman:
      print_run_human(out, record);
      if (recipe) {
        const Signature sig = signature(recipe->system, record.result, word);
        out << "  signature  " << (sig.verdict == Verdict::kAccept ? "accept: " : "reject: ") << sig.descriptor
            << '\n';
      }
      break;
  }
  return kExitOk;
}

int do_sweep(const CliConfig& c, std::ostream& out) {
  const TwoWayQfaSpec spec = load_machine(c);
  auto language = parse_language(c.language);
  if (!language) throw UsageError("--language", "unknown language '" + c.language + "'");
  if (c.max_len > kMaxSweepLength) {
    throw UsageError("--max-len", "--max-len must be at most " + std::to_string(kMaxSweepLength));
  }
  SweepOptions options;
  options.run.max_steps = c.max_steps;
  options.run.halt_threshold = c.halt_threshold;
  options.threads = c.threads;
  DiscrepancyReport report;
  try {
    report = sweep_compare(spec, *language, c.max_len, options);
  } catch (const InvalidParameter& e) {
    throw UsageError("--language", e.what());
  }
  switch (c.format) {
    case OutputFormat::kStructured:
      out << report_to_structured(report);
      break;
    case OutputFormat::kCsv:
      out << report_to_csv(report);
      break;
    case OutputFormat::kHuman:
      out << report_to_human(report);
      break;
  }
  return report.bound_violations.empty() ? kExitOk : kExitValidationFailure;
}

int do_transcribe(const CliConfig& c, std::ostream& out) {
  if (!c.recipe_path) throw UsageError("--recipe", "--recipe is required");
  Recipe recipe;
  std::string word;
  try {
    recipe = parse_recipe(read_file(*c.recipe_path, "--recipe"));
    word = transcribe(recipe);
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError("--recipe", e.what());
  }
  const ReactionSystem& system = reaction_system(recipe.system);
  if (c.format == OutputFormat::kStructured) {
    nlohmann::ordered_json j;
    j["system"] = system.name;
    j["machine"] = system.machine;
    j["aliquots"] = recipe.aliquots.size();
    j["word"] = word;
    out << j.dump() << '\n';
  } else if (c.format == OutputFormat::kCsv) {
    out << "system,machine,aliquots,word\n"
        << system.name << ',' << system.machine << ',' << recipe.aliquots.size() << ',' << word << '\n';
  } else {
    out << word << '\n';
  }
  return kExitOk;
}

int do_qft(const CliConfig& c, std::ostream& out) {
  if (!c.n_paths || *c.n_paths < 1) throw UsageError("--n-paths", "--n-paths must be given and at least 1");
  const Matrix f = qft_matrix(*c.n_paths);
  const double deviation =
      (f.adjoint() * f - Matrix::Identity(f.rows(), f.cols())).cwiseAbs().maxCoeff();
  if (c.format == OutputFormat::kStructured) {
    nlohmann::ordered_json j;
    j["N"] = *c.n_paths;
    j["unitarity_deviation"] = deviation;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < f.rows(); ++k) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index i = 0; i < f.cols(); ++i) row.push_back({f(k, i).real(), f(k, i).imag()});
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    out << j.dump() << '\n';
  } else if (c.format == OutputFormat::kCsv) {
    out << "k,i,re,im\n";
    for (Eigen::Index k = 0; k < f.rows(); ++k) {
      for (Eigen::Index i = 0; i < f.cols(); ++i) {
        out << k + 1 << ',' << i + 1 << ',' << format_probability(f(k, i).real()) << ','
            << format_probability(f(k, i).imag()) << '\n';
      }
    }
  } else {
    out << "QFT, N = " << *c.n_paths << " (max |F^dagger F - I| = " << format_probability(deviation) << ")\n";
    out << std::fixed << std::setprecision(4);
    for (Eigen::Index k = 0; k < f.rows(); ++k) {
      out << ' ';
      for (Eigen::Index i = 0; i < f.cols(); ++i) {
        out << ' ' << std::showpos << f(k, i).real() << f(k, i).imag() << std::noshowpos << 'i';
      }
      out << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int execute(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "validate") return do_validate(config, out);
    if (config.subcommand == "run") return do_run(config, out);
    if (config.subcommand == "sweep") return do_sweep(config, out);
    if (config.subcommand == "transcribe") return do_transcribe(config, out);
    if (config.subcommand == "qft") return do_qft(config, out);
    throw UsageError("", "unknown subcommand '" + config.subcommand + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what();
    if (!e.flag().empty()) err << " [" << e.flag() << "]";
    err << '\n';
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-way quantum finite automata for chemical reaction languages", "qfachem"};
  app.require_subcommand(1);
  CliConfig config;
  std::size_t n_paths = 0;
  std::string format = "human";
  const std::map<std::string, OutputFormat> formats{
      {"human", OutputFormat::kHuman}, {"structured", OutputFormat::kStructured}, {"csv", OutputFormat::kCsv}};

  auto machine_flags = [&](CLI::App* sub) {
    sub->add_option("--machine", config.machine, "m1, m2, m3 or a machine file")->required();
    sub->add_option("--n-paths", n_paths, "number of computation paths N (m2, m3)");
  };
  auto format_flag = [&](CLI::App* sub) {
    sub->add_option("--format", format, "human, structured or csv")
        ->check(CLI::IsMember({"human", "structured", "csv"}));
  };
  auto run_limits = [&](CLI::App* sub) {
    sub->add_option("--max-steps", config.max_steps, "step budget (default 64*N*(n+2))");
    sub->add_option("--halt-threshold", config.halt_threshold, "residual mass at which a run counts as halted");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check well-formedness of a machine");
  machine_flags(validate_cmd);
  format_flag(validate_cmd);
  validate_cmd->add_option("--export", config.export_path, "write the completed machine to this file");

  CLI::App* run_cmd = app.add_subcommand("run", "run a machine on one word or recipe");
  machine_flags(run_cmd);
  format_flag(run_cmd);
  run_limits(run_cmd);
  run_cmd->add_option("--word", config.word, "input word (end-markers are added automatically)");
  run_cmd->add_option("--recipe", config.recipe_path, "recipe file to transcribe and run");
  run_cmd->add_flag("--trace", config.trace, "report probabilities after every step");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "compare a machine against a classical oracle");
  machine_flags(sweep_cmd);
  format_flag(sweep_cmd);
  run_limits(sweep_cmd);
  sweep_cmd->add_option("--language", config.language, "L1_REGEX, L1_PROSE, L2_DYCK, L2_COUNT or L3")->required();
  sweep_cmd->add_option("--max-len", config.max_len, "longest word to enumerate (at most 14)");
  sweep_cmd->add_option("--threads", config.threads, "worker threads");

  CLI::App* transcribe_cmd = app.add_subcommand("transcribe", "turn a recipe file into an input word");
  format_flag(transcribe_cmd);
  transcribe_cmd->add_option("--recipe", config.recipe_path, "recipe file")->required();

  CLI::App* qft_cmd = app.add_subcommand("qft", "print the N-way QFT matrix");
  format_flag(qft_cmd);
  qft_cmd->add_option("--n-paths", n_paths, "dimension N")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.subcommand = chosen->get_name();
  if (auto* opt = chosen->get_option_no_throw("--n-paths"); opt && opt->count() > 0) config.n_paths = n_paths;
  config.format = formats.at(format);
  return execute(config, out, err);
}

}  // namespace chemqfa::cli
