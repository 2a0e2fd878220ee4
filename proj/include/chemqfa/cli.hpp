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


#ifndef CHEMQFA_CLI_HPP
#define CHEMQFA_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chemqfa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { kHuman, kStructured, kCsv };

struct CliConfig {
  std::string subcommand;
  /// "m1", "m2", "m3" or a path to a machine file.
  std::string machine;
  std::optional<std::size_t> n_paths;
  std::optional<std::string> word;
  std::optional<std::string> recipe_path;
  std::optional<std::size_t> max_steps;
  double halt_threshold = 1e-12;
  OutputFormat format = OutputFormat::kHuman;
  bool trace = false;
  std::size_t max_len = 6;
  std::string language;
  unsigned threads = 1;
  std::optional<std::string> export_path;
};

/// Runs one command line (without the program name). Returns the process exit status.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Dispatches an already-parsed configuration. Throws UsageError when it violates the flag rules.
int execute(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace chemqfa::cli

#endif  // CHEMQFA_CLI_HPP
