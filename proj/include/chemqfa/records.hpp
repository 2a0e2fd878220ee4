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


#ifndef CHEMQFA_RECORDS_HPP
#define CHEMQFA_RECORDS_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "chemqfa/baselines.hpp"
#include "chemqfa/simulator.hpp"

namespace chemqfa {

/// One run, as emitted by the CLI.
struct RunRecord {
  std::string machine;
  std::size_t n_paths = 1;
  std::string word;
  RunResult result;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Column order shared by the structured and CSV forms.
inline constexpr std::string_view kRunCsvHeader = "machine,N,word,p_accept,p_reject,p_residual,steps,halted";

/// Single-line JSON object with keys in column order; "trace" is appended when present.
std::string format_record(const RunRecord& record);
/// Inverse of format_record. Throws ParseError on malformed input.
RunRecord parse_record(std::string_view line);

std::string format_csv_row(const RunRecord& record);

std::string report_to_structured(const DiscrepancyReport& report);
inline constexpr std::string_view kReportCsvHeader =
    "machine,N,language,word,oracle,machine_accepts,p_accept,p_reject,p_residual,steps,halted";

/// Header plus one row per discrepancy. Summary counts live in the structured form.
std::string report_to_csv(const DiscrepancyReport& report);
std::string report_to_human(const DiscrepancyReport& report);

/// Shortest decimal form that parses back to the same double.
std::string format_probability(double x);

}  // namespace chemqfa

#endif  // CHEMQFA_RECORDS_HPP
