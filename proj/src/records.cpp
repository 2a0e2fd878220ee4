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


#include "chemqfa/records.hpp"

#include <charconv>
#include <sstream>

#include "chemqfa/errors.hpp"
#include "json.hpp"

namespace chemqfa {

namespace {

using Json = nlohmann::ordered_json;

Json entry_json(const SweepEntry& e) {
  Json j;
  j["word"] = e.word;
  j["oracle"] = e.oracle;
  j["machine_accepts"] = e.machine;
  j["p_accept"] = e.p_accept;
  j["p_reject"] = e.p_reject;
  j["p_residual"] = e.p_residual;
  j["steps"] = e.steps;
  j["halted"] = e.halted;
  return j;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_probability(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string format_record(const RunRecord& record) {
  Json j;
  j["machine"] = record.machine;
  j["N"] = record.n_paths;
  j["word"] = record.word;
  j["p_accept"] = record.result.p_accept;
  j["p_reject"] = record.result.p_reject;
  j["p_residual"] = record.result.p_residual;
  j["steps"] = record.result.steps;
  j["halted"] = record.result.halted;
  if (!record.result.trace.empty()) {
    Json trace = Json::array();
    for (const auto& t : record.result.trace) trace.push_back({t.p_accept, t.p_reject, t.residual});
    j["trace"] = std::move(trace);
  }
  return j.dump();
}

RunRecord parse_record(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed record: ") + e.what());
  }
  try {
    RunRecord r;
    r.machine = j.at("machine").get<std::string>();
    r.n_paths = j.at("N").get<std::size_t>();
    r.word = j.at("word").get<std::string>();
    r.result.p_accept = j.at("p_accept").get<double>();
    r.result.p_reject = j.at("p_reject").get<double>();
    r.result.p_residual = j.at("p_residual").get<double>();
    r.result.steps = j.at("steps").get<std::size_t>();
    r.result.halted = j.at("halted").get<bool>();
    if (j.contains("trace")) {
      for (const auto& t : j["trace"]) {
        r.result.trace.push_back({t.at(0).get<double>(), t.at(1).get<double>(), t.at(2).get<double>()});
      }
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("record is missing a field: ") + e.what());
  }
}

std::string format_csv_row(const RunRecord& record) {
  std::ostringstream out;
  out << record.machine << ',' << record.n_paths << ',' << record.word << ','
      << format_probability(record.result.p_accept) << ',' << format_probability(record.result.p_reject) << ','
      << format_probability(record.result.p_residual) << ',' << record.result.steps << ','
      << flag(record.result.halted);
  return out.str();
}

std::string report_to_structured(const DiscrepancyReport& report) {
  Json j;
  j["machine"] = report.machine;
  j["N"] = report.n_paths;
  j["language"] = std::string(language_name(report.language));
  j["max_len"] = report.max_len;
  j["words_checked"] = report.words_checked;
  j["agreements"] = report.agreements;
  j["discrepancy_count"] = report.discrepancies.size();
  j["non_halting"] = report.non_halting;
  j["empty_word"] = entry_json(report.empty_word);
  j["bounds_checked"] = report.bounds_checked;
  Json violations = Json::array();
  for (const auto& v : report.bound_violations) {
    violations.push_back({{"word", v.word}, {"requirement", v.requirement}, {"p_accept", v.p_accept},
                          {"p_reject", v.p_reject}});
  }
  j["bound_violations"] = std::move(violations);
  Json rows = Json::array();
  for (const auto& e : report.discrepancies) rows.push_back(entry_json(e));
  j["discrepancies"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string report_to_csv(const DiscrepancyReport& report) {
  std::ostringstream out;
  out << kReportCsvHeader << '\n';
  for (const auto& e : report.discrepancies) {
    out << report.machine << ',' << report.n_paths << ',' << language_name(report.language) << ',' << e.word << ','
        << flag(e.oracle) << ',' << flag(e.machine) << ',' << format_probability(e.p_accept) << ','
        << format_probability(e.p_reject) << ',' << format_probability(e.p_residual) << ',' << e.steps << ','
        << flag(e.halted) << '\n';
  }
  return out.str();
}

std::string report_to_human(const DiscrepancyReport& report) {
  std::ostringstream out;
  out << "machine " << report.machine << " (N = " << report.n_paths << ") vs " << language_name(report.language)
      << ", words up to length " << report.max_len << '\n';
  out << "  checked " << report.words_checked << ", agree " << report.agreements << ", disagree "
      << report.discrepancies.size() << ", non-halting " << report.non_halting << '\n';
  out << "  empty word: machine " << (report.empty_word.machine ? "accepts" : "rejects") << ", oracle "
      << (report.empty_word.oracle ? "accepts" : "rejects") << '\n';
  if (report.bounds_checked) {
    out << "  probability bounds: " << report.bound_violations.size() << " violation(s)\n";
    for (const auto& v : report.bound_violations) {
      out << "    '" << v.word << "' needs " << v.requirement << " (p_accept " << format_probability(v.p_accept)
          << ", p_reject " << format_probability(v.p_reject) << ")\n";
    }
  }
  for (const auto& e : report.discrepancies) {
    out << "  '" << e.word << "': oracle " << (e.oracle ? "accept" : "reject") << ", machine "
        << (e.machine ? "accept" : "reject") << " (p_accept " << format_probability(e.p_accept) << ")\n";
  }
  return out.str();
}

}  // namespace chemqfa
