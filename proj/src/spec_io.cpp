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


#include "chemqfa/spec_io.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "chemqfa/errors.hpp"

namespace chemqfa {

namespace {

constexpr std::string_view kHeader = "; chemqfa machine v1";

std::string format_double(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string format_direction(Direction d) {
  switch (d) {
    case Direction::kLeft:
      return "-1";
    case Direction::kStay:
      return "0";
    case Direction::kRight:
      return "+1";
  }
  return "0";
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_double(std::string_view token, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "bad number '" + std::string(token) + "'");
  }
  return value;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "bad count '" + std::string(token) + "'");
  }
  return value;
}

char parse_symbol(std::string_view token, std::size_t line) {
  if (token.size() != 1) throw ParseError(line, "tape symbols are single characters, got '" + std::string(token) + "'");
  return token.front();
}

Direction parse_direction(std::string_view token, std::size_t line) {
  if (token == "-1") return Direction::kLeft;
  if (token == "0") return Direction::kStay;
  if (token == "+1" || token == "1") return Direction::kRight;
  throw ParseError(line, "head direction must be -1, 0 or +1");
}

struct ParsedFile {
  PartialTable table;
  std::vector<PaddedEntry> padded;
  bool has_padded = false;
};

ParsedFile parse(std::string_view text) {
  ParsedFile file;
  PartialTable& t = file.table;
  bool have_initial = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    const auto line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens.front().starts_with(";")) continue;
    const auto key = tokens.front();
    auto expect = [&](std::size_t count) {
      if (tokens.size() != count) {
        throw ParseError(line_no, "'" + std::string(key) + "' takes " + std::to_string(count - 1) + " fields");
      }
    };
    if (key == "machine") {
      expect(2);
      t.name = tokens[1];
    } else if (key == "paths") {
      expect(2);
      t.path_count = parse_count(tokens[1], line_no);
    } else if (key == "alphabet") {
      if (tokens.size() > 2) throw ParseError(line_no, "'alphabet' takes 1 field");
      t.input_alphabet = tokens.size() == 2 ? std::string(tokens[1]) : std::string{};
    } else if (key == "initial") {
      expect(2);
      t.initial_state = tokens[1];
      have_initial = true;
    } else if (key == "state") {
      expect(4);
      auto role = parse_role(tokens[2]);
      if (!role) throw ParseError(line_no, "state role must be non, accept or reject");
      t.add_state(std::string(tokens[1]), *role, parse_direction(tokens[3], line_no));
    } else if (key == "row") {
      expect(6);
      t.add_row(std::string(tokens[2]), parse_symbol(tokens[1], line_no), std::string(tokens[3]),
                Complex(parse_double(tokens[4], line_no), parse_double(tokens[5], line_no)));
    } else if (key == "padded") {
      expect(3);
      file.padded.push_back({parse_symbol(tokens[1], line_no), std::string(tokens[2])});
      file.has_padded = true;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!have_initial) throw ParseError(line_no, "missing 'initial' directive");
  return file;
}

}  // namespace

std::string write_spec(const TwoWayQfaSpec& spec) {
  spec.check_structure();
  std::ostringstream out;
  out << kHeader << '\n';
  if (!spec.name.empty()) out << "machine " << spec.name << '\n';
  out << "paths " << spec.path_count << '\n';
  out << "alphabet " << spec.input_alphabet << '\n';
  out << "initial " << spec.states[spec.initial_state] << '\n';
  for (std::size_t q = 0; q < spec.num_states(); ++q) {
    out << "state " << spec.states[q] << ' ' << role_name(spec.roles[q]) << ' ' << format_direction(spec.head[q])
        << '\n';
  }
  for (char symbol : spec.tape_alphabet()) {
    const Matrix& v = spec.unitary(symbol);
    for (Eigen::Index src = 0; src < v.cols(); ++src) {
      for (Eigen::Index dst = 0; dst < v.rows(); ++dst) {
        const Complex a = v(dst, src);
        if (a == Complex{}) continue;
        out << "row " << symbol << ' ' << spec.states[static_cast<std::size_t>(src)] << ' '
            << spec.states[static_cast<std::size_t>(dst)] << ' ' << format_double(a.real()) << ' '
            << format_double(a.imag()) << '\n';
      }
    }
  }
  for (const auto& p : spec.padded_entries) out << "padded " << p.symbol << ' ' << p.source << '\n';
  return out.str();
}

PartialTable read_partial_table(std::string_view text) { return parse(text).table; }

namespace {

bool every_column_given(const PartialTable& t) {
  const std::string tape = t.input_alphabet + kLeftEndMarker + kRightEndMarker;
  std::set<std::pair<char, std::string>> given;
  for (const auto& row : t.rows) given.emplace(row.symbol, row.source);
  return given.size() == tape.size() * t.states.size();
}

/// Installs the rows without any orthonormality checks, so that the validator sees the machine as written.
TwoWayQfaSpec load_verbatim(const PartialTable& t) {
  TwoWayQfaSpec spec;
  spec.name = t.name;
  spec.path_count = t.path_count;
  spec.states = t.states;
  spec.roles = t.roles;
  spec.head = t.head;
  spec.input_alphabet = t.input_alphabet;
  spec.initial_state = spec.state_index(t.initial_state);
  const auto dim = static_cast<Eigen::Index>(t.states.size());
  for (char symbol : spec.tape_alphabet()) spec.unitaries.emplace(symbol, Matrix::Zero(dim, dim));
  for (const auto& row : t.rows) {
    auto it = spec.unitaries.find(row.symbol);
    if (it == spec.unitaries.end()) throw SpecError("row reads '" + std::string(1, row.symbol) + "', which is not a tape symbol");
    it->second(static_cast<Eigen::Index>(spec.state_index(row.target)),
               static_cast<Eigen::Index>(spec.state_index(row.source))) = row.amplitude;
  }
  spec.check_structure();
  return spec;
}

}  // namespace

TwoWayQfaSpec read_spec(std::string_view text) {
  ParsedFile file = parse(text);
  TwoWayQfaSpec spec = every_column_given(file.table) ? load_verbatim(file.table) : complete_partial_table(file.table);
  if (file.has_padded) spec.padded_entries = std::move(file.padded);
  return spec;
}

}  // namespace chemqfa
