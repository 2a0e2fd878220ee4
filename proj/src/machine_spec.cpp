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


#include "chemqfa/machine_spec.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <utility>

#include "chemqfa/errors.hpp"

namespace chemqfa {

std::string_view role_name(StateRole role) {
  switch (role) {
    case StateRole::kNonHalting:
      return "non";
    case StateRole::kAccept:
      return "accept";
    case StateRole::kReject:
      return "reject";
  }
  return "non";
}

std::optional<StateRole> parse_role(std::string_view text) {
  if (text == "non") return StateRole::kNonHalting;
  if (text == "accept") return StateRole::kAccept;
  if (text == "reject") return StateRole::kReject;
  return std::nullopt;
}

std::string TwoWayQfaSpec::tape_alphabet() const {
  return input_alphabet + kLeftEndMarker + kRightEndMarker;
}

bool TwoWayQfaSpec::in_input_alphabet(char symbol) const {
  return input_alphabet.find(symbol) != std::string::npos;
}

std::optional<std::size_t> TwoWayQfaSpec::find_state(std::string_view state) const {
  auto it = std::find(states.begin(), states.end(), state);
  if (it == states.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states.begin());
}

std::size_t TwoWayQfaSpec::state_index(std::string_view state) const {
  auto index = find_state(state);
  if (!index) throw SpecError("unknown state '" + std::string(state) + "'");
  return *index;
}

const Matrix& TwoWayQfaSpec::unitary(char symbol) const {
  auto it = unitaries.find(symbol);
  if (it == unitaries.end()) throw SpecError("no unitary for tape symbol '" + std::string(1, symbol) + "'");
  return it->second;
}

void TwoWayQfaSpec::check_structure() const {
  const auto n = states.size();
  if (n == 0) throw SpecError("machine has no states");
  if (roles.size() != n || head.size() != n) throw SpecError("roles and head function must cover every state");
  if (initial_state >= n) throw SpecError("initial state out of range");
  if (std::set<std::string>(states.begin(), states.end()).size() != n) throw SpecError("duplicate state names");
  for (char c : input_alphabet) {
    if (c == kLeftEndMarker || c == kRightEndMarker) throw SpecError("end-markers cannot be input symbols");
  }
  if (std::set<char>(input_alphabet.begin(), input_alphabet.end()).size() != input_alphabet.size()) {
    throw SpecError("duplicate input symbols");
  }
  for (char c : tape_alphabet()) {
    const Matrix& v = unitary(c);
    if (v.rows() != static_cast<Eigen::Index>(n) || v.cols() != static_cast<Eigen::Index>(n)) {
      throw SpecError("V_" + std::string(1, c) + " has the wrong shape");
    }
  }
  if (unitaries.size() != tape_alphabet().size()) throw SpecError("unitary given for a symbol outside the tape alphabet");
}

Complex amplitude_of(const TwoWayQfaSpec& spec, std::size_t source, char symbol, std::size_t target,
                     Direction direction) {
  if (spec.head[target] != direction) return 0.0;
  return spec.unitary(symbol)(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(source));
}

void PartialTable::add_state(std::string state, StateRole role, Direction direction) {
  states.push_back(std::move(state));
  roles.push_back(role);
  head.push_back(direction);
}

void PartialTable::add_row(std::string source, char symbol, std::string target, Complex amplitude) {
  rows.push_back({std::move(source), symbol, std::move(target), amplitude});
}

namespace {

std::size_t lookup(const std::vector<std::string>& states, const std::string& name) {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) throw SpecError("unknown state '" + name + "' in transition table");
  return static_cast<std::size_t>(it - states.begin());
}

Eigen::VectorXcd orthogonal_residual(const Matrix& v, const std::vector<bool>& filled, Eigen::Index basis) {
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(v.rows());
  r(basis) = 1.0;
  // Two passes of classical Gram-Schmidt keep the residual orthogonal to working precision.
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
      if (!filled[static_cast<std::size_t>(c)]) continue;
      r -= v.col(c).dot(r) * v.col(c);
    }
  }
  return r;
}

Matrix complete_symbol(const PartialTable& table, char symbol, std::vector<PaddedEntry>& padded) {
  const auto n = table.states.size();
  const auto dim = static_cast<Eigen::Index>(n);
  Matrix v = Matrix::Zero(dim, dim);
  std::vector<bool> filled(n, false);
  std::map<std::pair<std::size_t, std::size_t>, Complex> seen;

  for (const auto& row : table.rows) {
    if (row.symbol != symbol) continue;
    const auto src = lookup(table.states, row.source);
    const auto dst = lookup(table.states, row.target);
    auto [it, inserted] = seen.emplace(std::pair{src, dst}, row.amplitude);
    if (!inserted) {
      if (std::abs(it->second - row.amplitude) > kTolerance) {
        throw CompletionError(symbol, row.source, row.source, "lists conflicting amplitudes for " + row.target);
      }
      continue;
    }
    v(static_cast<Eigen::Index>(dst), static_cast<Eigen::Index>(src)) = row.amplitude;
    filled[src] = true;
  }

  for (std::size_t a = 0; a < n; ++a) {
    if (!filled[a]) continue;
    const auto ca = static_cast<Eigen::Index>(a);
    if (std::abs(v.col(ca).squaredNorm() - 1.0) > kTolerance) {
      throw CompletionError(symbol, table.states[a], table.states[a], "is not a unit vector");
    }
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!filled[b]) continue;
      if (std::abs(v.col(ca).dot(v.col(static_cast<Eigen::Index>(b)))) > kTolerance) {
        throw CompletionError(symbol, table.states[a], table.states[b], "are not orthogonal");
      }
    }
  }

  // Basis states not touched by any given column can be used as whole columns.
  std::vector<bool> free_basis(n, true);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      if (std::abs(v(r, c)) > kTolerance) free_basis[static_cast<std::size_t>(r)] = false;
    }
  }

  auto take_free = [&](bool rejecting_only) -> std::optional<std::size_t> {
    for (std::size_t t = 0; t < n; ++t) {
      if (!free_basis[t]) continue;
      if (rejecting_only && table.roles[t] != StateRole::kReject) continue;
      free_basis[t] = false;
      return t;
    }
    return std::nullopt;
  };

  for (std::size_t src = 0; src < n; ++src) {
    if (filled[src]) continue;
    const auto col = static_cast<Eigen::Index>(src);
    auto target = take_free(true);
    if (!target) target = take_free(false);
    if (target) {
      v(static_cast<Eigen::Index>(*target), col) = 1.0;
    } else {
      Eigen::VectorXcd best;
      double best_norm = 0.0;
      for (Eigen::Index t = 0; t < dim; ++t) {
        Eigen::VectorXcd r = orthogonal_residual(v, filled, t);
        if (r.norm() > best_norm + 1e-12) {
          best_norm = r.norm();
          best = std::move(r);
        }
      }
      if (best_norm < 1e-6) throw CompletionError(symbol, table.states[src], table.states[src], "has no room left");
      v.col(col) = best / best_norm;
    }
    filled[src] = true;
    padded.push_back({symbol, table.states[src]});
  }
  return v;
}

}  // namespace

TwoWayQfaSpec complete_partial_table(const PartialTable& table) {
  TwoWayQfaSpec spec;
  spec.name = table.name;
  spec.path_count = table.path_count;
  spec.states = table.states;
  spec.roles = table.roles;
  spec.head = table.head;
  spec.input_alphabet = table.input_alphabet;
  if (spec.states.empty()) throw SpecError("machine has no states");
  spec.initial_state = lookup(table.states, table.initial_state);
  for (char symbol : spec.tape_alphabet()) {
    spec.unitaries.emplace(symbol, complete_symbol(table, symbol, spec.padded_entries));
  }
  for (const auto& row : table.rows) {
    if (spec.tape_alphabet().find(row.symbol) == std::string::npos) {
      throw SpecError("transition row reads '" + std::string(1, row.symbol) + "', which is not a tape symbol");
    }
  }
  spec.check_structure();
  return spec;
}

double WellFormednessReport::max_violation() const {
  return std::max({unitarity.max_violation, local_probability.max_violation, separability1.max_violation,
                   separability2.max_violation});
}

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void record(ConditionCheck& check, double violation, double tolerance) {
  check.max_violation = std::max(check.max_violation, violation);
  check.ok = check.max_violation < tolerance;
}

}  // namespace

WellFormednessReport validate(const TwoWayQfaSpec& spec, double tolerance) {
  WellFormednessReport report;
  report.padded_entries = spec.padded_entries;
  const auto n = spec.num_states();
  const auto dim = static_cast<Eigen::Index>(n);
  const std::string tape = spec.tape_alphabet();
  constexpr Direction kDirections[] = {Direction::kLeft, Direction::kStay, Direction::kRight};

  // delta[symbol][d](q', q) = amplitude_of(q, symbol, q', d)
  std::map<char, std::array<Matrix, 3>> delta;
  for (char symbol : tape) {
    auto& parts = delta[symbol];
    for (int d = 0; d < 3; ++d) {
      parts[d] = Matrix::Zero(dim, dim);
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t target = 0; target < n; ++target) {
          parts[d](static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(q)) =
              amplitude_of(spec, q, symbol, target, kDirections[d]);
        }
      }
    }
  }
  const Matrix identity = Matrix::Identity(dim, dim);

  for (char symbol : tape) {
    const Matrix& v = spec.unitary(symbol);
    const double deviation = max_abs(v.adjoint() * v - identity);
    report.unitarity_by_symbol[symbol] = deviation;
    record(report.unitarity, deviation, tolerance);

    const auto& parts = delta.at(symbol);
    Matrix gram = Matrix::Zero(dim, dim);
    for (const auto& part : parts) gram += part.adjoint() * part;
    record(report.local_probability, max_abs(gram - identity), tolerance);
  }

  for (char first : tape) {
    const auto& a = delta.at(first);
    for (char second : tape) {
      const auto& b = delta.at(second);
      // index 0 = left, 1 = stay, 2 = right
      record(report.separability1, max_abs(a[2].adjoint() * b[1] + a[1].adjoint() * b[0]), tolerance);
      record(report.separability2, max_abs(a[2].adjoint() * b[0]), tolerance);
    }
  }
  return report;
}

}  // namespace chemqfa
