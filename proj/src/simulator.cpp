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


#include "chemqfa/simulator.hpp"

#include <algorithm>
#include <cstddef>

#include "chemqfa/errors.hpp"

namespace chemqfa {

AmplitudeVector::AmplitudeVector(std::size_t num_states, std::size_t tape_length)
    : num_states_(num_states), tape_length_(tape_length), entries_(num_states * (tape_length + 2)) {}

Complex AmplitudeVector::at(Configuration c) const {
  if (c.state >= num_states_ || c.position >= num_cells()) {
    throw InvalidParameter("configuration out of range");
  }
  return entries_[index(c)];
}

double AmplitudeVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : entries_) total += std::norm(a);
  return total;
}

std::size_t default_max_steps(const TwoWayQfaSpec& spec, std::size_t word_length) {
  return 64 * std::max<std::size_t>(spec.path_count, 1) * (word_length + 2);
}

void check_word(const TwoWayQfaSpec& spec, std::string_view word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!spec.in_input_alphabet(word[i])) throw SymbolError(word[i], i);
  }
}

std::string tape_of(std::string_view word) {
  std::string tape;
  tape.reserve(word.size() + 2);
  tape += kLeftEndMarker;
  tape += word;
  tape += kRightEndMarker;
  return tape;
}

AmplitudeVector initial_vector(const TwoWayQfaSpec& spec, std::string_view word) {
  check_word(spec, word);
  AmplitudeVector v(spec.num_states(), word.size());
  v[{spec.initial_state, 0}] = 1.0;
  return v;
}

TapeEvolution::TapeEvolution(const TwoWayQfaSpec& spec, std::string_view word)
    : tape_(tape_of(word)), num_states_(spec.num_states()) {
  check_word(spec, word);
  const std::string symbols = spec.tape_alphabet();
  columns_.resize(symbols.size());
  for (std::size_t slot = 0; slot < symbols.size(); ++slot) {
    const Matrix& v = spec.unitary(symbols[slot]);
    auto& columns = columns_[slot];
    columns.resize(num_states_);
    for (std::size_t q = 0; q < num_states_; ++q) {
      for (std::size_t target = 0; target < num_states_; ++target) {
        const Complex a = v(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(q));
        if (a == Complex{}) continue;
        const auto cells = tape_.size();
        const auto offset = static_cast<std::ptrdiff_t>(spec.head[target]);
        columns[q].push_back({target, static_cast<std::size_t>(static_cast<std::ptrdiff_t>(cells) + offset) % cells, a});
      }
    }
  }
  slot_of_cell_.reserve(tape_.size());
  for (char c : tape_) slot_of_cell_.push_back(symbols.find(c));
}

void TapeEvolution::apply(const AmplitudeVector& in, AmplitudeVector& out) const {
  const std::size_t cells = tape_.size();
  if (in.num_states() != num_states_ || in.num_cells() != cells || out.num_states() != num_states_ ||
      out.num_cells() != cells) {
    throw InvalidParameter("amplitude vector does not match the machine and tape");
  }
  std::fill(out.entries().begin(), out.entries().end(), Complex{});
  const auto& src = in.entries();
  auto& dst = out.entries();
  for (std::size_t q = 0; q < num_states_; ++q) {
    for (std::size_t j = 0; j < cells; ++j) {
      const Complex amp = src[q * cells + j];
      if (amp == Complex{}) continue;
      for (const auto& e : columns_[slot_of_cell_[j]][q]) {
        const std::size_t moved = (j + e.shift) % cells;
        dst[e.target * cells + moved] += e.amplitude * amp;
      }
    }
  }
}

AmplitudeVector step(const TwoWayQfaSpec& spec, std::string_view word, const AmplitudeVector& v) {
  TapeEvolution evolution(spec, word);
  AmplitudeVector out(spec.num_states(), word.size());
  evolution.apply(v, out);
  return out;
}

Measurement measure(const TwoWayQfaSpec& spec, const AmplitudeVector& v) {
  if (v.num_states() != spec.num_states()) throw InvalidParameter("amplitude vector does not match the machine");
  Measurement m{0.0, 0.0, v};
  const std::size_t cells = v.num_cells();
  auto& entries = m.residual.entries();
  for (std::size_t q = 0; q < spec.num_states(); ++q) {
    if (!spec.is_halting(q)) continue;
    double mass = 0.0;
    for (std::size_t j = 0; j < cells; ++j) {
      mass += std::norm(entries[q * cells + j]);
      entries[q * cells + j] = Complex{};
    }
    (spec.roles[q] == StateRole::kAccept ? m.gain_accept : m.gain_reject) += mass;
  }
  return m;
}

RunResult run(const TwoWayQfaSpec& spec, std::string_view word, const RunOptions& options) {
  const std::size_t max_steps = options.max_steps.value_or(default_max_steps(spec, word.size()));
  if (max_steps < 1) throw InvalidParameter("max_steps must be at least 1");
  if (!(options.halt_threshold > 0.0 && options.halt_threshold < 1.0)) {
    throw InvalidParameter("halt threshold must lie in (0, 1)");
  }

  TapeEvolution evolution(spec, word);
  AmplitudeVector current = initial_vector(spec, word);
  AmplitudeVector next(spec.num_states(), word.size());
  RunResult result;
  while (result.steps < max_steps) {
    evolution.apply(current, next);
    Measurement m = measure(spec, next);
    result.p_accept += m.gain_accept;
    result.p_reject += m.gain_reject;
    current = std::move(m.residual);
    result.p_residual = current.norm_squared();
    ++result.steps;
    if (options.trace) result.trace.push_back({result.p_accept, result.p_reject, result.p_residual});
    if (result.p_residual < options.halt_threshold) break;
  }
  result.halted = result.p_residual < options.halt_threshold;
  return result;
}

}  // namespace chemqfa
