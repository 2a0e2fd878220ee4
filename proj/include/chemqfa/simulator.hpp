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


#ifndef CHEMQFA_SIMULATOR_HPP
#define CHEMQFA_SIMULATOR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chemqfa/machine_spec.hpp"

namespace chemqfa {

/// A (state, head position) pair. Positions index the tape "#w$", so they lie in [0, n+1].
struct Configuration {
  std::size_t state;
  std::size_t position;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Complex amplitudes over every configuration of a machine on a tape of a
/// fixed word length. Stored densely, state-major.
class AmplitudeVector {
 public:
  AmplitudeVector(std::size_t num_states, std::size_t tape_length);

  std::size_t num_states() const { return num_states_; }
  /// n = |w|; the tape itself has n + 2 cells.
  std::size_t tape_length() const { return tape_length_; }
  std::size_t num_cells() const { return tape_length_ + 2; }
  std::size_t size() const { return entries_.size(); }

  Complex& operator[](Configuration c) { return entries_[index(c)]; }
  const Complex& operator[](Configuration c) const { return entries_[index(c)]; }
  Complex at(Configuration c) const;

  double norm_squared() const;
  const std::vector<Complex>& entries() const { return entries_; }
  std::vector<Complex>& entries() { return entries_; }

  friend bool operator==(const AmplitudeVector&, const AmplitudeVector&) = default;

 private:
  std::size_t index(Configuration c) const { return c.state * num_cells() + c.position; }

  std::size_t num_states_;
  std::size_t tape_length_;
  std::vector<Complex> entries_;
};

struct TracePoint {
  double p_accept;
  double p_reject;
  double residual;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct RunResult {
  double p_accept = 0.0;
  double p_reject = 0.0;
  double p_residual = 1.0;
  std::size_t steps = 0;
  bool halted = false;
  /// One point per step, filled only when tracing is requested.
  std::vector<TracePoint> trace;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

struct Measurement {
  double gain_accept;
  double gain_reject;
  AmplitudeVector residual;
};

inline constexpr double kDefaultHaltThreshold = 1e-12;

struct RunOptions {
  /// Defaults to default_max_steps(spec, |w|).
  std::optional<std::size_t> max_steps;
  double halt_threshold = kDefaultHaltThreshold;
  bool trace = false;
};

/// 64 * N * (n + 2), N being the machine's path count.
std::size_t default_max_steps(const TwoWayQfaSpec& spec, std::size_t word_length);

/// Throws SymbolError at the first symbol outside the input alphabet.
void check_word(const TwoWayQfaSpec& spec, std::string_view word);

/// The tape "#w$".
std::string tape_of(std::string_view word);

AmplitudeVector initial_vector(const TwoWayQfaSpec& spec, std::string_view word);

/// Applies the evolution operator for `word` once. Head positions wrap modulo n + 2.
AmplitudeVector step(const TwoWayQfaSpec& spec, std::string_view word, const AmplitudeVector& v);

/// Projects out accepting and rejecting configurations. The residual is not renormalized.
Measurement measure(const TwoWayQfaSpec& spec, const AmplitudeVector& v);

/// Alternates step and measure from the initial configuration until the residual
/// mass drops below the halt threshold or the step budget runs out.
RunResult run(const TwoWayQfaSpec& spec, std::string_view word, const RunOptions& options = {});

/// Precomputed sparse form of a machine's evolution on one tape. Reusable across steps.
class TapeEvolution {
 public:
  TapeEvolution(const TwoWayQfaSpec& spec, std::string_view word);

  void apply(const AmplitudeVector& in, AmplitudeVector& out) const;
  std::size_t num_cells() const { return tape_.size(); }

 private:
  struct Entry {
    std::size_t target;
    /// Head offset already reduced modulo the tape size.
    std::size_t shift;
    Complex amplitude;
  };
  // columns_[symbol slot][source] lists the nonzero entries of V_symbol|source>.
  std::vector<std::vector<std::vector<Entry>>> columns_;
  std::vector<std::size_t> slot_of_cell_;
  std::string tape_;
  std::size_t num_states_;
};

}  // namespace chemqfa

#endif  // CHEMQFA_SIMULATOR_HPP
