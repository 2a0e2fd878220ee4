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


#ifndef CHEMQFA_MACHINES_HPP
#define CHEMQFA_MACHINES_HPP

#include <cstddef>
#include <string>

#include "chemqfa/machine_spec.hpp"

namespace chemqfa {

/// N-way discrete Fourier matrix with entry (k, i) = exp(2 pi sqrt(-1) k i / N) / sqrt(N)
/// for k, i in [1, N] (stored 0-based).
///
/// Column N is the uniform vector, so N equal-amplitude, equal-phase inputs
/// interfere constructively on row N and cancel on every other row.
Matrix qft_matrix(std::size_t n);

/// Reference transition table of the precipitation machine, verbatim. It lists both
/// V_b|q1> = |q2> and V_b|q2> = |q2>, so it cannot be completed to a unitary.
PartialTable m1_printed_table();

/// The reference table without the V_b|q1> = |q2> row, which is left to completion.
PartialTable m1_table();

/// 12-state reversible machine over {a, b} for the precipitation reaction.
TwoWayQfaSpec build_m1();

/// Balanced-parentheses machine over {(, )} with an N-path counter split.
///
/// Besides the reference rows this adds V_$|q2> = |q2>: the right-moving scanner
/// q2 crosses the right end-marker and wraps around the circular tape to the
/// left end-marker, where V_#|q2> performs the split.
PartialTable m2_table(std::size_t n_paths);
TwoWayQfaSpec build_m2(std::size_t n_paths);

/// Number of (i, j) counter states of an N-path split: sum over i of max(i, N - i + 1) + 1.
std::size_t counter_state_count(std::size_t n_paths);

/// Machine for {a^n b^n c^n | n > 0} over {a, b, c}.
///
/// Phase 1 deterministically checks the form a+b+c+ (rejecting otherwise) with
/// a left-to-right scan that steps back at each block boundary. From the right
/// end-marker the head wraps to the left end-marker and the run splits into N
/// paths u_i that spend i + 1 steps on every a, N - i + 2 steps on every b and
/// one step on every c. They reach the right end-marker together iff #a = #b;
/// a QFT there concentrates synchronous arrivals on v_N and leaves only 1/N of
/// the mass on v_N otherwise (v_k, k < N, reject). v_N wraps to the left
/// end-marker and repeats the comparison for b against c with paths t_i; the
/// closing QFT puts synchronous arrivals on the accepting p_N.
///
/// Every path starts with amplitude +1/sqrt(N), so synchronous arrivals have a
/// flat phase profile and land on column N of the QFT.
PartialTable m3_table(std::size_t n_paths);
TwoWayQfaSpec build_m3(std::size_t n_paths);

/// Builds "m1", "m2" or "m3" by name; n_paths is ignored for m1.
TwoWayQfaSpec build_machine(const std::string& name, std::size_t n_paths);

}  // namespace chemqfa

#endif  // CHEMQFA_MACHINES_HPP
