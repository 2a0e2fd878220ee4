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


#ifndef CHEMQFA_BASELINES_HPP
#define CHEMQFA_BASELINES_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chemqfa/machine_spec.hpp"
#include "chemqfa/simulator.hpp"

namespace chemqfa {

enum class LanguageId {
  kL1Regex,  ///< (a+b)*a(a+b)*b(a+b)*aa*bb*
  kL1Prose,  ///< at least one a and at least one b
  kL2Dyck,   ///< balanced parentheses, no prefix dips below zero
  kL2Count,  ///< equal numbers of '(' and ')'
  kL3,       ///< a^n b^n c^n, n > 0
};

std::string_view language_name(LanguageId id);
std::optional<LanguageId> parse_language(std::string_view name);
std::string_view language_alphabet(LanguageId id);

/// Exact membership. Throws SymbolError for symbols outside the language's alphabet.
bool membership(LanguageId id, std::string_view word);

/// Runs the hand-compiled DFA for L1_REGEX; exposed for cross-checking against a regex engine.
bool l1_regex_dfa_accepts(std::string_view word);

/// Required top of one stack: a symbol, or std::nullopt for "stack is empty".
using StackTop = std::optional<char>;

struct StackAction {
  bool pop = false;
  /// Pushed after the optional pop, left to right; the last character ends up on top.
  std::string push;
};

struct PdaTransition {
  std::string from;
  /// std::nullopt is an epsilon move.
  std::optional<char> input;
  std::vector<StackTop> tops;
  std::string to;
  std::vector<StackAction> actions;
};

/// Deterministic pushdown automaton with k stacks. Accepts by final state with every stack empty.
struct MultiStackPda {
  std::string name;
  std::vector<std::string> states;
  std::string input_alphabet;
  std::size_t stack_count = 1;
  std::vector<std::string> stack_alphabets;
  std::string initial_state;
  std::set<std::string> accept_states;
  std::vector<PdaTransition> transitions;

  void check_structure() const;
};

/// Throws NondeterminismError if two transitions apply to one configuration.
bool run_pda(const MultiStackPda& pda, std::string_view word);

/// One stack, balanced parentheses.
MultiStackPda dyck_pda();
/// Two stacks, a^n b^n c^n with n > 0.
MultiStackPda anbncn_pda();

/// Every word over `alphabet` of length 0..max_len in shortlex order.
std::vector<std::string> enumerate_words(std::string_view alphabet, std::size_t max_len);

/// A machine "accepts" when more than half of the probability ends in accepting states.
inline bool accepts(const RunResult& r) { return r.p_accept > 0.5; }

struct SweepEntry {
  std::string word;
  bool oracle = false;
  bool machine = false;
  double p_accept = 0.0;
  double p_reject = 0.0;
  double p_residual = 0.0;
  std::size_t steps = 0;
  bool halted = false;
};

struct BoundViolation {
  std::string word;
  std::string requirement;
  double p_accept;
  double p_reject;
};

struct DiscrepancyReport {
  std::string machine;
  std::size_t n_paths = 1;
  LanguageId language = LanguageId::kL1Regex;
  std::size_t max_len = 0;
  std::size_t words_checked = 0;
  std::size_t agreements = 0;
  std::size_t non_halting = 0;
  /// Words where the machine verdict differs from the oracle, shortlex order.
  std::vector<SweepEntry> discrepancies;
  /// The machine's behaviour on the empty word, whether or not it agrees.
  SweepEntry empty_word;
  /// True when the probability bounds proved for this machine/language pair were checked.
  bool bounds_checked = false;
  std::vector<BoundViolation> bound_violations;
};

struct SweepOptions {
  RunOptions run;
  /// Worker threads; results are assembled in shortlex order regardless.
  unsigned threads = 1;
};

inline constexpr std::size_t kMaxSweepLength = 14;

/// Runs the machine on every word up to max_len (<= 14) and compares majority
/// verdicts with the oracle. For m2 against an L2 reading and m3 against L3 the
/// one-sided error bounds are checked as well:
///   outside the count language: p_reject >= 1 - 1/N - 1e-6,
///   inside (non-empty Dyck words for m2, L3 for m3): p_accept >= 1 - 1e-6.
DiscrepancyReport sweep_compare(const TwoWayQfaSpec& spec, LanguageId language, std::size_t max_len,
                                const SweepOptions& options = {});

}  // namespace chemqfa

#endif  // CHEMQFA_BASELINES_HPP
