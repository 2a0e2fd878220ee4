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


#include "chemqfa/baselines.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <thread>

#include "chemqfa/errors.hpp"

namespace chemqfa {

namespace {

struct LanguageInfo {
  LanguageId id;
  std::string_view name;
  std::string_view alphabet;
};

constexpr std::array<LanguageInfo, 5> kLanguages = {{
    {LanguageId::kL1Regex, "L1_REGEX", "ab"},
    {LanguageId::kL1Prose, "L1_PROSE", "ab"},
    {LanguageId::kL2Dyck, "L2_DYCK", "()"},
    {LanguageId::kL2Count, "L2_COUNT", "()"},
    {LanguageId::kL3, "L3", "abc"},
}};

const LanguageInfo& info(LanguageId id) {
  for (const auto& l : kLanguages) {
    if (l.id == id) return l;
  }
  throw InvalidParameter("unknown language id");
}

// Counts '(' as +1 and ')' as -1; returns the total and the lowest prefix sum.
std::pair<long, long> paren_balance(std::string_view word) {
  long depth = 0;
  long lowest = 0;
  for (char c : word) {
    depth += c == '(' ? 1 : -1;
    lowest = std::min(lowest, depth);
  }
  return {depth, lowest};
}

}  // namespace

std::string_view language_name(LanguageId id) { return info(id).name; }

std::string_view language_alphabet(LanguageId id) { return info(id).alphabet; }

std::optional<LanguageId> parse_language(std::string_view name) {
  for (const auto& l : kLanguages) {
    if (l.name == name) return l.id;
  }
  return std::nullopt;
}

bool l1_regex_dfa_accepts(std::string_view word) {
  // 0: no a yet, 1: seen a, 2: seen a..b, 3: inside a trailing a-block, 4: inside a trailing b-block.
  static constexpr int kNext[5][2] = {{1, 0}, {1, 2}, {3, 2}, {3, 4}, {3, 4}};
  int state = 0;
  for (char c : word) state = kNext[state][c == 'b' ? 1 : 0];
  return state == 4;
}

bool membership(LanguageId id, std::string_view word) {
  const auto alphabet = language_alphabet(id);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (alphabet.find(word[i]) == std::string_view::npos) throw SymbolError(word[i], i);
  }
  switch (id) {
    case LanguageId::kL1Regex:
      return l1_regex_dfa_accepts(word);
    case LanguageId::kL1Prose:
      return word.find('a') != std::string_view::npos && word.find('b') != std::string_view::npos;
    case LanguageId::kL2Dyck: {
      auto [total, lowest] = paren_balance(word);
      return total == 0 && lowest >= 0;
    }
    case LanguageId::kL2Count:
      return paren_balance(word).first == 0;
    case LanguageId::kL3: {
      const std::size_t n = word.size() / 3;
      if (n == 0 || word.size() != 3 * n) return false;
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] != "abc"[i / n]) return false;
      }
      return true;
    }
  }
  return false;
}

void MultiStackPda::check_structure() const {
  if (stack_count < 1) throw SpecError("a pushdown automaton needs at least one stack");
  if (stack_alphabets.size() != stack_count) throw SpecError("one stack alphabet per stack is required");
  auto known = [this](const std::string& s) { return std::find(states.begin(), states.end(), s) != states.end(); };
  if (!known(initial_state)) throw SpecError("unknown initial state '" + initial_state + "'");
  for (const auto& s : accept_states) {
    if (!known(s)) throw SpecError("unknown accept state '" + s + "'");
  }
  for (const auto& t : transitions) {
    if (!known(t.from) || !known(t.to)) throw SpecError("transition refers to an unknown state");
    if (t.tops.size() != stack_count || t.actions.size() != stack_count) {
      throw SpecError("transition must give a top and an action for every stack");
    }
    if (t.input && input_alphabet.find(*t.input) == std::string::npos) {
      throw SpecError("transition reads a symbol outside the input alphabet");
    }
  }
}

bool run_pda(const MultiStackPda& pda, std::string_view word) {
  pda.check_structure();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (pda.input_alphabet.find(word[i]) == std::string::npos) throw SymbolError(word[i], i);
  }
  std::vector<std::string> stacks(pda.stack_count);
  std::string state = pda.initial_state;
  std::size_t head = 0;
  // Epsilon moves are bounded so that a cycle of them cannot hang the run.
  const std::size_t budget = 16 * (word.size() + 1) * (pda.transitions.size() + 1);

  auto tops_match = [&](const PdaTransition& t) {
    for (std::size_t k = 0; k < pda.stack_count; ++k) {
      const StackTop top = stacks[k].empty() ? StackTop{} : StackTop{stacks[k].back()};
      if (top != t.tops[k]) return false;
    }
    return true;
  };

  for (std::size_t moves = 0; moves < budget; ++moves) {
    const PdaTransition* chosen = nullptr;
    for (const auto& t : pda.transitions) {
      if (t.from != state || !tops_match(t)) continue;
      if (t.input && (head >= word.size() || word[head] != *t.input)) continue;
      if (chosen) {
        throw NondeterminismError(pda.name + ": two transitions apply in state " + state + " at input position " +
                                  std::to_string(head));
      }
      chosen = &t;
    }
    if (!chosen) break;
    for (std::size_t k = 0; k < pda.stack_count; ++k) {
      if (chosen->actions[k].pop) stacks[k].pop_back();
      stacks[k] += chosen->actions[k].push;
    }
    if (chosen->input) ++head;
    state = chosen->to;
  }
  const bool empty = std::all_of(stacks.begin(), stacks.end(), [](const std::string& s) { return s.empty(); });
  return head == word.size() && pda.accept_states.count(state) > 0 && empty;
}

MultiStackPda dyck_pda() {
  MultiStackPda pda;
  pda.name = "dyck-1stack";
  pda.states = {"p"};
  pda.input_alphabet = "()";
  pda.stack_count = 1;
  pda.stack_alphabets = {"X"};
  pda.initial_state = "p";
  pda.accept_states = {"p"};
  pda.transitions = {
      {"p", '(', {StackTop{}}, "p", {{false, "X"}}},
      {"p", '(', {StackTop{'X'}}, "p", {{false, "X"}}},
      {"p", ')', {StackTop{'X'}}, "p", {{true, ""}}},
  };
  return pda;
}

MultiStackPda anbncn_pda() {
  MultiStackPda pda;
  pda.name = "anbncn-2stack";
  pda.states = {"read_a", "read_b", "read_c"};
  pda.input_alphabet = "abc";
  pda.stack_count = 2;
  pda.stack_alphabets = {"A", "B"};
  pda.initial_state = "read_a";
  pda.accept_states = {"read_c"};
  const StackTop empty{};
  const StackTop a{'A'};
  const StackTop b{'B'};
  const StackAction keep{};
  const StackAction pop{true, ""};
  // Each a is recorded on both stacks; b's consume stack one and c's consume stack two.
  pda.transitions = {
      {"read_a", 'a', {empty, empty}, "read_a", {{false, "A"}, {false, "B"}}},
      {"read_a", 'a', {a, b}, "read_a", {{false, "A"}, {false, "B"}}},
      {"read_a", 'b', {a, b}, "read_b", {pop, keep}},
      {"read_b", 'b', {a, b}, "read_b", {pop, keep}},
      {"read_b", 'c', {empty, b}, "read_c", {keep, pop}},
      {"read_c", 'c', {empty, b}, "read_c", {keep, pop}},
  };
  return pda;
}

std::vector<std::string> enumerate_words(std::string_view alphabet, std::size_t max_len) {
  std::vector<std::string> words{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : alphabet) words.push_back(words[i] + c);
    }
    begin = end;
  }
  return words;
}

namespace {

using BoundCheck = std::function<void(const SweepEntry&, std::vector<BoundViolation>&)>;

bool has_form_a_b_c(std::string_view word) {
  std::size_t i = 0;
  for (char c : {'a', 'b', 'c'}) {
    const std::size_t start = i;
    while (i < word.size() && word[i] == c) ++i;
    if (i == start) return false;
  }
  return i == word.size();
}

bool same_symbols(std::string a, std::string b) {
  std::ranges::sort(a);
  std::ranges::sort(b);
  return a == b;
}

std::optional<BoundCheck> proven_bounds(const TwoWayQfaSpec& spec, LanguageId language) {
  const double n = static_cast<double>(spec.path_count);
  const double reject_floor = 1.0 - 1.0 / n - 1e-6;
  auto require = [](std::vector<BoundViolation>& out, const SweepEntry& e, bool ok, std::string what) {
    if (!ok) out.push_back({e.word, std::move(what), e.p_accept, e.p_reject});
  };
  if (spec.name == "m2" && (language == LanguageId::kL2Count || language == LanguageId::kL2Dyck)) {
    return [=](const SweepEntry& e, std::vector<BoundViolation>& out) {
      if (!membership(LanguageId::kL2Count, e.word)) {
        require(out, e, e.p_reject >= reject_floor, "p_reject >= 1 - 1/N");
      } else if (!e.word.empty() && membership(LanguageId::kL2Dyck, e.word)) {
        require(out, e, e.p_accept >= 1.0 - 1e-6, "p_accept >= 1");
      }
    };
  }
  if (spec.name == "m3" && language == LanguageId::kL3) {
    return [=](const SweepEntry& e, std::vector<BoundViolation>& out) {
      if (membership(LanguageId::kL3, e.word)) {
        require(out, e, e.p_accept >= 1.0 - 1e-6, "p_accept >= 1");
      } else if (has_form_a_b_c(e.word)) {
        require(out, e, e.p_reject >= reject_floor, "p_reject >= 1 - 1/N");
      } else {
        require(out, e, e.p_reject >= 1.0 - 1e-9, "p_reject = 1 outside a+b+c+");
      }
    };
  }
  return std::nullopt;
}

}  // namespace

DiscrepancyReport sweep_compare(const TwoWayQfaSpec& spec, LanguageId language, std::size_t max_len,
                                const SweepOptions& options) {
  if (max_len > kMaxSweepLength) {
    throw InvalidParameter("sweep length " + std::to_string(max_len) + " exceeds the limit of " +
                           std::to_string(kMaxSweepLength));
  }
  const std::string alphabet(language_alphabet(language));
  if (!same_symbols(spec.input_alphabet, alphabet)) {
    throw InvalidParameter("machine alphabet '" + spec.input_alphabet + "' does not match " +
                           std::string(language_name(language)));
  }

  const std::vector<std::string> words = enumerate_words(alphabet, max_len);
  std::vector<SweepEntry> entries(words.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < words.size(); i += stride) {
      const RunResult r = run(spec, words[i], options.run);
      entries[i] = {words[i], membership(language, words[i]), accepts(r), r.p_accept, r.p_reject, r.p_residual,
                    r.steps, r.halted};
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  DiscrepancyReport report;
  report.machine = spec.name;
  report.n_paths = spec.path_count;
  report.language = language;
  report.max_len = max_len;
  report.words_checked = entries.size();
  report.empty_word = entries.front();
  const auto bounds = proven_bounds(spec, language);
  report.bounds_checked = bounds.has_value();
  for (const auto& e : entries) {
    if (!e.halted) ++report.non_halting;
    if (e.oracle == e.machine) {
      ++report.agreements;
    } else {
      report.discrepancies.push_back(e);
    }
    if (bounds) (*bounds)(e, report.bound_violations);
  }
  return report;
}

}  // namespace chemqfa
