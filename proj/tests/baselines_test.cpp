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
#include <regex>
#include <string>

#include "gtest/gtest.h"

#include "chemqfa/errors.hpp"
#include "chemqfa/machines.hpp"

using namespace chemqfa;

namespace {

bool dyck_by_erasure(std::string w) {
  for (auto pos = w.find("()"); pos != std::string::npos; pos = w.find("()")) w.erase(pos, 2);
  return w.empty();
}

bool anbncn_by_construction(const std::string& w) {
  const std::size_t n = w.size() / 3;
  return n > 0 && w == std::string(n, 'a') + std::string(n, 'b') + std::string(n, 'c');
}

}  // namespace

TEST(Languages, NamesRoundTrip) {
  for (auto id : {LanguageId::kL1Regex, LanguageId::kL1Prose, LanguageId::kL2Dyck, LanguageId::kL2Count,
                  LanguageId::kL3}) {
    EXPECT_EQ(parse_language(language_name(id)), id);
  }
  EXPECT_EQ(parse_language("L4"), std::nullopt);
  EXPECT_EQ(language_alphabet(LanguageId::kL3), "abc");
}

TEST(Languages, MembershipExamples) {
  EXPECT_TRUE(membership(LanguageId::kL1Regex, "abab"));
  EXPECT_TRUE(membership(LanguageId::kL1Regex, "abaabb"));
  EXPECT_FALSE(membership(LanguageId::kL1Regex, "ab"));
  EXPECT_FALSE(membership(LanguageId::kL1Regex, "abba"));
  EXPECT_TRUE(membership(LanguageId::kL1Prose, "ba"));
  EXPECT_FALSE(membership(LanguageId::kL1Prose, "aaa"));
  EXPECT_TRUE(membership(LanguageId::kL2Dyck, "(()())"));
  EXPECT_TRUE(membership(LanguageId::kL2Dyck, ""));
  EXPECT_FALSE(membership(LanguageId::kL2Dyck, ")("));
  EXPECT_TRUE(membership(LanguageId::kL2Count, ")("));
  EXPECT_FALSE(membership(LanguageId::kL2Count, "(()"));
  EXPECT_TRUE(membership(LanguageId::kL3, "aabbcc"));
  EXPECT_FALSE(membership(LanguageId::kL3, ""));
  EXPECT_FALSE(membership(LanguageId::kL3, "abcabc"));
}

TEST(Languages, ForeignSymbolThrows) {
  try {
    membership(LanguageId::kL2Dyck, "(a)");
    FAIL();
  } catch (const SymbolError& e) {
    EXPECT_EQ(e.symbol(), 'a');
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(Languages, L1DfaMatchesRegex) {
  const std::regex oracle("^(a|b)*a(a|b)*b(a|b)*aa*bb*$");
  for (const auto& w : enumerate_words("ab", 12)) {
    ASSERT_EQ(l1_regex_dfa_accepts(w), std::regex_match(w, oracle)) << w;
  }
}

TEST(Languages, DyckImpliesCount) {
  for (const auto& w : enumerate_words("()", 12)) {
    ASSERT_EQ(membership(LanguageId::kL2Dyck, w), dyck_by_erasure(w)) << w;
    if (membership(LanguageId::kL2Dyck, w)) ASSERT_TRUE(membership(LanguageId::kL2Count, w)) << w;
  }
}

TEST(Pda, MatchesIndependentOracles) {
  const auto dyck = dyck_pda();
  for (const auto& w : enumerate_words("()", 12)) ASSERT_EQ(run_pda(dyck, w), dyck_by_erasure(w)) << w;
  const auto abc = anbncn_pda();
  for (const auto& w : enumerate_words("abc", 9)) ASSERT_EQ(run_pda(abc, w), anbncn_by_construction(w)) << w;
}

TEST(Pda, Examples) {
  EXPECT_TRUE(run_pda(dyck_pda(), "(())()"));
  EXPECT_FALSE(run_pda(dyck_pda(), "())("));
  EXPECT_TRUE(run_pda(anbncn_pda(), "aaabbbccc"));
  EXPECT_FALSE(run_pda(anbncn_pda(), "aabbbcc"));
  EXPECT_THROW(run_pda(dyck_pda(), "(x"), SymbolError);
}

TEST(Pda, NondeterminismIsReported) {
  auto pda = dyck_pda();
  pda.transitions.push_back({"p", '(', {StackTop{'X'}}, "p", {{true, ""}}});
  EXPECT_THROW(run_pda(pda, "(("), NondeterminismError);
}

TEST(Pda, StructureChecks) {
  auto pda = anbncn_pda();
  pda.transitions.front().tops.pop_back();
  EXPECT_THROW(run_pda(pda, "abc"), SpecError);
  auto other = dyck_pda();
  other.initial_state = "nowhere";
  EXPECT_THROW(other.check_structure(), SpecError);
}

TEST(EnumerateWords, ShortlexOrder) {
  const auto words = enumerate_words("ab", 2);
  EXPECT_EQ(words, (std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"}));
  EXPECT_EQ(enumerate_words("abc", 4).size(), 1u + 3 + 9 + 27 + 81);
}

TEST(Sweep, EmptyWordOnly) {
  const auto report = sweep_compare(build_m2(3), LanguageId::kL2Dyck, 0);
  EXPECT_EQ(report.words_checked, 1u);
  EXPECT_EQ(report.empty_word.word, "");
  EXPECT_FALSE(report.empty_word.machine);
  EXPECT_TRUE(report.empty_word.oracle);
  ASSERT_EQ(report.discrepancies.size(), 1u);
  EXPECT_EQ(report.discrepancies[0].word, "");
}

TEST(Sweep, M1AgreesWithRegexLanguage) {
  const auto report = sweep_compare(build_m1(), LanguageId::kL1Regex, 8);
  EXPECT_EQ(report.words_checked, 511u);
  EXPECT_EQ(report.non_halting, 0u);
  EXPECT_EQ(report.agreements + report.discrepancies.size(), report.words_checked);
  EXPECT_FALSE(report.bounds_checked);
}

TEST(Sweep, M3MeetsBoundsUpToNine) {
  const auto report = sweep_compare(build_m3(5), LanguageId::kL3, 9, {{}, 4});
  EXPECT_EQ(report.words_checked, (std::size_t{59049} - 1) / 2);
  EXPECT_TRUE(report.bounds_checked);
  EXPECT_TRUE(report.bound_violations.empty());
  EXPECT_TRUE(report.discrepancies.empty());
  EXPECT_EQ(report.non_halting, 0u);
}

TEST(Sweep, M2CountDiscrepanciesAreNonDyckWords) {
  const auto report = sweep_compare(build_m2(4), LanguageId::kL2Count, 8);
  EXPECT_TRUE(report.bounds_checked);
  EXPECT_TRUE(report.bound_violations.empty());
  for (const auto& e : report.discrepancies) {
    EXPECT_TRUE(e.oracle) << e.word;
    EXPECT_TRUE(e.word.empty() || e.word.front() == ')' || e.word.back() == '(') << e.word;
  }
  EXPECT_TRUE(std::is_sorted(report.discrepancies.begin(), report.discrepancies.end(),
                             [](const SweepEntry& x, const SweepEntry& y) {
                               return x.word.size() != y.word.size() ? x.word.size() < y.word.size() : x.word < y.word;
                             }));
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  const auto m2 = build_m2(3);
  const auto one = sweep_compare(m2, LanguageId::kL2Dyck, 7, {{}, 1});
  const auto many = sweep_compare(m2, LanguageId::kL2Dyck, 7, {{}, 5});
  ASSERT_EQ(one.discrepancies.size(), many.discrepancies.size());
  for (std::size_t i = 0; i < one.discrepancies.size(); ++i) {
    EXPECT_EQ(one.discrepancies[i].word, many.discrepancies[i].word);
    EXPECT_EQ(one.discrepancies[i].p_accept, many.discrepancies[i].p_accept);
  }
  EXPECT_EQ(one.agreements, many.agreements);
}

TEST(Sweep, RejectsBadArguments) {
  EXPECT_THROW(sweep_compare(build_m1(), LanguageId::kL1Regex, kMaxSweepLength + 1), InvalidParameter);
  EXPECT_THROW(sweep_compare(build_m1(), LanguageId::kL3, 3), InvalidParameter);
  EXPECT_THROW(sweep_compare(build_m2(2), LanguageId::kL1Prose, 3), InvalidParameter);
}
