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


#include "chemqfa/chem.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "chemqfa/baselines.hpp"
#include "chemqfa/errors.hpp"

namespace chemqfa {

namespace {

const std::array<ReactionSystem, 3>& systems() {
  static const std::array<ReactionSystem, 3> kSystems = {{
      {ReactionSystemId::kPrecipitation,
       "PRECIPITATION",
       "m1",
       {{"KIO3", 'a'}, {"AgNO3", 'b'}},
       "AgIO3 precipitate present",
       "solution clear"},
      {ReactionSystemId::kAcidBase,
       "ACID_BASE",
       "m2",
       {{"H2C3H2O4", '('}, {"malonic acid", '('}, {"MA", '('}, {"NaOH", ')'}},
       "pH at midpoint, lightest gray tone",
       "pH off midpoint, gray tone not lightest"},
      {ReactionSystemId::kBz,
       "BZ",
       "m3",
       {{"BrO3-", 'a'}, {"NaBrO3", 'a'}, {"MA", 'b'}, {"malonic acid", 'b'}, {"CH2(COOH)2", 'b'}, {"NaOH", 'c'}},
       "BZ oscillatory signature observed",
       "no BZ oscillatory signature"},
  }};
  return kSystems;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::optional<char> ReactionSystem::symbol_of(std::string_view species) const {
  for (const auto& [name, symbol] : alphabet_map) {
    if (name == species) return symbol;
  }
  return std::nullopt;
}

const ReactionSystem& reaction_system(ReactionSystemId id) {
  for (const auto& s : systems()) {
    if (s.id == id) return s;
  }
  throw InvalidParameter("unknown reaction system");
}

std::optional<ReactionSystemId> parse_reaction_system(std::string_view name) {
  for (const auto& s : systems()) {
    if (s.name == name) return s.id;
  }
  return std::nullopt;
}

std::string transcribe(const Recipe& recipe) {
  const ReactionSystem& system = reaction_system(recipe.system);
  std::string word;
  word.reserve(recipe.aliquots.size());
  for (std::size_t i = 0; i < recipe.aliquots.size(); ++i) {
    auto symbol = system.symbol_of(recipe.aliquots[i]);
    if (!symbol) throw UnknownSpecies(recipe.aliquots[i], i);
    word += *symbol;
  }
  return word;
}

Recipe parse_recipe(std::string_view text) {
  Recipe recipe;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    const std::string_view line = trim(text.substr(0, newline));
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    ++line_no;
    if (line.empty() || line.front() == ';') continue;
    if (!have_header) {
      constexpr std::string_view kKey = "system:";
      if (!line.starts_with(kKey)) throw ParseError(line_no, "expected 'system: <NAME>' header");
      const auto name = trim(line.substr(kKey.size()));
      auto id = parse_reaction_system(name);
      if (!id) throw ParseError(line_no, "unknown reaction system '" + std::string(name) + "'");
      recipe.system = *id;
      have_header = true;
      continue;
    }
    recipe.aliquots.emplace_back(line);
  }
  if (!have_header) throw ParseError(line_no, "missing 'system:' header");
  return recipe;
}

std::string format_recipe(const Recipe& recipe) {
  std::string out = "system: " + reaction_system(recipe.system).name + "\n";
  for (const auto& a : recipe.aliquots) out += a + "\n";
  return out;
}

Signature signature(ReactionSystemId id, const RunResult& result, std::string_view word) {
  const ReactionSystem& system = reaction_system(id);
  Signature sig{id, accepts(result) ? Verdict::kAccept : Verdict::kReject, {}, result.p_accept, result.p_reject};
  if (sig.verdict == Verdict::kAccept) {
    sig.descriptor = system.accept_signature;
    return sig;
  }
  if (!result.halted && result.p_reject <= 0.5) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "indeterminate (residual mass %.6g)", result.p_residual);
    sig.descriptor = buf;
    return sig;
  }
  sig.descriptor = system.reject_signature;
  if (id == ReactionSystemId::kAcidBase && !word.empty()) {
    const auto open = std::count(word.begin(), word.end(), '(');
    const auto close = std::count(word.begin(), word.end(), ')');
    if (open > close) sig.descriptor = "pH above midpoint, intermediate gray tone";
    if (close > open) sig.descriptor = "pH below midpoint, darkest gray tone";
  }
  return sig;
}

}  // namespace chemqfa
