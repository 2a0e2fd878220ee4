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


#ifndef CHEMQFA_CHEM_HPP
#define CHEMQFA_CHEM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chemqfa/simulator.hpp"

namespace chemqfa {

enum class ReactionSystemId { kPrecipitation, kAcidBase, kBz };

struct ReactionSystem {
  ReactionSystemId id;
  std::string name;
  /// Machine recognising the transcribed words ("m1", "m2" or "m3").
  std::string machine;
  /// Species name to input symbol. Several names may map to one symbol.
  std::vector<std::pair<std::string, char>> alphabet_map;
  std::string accept_signature;
  std::string reject_signature;

  std::optional<char> symbol_of(std::string_view species) const;
};

const ReactionSystem& reaction_system(ReactionSystemId id);
std::optional<ReactionSystemId> parse_reaction_system(std::string_view name);

struct Recipe {
  ReactionSystemId system = ReactionSystemId::kPrecipitation;
  std::vector<std::string> aliquots;
};

/// One symbol per aliquot, in order. Throws UnknownSpecies naming the aliquot index.
std::string transcribe(const Recipe& recipe);

/// Recipe files: a "system: <NAME>" header, then one species per line.
/// Blank lines and lines starting with ';' are ignored.
Recipe parse_recipe(std::string_view text);
std::string format_recipe(const Recipe& recipe);

enum class Verdict { kAccept, kReject };

struct Signature {
  ReactionSystemId system;
  Verdict verdict;
  std::string descriptor;
  double p_accept;
  double p_reject;
};

/// Maps a run outcome to the observable the reaction would show. The word is
/// only consulted for acid/base rejections, which differ by which side is in excess.
Signature signature(ReactionSystemId system, const RunResult& result, std::string_view word = {});

}  // namespace chemqfa

#endif  // CHEMQFA_CHEM_HPP
