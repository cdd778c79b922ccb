// Copyright 2026 The SwarmAttack Authors.
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

#ifndef SWARMATTACK_SENTENCE_HPP_
#define SWARMATTACK_SENTENCE_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swarmattack {

// Only the first four tags mark content words.
enum class Pos { kNoun, kVerb, kAdj, kAdv, kOther };

inline constexpr std::array<Pos, 4> kContentPos = {Pos::kNoun, Pos::kVerb,
                                                   Pos::kAdj, Pos::kAdv};

inline constexpr bool is_content(Pos p) { return p != Pos::kOther; }

inline std::string_view pos_name(Pos p) {
  switch (p) {
    case Pos::kNoun:
      return "noun";
    case Pos::kVerb:
      return "verb";
    case Pos::kAdj:
      return "adj";
    case Pos::kAdv:
      return "adv";
    case Pos::kOther:
      break;
  }
  return "other";
}

inline std::optional<Pos> parse_pos(std::string_view s) {
  if (s == "noun") return Pos::kNoun;
  if (s == "verb") return Pos::kVerb;
  if (s == "adj") return Pos::kAdj;
  if (s == "adv") return Pos::kAdv;
  if (s == "other") return Pos::kOther;
  return std::nullopt;
}

struct Token {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::kOther;

  bool is_content() const { return swarmattack::is_content(pos); }

  friend bool operator==(const Token&, const Token&) = default;
};

/// One input instance. `context` is the unperturbed half of a sentence pair
/// (e.g. an NLI premise); it is forwarded to the victim verbatim.
struct Sentence {
  std::vector<Token> tokens;
  std::optional<int> label;
  std::optional<std::string> context;

  std::size_t size() const { return tokens.size(); }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

inline std::string join_text(const Sentence& s) {
  std::string out;
  for (const Token& t : s.tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

}  // namespace swarmattack

#endif  // SWARMATTACK_SENTENCE_HPP_
