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

#ifndef SWARMATTACK_TESTS_LEXICON_ORACLE_HPP_
#define SWARMATTACK_TESTS_LEXICON_ORACLE_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "swarmattack/lexicon.hpp"
#include "swarmattack/random.hpp"

namespace swarmattack::testing {

// Randomized lexicon whose words are their own lemmas (no inflection), so the
// substitute relation can be checked against a direct sense-pair scan.
struct RandomLexicon {
  std::vector<LexiconEntry> entries;

  static RandomLexicon make(Rng& rng) {
    RandomLexicon out;
    const std::size_t words = 4 + rng.below(12);
    const std::size_t alphabet = 2 + rng.below(4);
    for (std::size_t w = 0; w < words; ++w) {
      LexiconEntry e;
      e.word = "word" + std::to_string(w);
      e.lemma = e.word;
      const std::size_t senses = 1 + rng.below(3);
      for (std::size_t s = 0; s < senses; ++s) {
        WordSense sense;
        sense.lemma = e.word;
        sense.pos = kContentPos[rng.below(2 + rng.below(3))];
        while (sense.sememes.empty()) {
          for (std::size_t a = 0; a < alphabet; ++a) {
            if (rng.bernoulli(0.4))
              sense.sememes.insert("s" + std::to_string(a));
          }
        }
        e.senses.push_back(std::move(sense));
      }
      out.entries.push_back(std::move(e));
    }
    return out;
  }

  // Every sense of `word` under `pos` against every sense of every other word.
  std::vector<std::string> brute_substitutes(const std::string& word,
                                             Pos pos) const {
    const LexiconEntry* self = nullptr;
    for (const auto& e : entries) {
      if (e.word == word) self = &e;
    }
    if (self == nullptr) return {};
    std::set<std::string> out;
    for (const auto& other : entries) {
      if (other.word == word) continue;
      for (const auto& a : self->senses) {
        for (const auto& b : other.senses) {
          if (a.pos == pos && b.pos == pos && a.sememes == b.sememes) {
            out.insert(other.word);
          }
        }
      }
    }
    return {out.begin(), out.end()};
  }

  // The same lexicon in file syntax, entries in the given order.
  std::string text(const std::vector<std::size_t>& order) const {
    std::string out = std::string(kLexiconHeader) + "\n";
    for (std::size_t i : order) {
      const auto& e = entries[i];
      std::string tags;
      std::string sems;
      for (std::size_t s = 0; s < e.senses.size(); ++s) {
        if (s > 0) {
          tags += ';';
          sems += ';';
        }
        tags += pos_name(e.senses[s].pos);
        bool first = true;
        for (const auto& m : e.senses[s].sememes) {
          if (!first) sems += ',';
          sems += m;
          first = false;
        }
      }
      out += e.word + "\t" + e.lemma + "\t" + tags + "\t" + sems + "\n";
    }
    return out;
  }
};

}  // namespace swarmattack::testing

#endif  // SWARMATTACK_TESTS_LEXICON_ORACLE_HPP_
