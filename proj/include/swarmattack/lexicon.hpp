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

#ifndef SWARMATTACK_LEXICON_HPP_
#define SWARMATTACK_LEXICON_HPP_

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swarmattack/errors.hpp"
#include "swarmattack/sentence.hpp"
#include "swarmattack/text.hpp"

namespace swarmattack {

using Sememe = std::string;

struct WordSense {
  std::string lemma;
  Pos pos = Pos::kOther;
  std::set<Sememe> sememes;

  friend bool operator==(const WordSense&, const WordSense&) = default;
};

/// Two senses are interchangeable when they carry exactly the same sememe
/// annotation under the same part of speech.
inline bool sememe_match(const WordSense& a, const WordSense& b) {
  return a.pos == b.pos && a.sememes == b.sememes;
}

/// A lexicon headword (word == lemma) or an inflected form pointing at its
/// lemma. `forms` maps an inflection key (e.g. "plural") to its surface form.
struct LexiconEntry {
  std::string word;
  std::string lemma;
  std::vector<WordSense> senses;
  std::map<std::string, std::string> forms;
};

inline constexpr std::string_view kLexiconHeader = "#!lexicon-v1";

/// Immutable word -> senses store with sense-level substitution queries.
///
/// Substitution works on lemmas: the queried word is mapped to its lemma
/// entry (directly, through an inflected-form entry, or through another
/// entry's forms map), candidates are other headwords sharing a matching
/// sense, and each candidate is re-inflected with the inflection key the
/// queried word had. Candidates lacking that key fall back to their lemma.
class Lexicon {
 public:
  using EntryMap = std::map<std::string, LexiconEntry, std::less<>>;

  Lexicon() = default;

  explicit Lexicon(std::vector<LexiconEntry> entries,
                   std::string version = "lexicon-v1")
      : version_(std::move(version)) {
    for (LexiconEntry& e : entries) {
      e.word = to_lower(e.word);
      e.lemma = to_lower(e.lemma);
      for (WordSense& s : e.senses) s.lemma = to_lower(s.lemma);
      for (auto& [key, form] : e.forms) form = to_lower(form);
      validate(e);
      if (entries_.contains(e.word)) {
        throw ValidationError("duplicate lexicon entry '" + e.word + "'");
      }
      std::string word = e.word;
      entries_.emplace(std::move(word), std::move(e));
    }
    build_indexes();
  }

  const LexiconEntry* find(std::string_view word) const {
    auto it = entries_.find(to_lower(word));
    return it == entries_.end() ? nullptr : &it->second;
  }

  /// True when `word` resolves to some lemma entry.
  bool knows(std::string_view word) const {
    return resolve(to_lower(word)).has_value();
  }

  std::size_t size() const { return entries_.size(); }
  const std::string& version() const { return version_; }
  const EntryMap& entries() const { return entries_; }

  /// Words that can replace `word` under `pos`, sorted and duplicate-free.
  /// Unknown words and non-content tags yield an empty list.
  std::vector<std::string> substitutes(std::string_view word, Pos pos) const {
    const std::string lower = to_lower(word);
    const std::optional<Resolved> r = resolve(lower);
    if (!r) return {};
    std::set<std::string> out;
    for (const WordSense& sense : r->base->senses) {
      if (sense.pos != pos) continue;
      auto it = sense_index_.find({pos, sense.sememes});
      if (it == sense_index_.end()) continue;
      for (const std::string& headword : it->second) {
        if (headword == r->base->word) continue;
        std::string realized = realize(entries_.at(headword), r->form_key);
        if (realized != lower) out.insert(std::move(realized));
      }
    }
    return {out.begin(), out.end()};
  }

  /// Substitutes for a tagged corpus token: its surface form first, falling
  /// back to the annotated lemma when the surface is unknown.
  std::vector<std::string> substitutes(const Token& token) const {
    if (knows(token.surface) || token.lemma.empty()) {
      return substitutes(token.surface, token.pos);
    }
    return substitutes(token.lemma, token.pos);
  }

 private:
  struct Resolved {
    const LexiconEntry* base;
    std::optional<std::string> form_key;
  };

  static void validate(const LexiconEntry& e) {
    if (e.word.empty()) throw ValidationError("lexicon entry with empty word");
    if (e.lemma.empty()) {
      throw ValidationError("entry '" + e.word + "' has an empty lemma");
    }
    if (e.senses.empty()) {
      throw ValidationError("entry '" + e.word + "' has no senses");
    }
    for (const WordSense& s : e.senses) {
      if (s.sememes.empty()) {
        throw ValidationError("entry '" + e.word +
                              "' has a sense with an empty sememe set");
      }
      for (const Sememe& m : s.sememes) {
        if (m.empty()) {
          throw ValidationError("entry '" + e.word + "' has an empty sememe");
        }
      }
    }
  }

  static std::optional<std::string> key_for_form(const LexiconEntry& lemma,
                                                 std::string_view form) {
    for (const auto& [key, value] : lemma.forms) {
      if (value == form) return key;
    }
    return std::nullopt;
  }

  std::optional<Resolved> resolve(const std::string& lower) const {
    if (auto it = entries_.find(lower); it != entries_.end()) {
      const LexiconEntry& e = it->second;
      if (e.lemma != e.word) {
        if (auto lit = entries_.find(e.lemma); lit != entries_.end()) {
          return Resolved{&lit->second, key_for_form(lit->second, lower)};
        }
      }
      return Resolved{&e, std::nullopt};
    }
    if (auto fit = form_index_.find(lower); fit != form_index_.end()) {
      return Resolved{&entries_.at(fit->second.first), fit->second.second};
    }
    return std::nullopt;
  }

  static std::string realize(const LexiconEntry& candidate,
                             const std::optional<std::string>& key) {
    if (key) {
      if (auto it = candidate.forms.find(*key); it != candidate.forms.end()) {
        return it->second;
      }
    }
    return candidate.word;
  }

  void build_indexes() {
    for (const auto& [word, e] : entries_) {
      if (e.word != e.lemma) continue;
      for (const WordSense& s : e.senses) {
        auto& list = sense_index_[{s.pos, s.sememes}];
        if (list.empty() || list.back() != word) list.push_back(word);
      }
      // First (lexicographically smallest) owner wins for shared forms.
      for (const auto& [key, form] : e.forms) {
        form_index_.try_emplace(form, word, key);
      }
    }
  }

  std::string version_ = "lexicon-v1";
  EntryMap entries_;
  std::map<std::pair<Pos, std::set<Sememe>>, std::vector<std::string>>
      sense_index_;
  std::map<std::string, std::pair<std::string, std::string>, std::less<>>
      form_index_;
};

// Lexicon text format, one word per line:
//   word <TAB> lemma <TAB> pos <TAB> sememes <TAB> forms
// `sememes` lists senses separated by ';', each a ','-separated sememe set.
// `pos` is either one tag for every sense or a ';'-list aligned with them.
// `forms` (optional) is `key=form,...`.
inline Lexicon parse_lexicon(std::istream& in) {
  std::vector<LexiconEntry> entries;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header) {
      if (trim(line).empty()) continue;
      if (trim(line) != kLexiconHeader) {
        throw ParseError("missing '#!lexicon-v1' header", lineno);
      }
      header = true;
      continue;
    }
    if (trim(line).empty() || line[0] == '#') continue;

    const std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 4 && fields.size() != 5) {
      throw ParseError("expected 4 or 5 tab-separated fields, got " +
                           std::to_string(fields.size()),
                       lineno);
    }
    LexiconEntry e;
    e.word = to_lower(trim(fields[0]));
    e.lemma = to_lower(trim(fields[1]));
    if (e.word.empty() || e.lemma.empty()) {
      throw ParseError("empty word or lemma", lineno);
    }

    const std::vector<std::string> sense_groups = split(fields[3], ';');
    const std::vector<std::string> tags = split(fields[2], ';');
    if (tags.size() != 1 && tags.size() != sense_groups.size()) {
      throw ParseError("pos list does not align with sense list", lineno);
    }
    for (std::size_t i = 0; i < sense_groups.size(); ++i) {
      const std::string_view tag = trim(tags.size() == 1 ? tags[0] : tags[i]);
      const std::optional<Pos> pos = parse_pos(tag);
      if (!pos) {
        throw ParseError("unknown pos tag '" + std::string(tag) + "'", lineno);
      }
      WordSense sense{e.lemma, *pos, {}};
      for (const std::string& raw : split(sense_groups[i], ',')) {
        const std::string_view id = trim(raw);
        if (!id.empty()) sense.sememes.emplace(id);
      }
      if (sense.sememes.empty()) {
        throw ValidationError("line " + std::to_string(lineno) + ": entry '" +
                              e.word + "' has a sense with no sememes");
      }
      e.senses.push_back(std::move(sense));
    }

    if (fields.size() == 5 && !trim(fields[4]).empty()) {
      for (const std::string& kv : split(fields[4], ',')) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size()) {
          throw ParseError("malformed form '" + kv + "'", lineno);
        }
        e.forms[std::string(trim(kv.substr(0, eq)))] =
            to_lower(trim(kv.substr(eq + 1)));
      }
    }

    if (!seen.insert(e.word).second) {
      throw ValidationError("line " + std::to_string(lineno) +
                            ": duplicate lexicon entry '" + e.word + "'");
    }
    entries.push_back(std::move(e));
  }
  if (!header) throw ParseError("missing '#!lexicon-v1' header", lineno);
  return Lexicon(std::move(entries), std::string(kLexiconHeader.substr(2)));
}

inline Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lexicon file " + path.string());
  return parse_lexicon(in);
}

struct SubstituteStats {
  std::size_t occurrences = 0;
  double mean = 0.0;
  // substitute-set size -> number of content-word occurrences
  std::map<std::size_t, std::size_t> histogram;
};

/// Average substitute-set size over every content-word occurrence.
inline SubstituteStats lexicon_stats(const Lexicon& lex,
                                     const std::vector<Sentence>& corpus) {
  SubstituteStats stats;
  std::size_t total = 0;
  for (const Sentence& s : corpus) {
    for (const Token& t : s.tokens) {
      if (!t.is_content()) continue;
      const std::size_t n = lex.substitutes(t).size();
      ++stats.occurrences;
      ++stats.histogram[n];
      total += n;
    }
  }
  if (stats.occurrences == 0) {
    throw EmptyCorpus("corpus has no content-word occurrences");
  }
  stats.mean =
      static_cast<double>(total) / static_cast<double>(stats.occurrences);
  return stats;
}

}  // namespace swarmattack

#endif  // SWARMATTACK_LEXICON_HPP_
