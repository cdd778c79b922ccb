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

#ifndef SWARMATTACK_CORPUS_HPP_
#define SWARMATTACK_CORPUS_HPP_

#include <filesystem>
#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "swarmattack/errors.hpp"
#include "swarmattack/sentence.hpp"
#include "swarmattack/text.hpp"

namespace swarmattack {

// Tagged corpus: one JSON object per line,
//   {"tokens":[{"w":"...","lemma":"...","pos":"noun"},...],"label":1}
// with optional "context" (unperturbed pair element). Missing lemmas default
// to the lowercased surface, missing tags to "other".
inline Sentence parse_tagged_line(const std::string& line, std::size_t lineno) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), lineno);
  }
  if (!j.is_object() || !j.contains("tokens") || !j["tokens"].is_array()) {
    throw ParseError("record needs a \"tokens\" array", lineno);
  }
  Sentence s;
  for (const auto& tok : j["tokens"]) {
    if (!tok.is_object() || !tok.contains("w") || !tok["w"].is_string()) {
      throw ParseError("token needs a string \"w\"", lineno);
    }
    Token t;
    t.surface = tok["w"].get<std::string>();
    if (t.surface.empty() ||
        t.surface.find_first_of(" \t\r\n") != std::string::npos) {
      throw ParseError("token surface must be non-empty without whitespace",
                       lineno);
    }
    t.lemma = tok.contains("lemma") && tok["lemma"].is_string()
                  ? to_lower(tok["lemma"].get<std::string>())
                  : to_lower(t.surface);
    if (tok.contains("pos")) {
      if (!tok["pos"].is_string())
        throw ParseError("pos must be a string", lineno);
      const auto p = parse_pos(tok["pos"].get<std::string>());
      if (!p) {
        throw ParseError("unknown pos '" + tok["pos"].get<std::string>() + "'",
                         lineno);
      }
      t.pos = *p;
    }
    s.tokens.push_back(std::move(t));
  }
  if (j.contains("label") && !j["label"].is_null()) {
    if (!j["label"].is_number_integer()) {
      throw ParseError("label must be an integer", lineno);
    }
    s.label = j["label"].get<int>();
  }
  if (j.contains("context") && !j["context"].is_null()) {
    if (!j["context"].is_string()) {
      throw ParseError("context must be a string", lineno);
    }
    s.context = j["context"].get<std::string>();
  }
  return s;
}

inline std::vector<Sentence> read_tagged_corpus(std::istream& in) {
  std::vector<Sentence> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    out.push_back(parse_tagged_line(line, lineno));
  }
  return out;
}

/// Untagged text: one sentence per line, whitespace tokenized.
inline std::vector<Sentence> read_plain_corpus(std::istream& in) {
  std::vector<Sentence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    Sentence s;
    for (std::string& w : split_whitespace(line)) {
      Token t;
      t.lemma = to_lower(w);
      t.surface = std::move(w);
      s.tokens.push_back(std::move(t));
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Sentence> load_corpus(const std::filesystem::path& path,
                                         bool plain = false) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file " + path.string());
  return plain ? read_plain_corpus(in) : read_tagged_corpus(in);
}

inline Sentence sentence_from_text(const std::string& text) {
  Sentence s;
  for (std::string& w : split_whitespace(text)) {
    Token t;
    t.lemma = to_lower(w);
    t.surface = std::move(w);
    s.tokens.push_back(std::move(t));
  }
  return s;
}

inline nlohmann::json to_json(const Sentence& s) {
  nlohmann::json toks = nlohmann::json::array();
  for (const Token& t : s.tokens) {
    toks.push_back({{"w", t.surface},
                    {"lemma", t.lemma},
                    {"pos", std::string(pos_name(t.pos))}});
  }
  nlohmann::json j{{"tokens", std::move(toks)}};
  if (s.label) j["label"] = *s.label;
  if (s.context) j["context"] = *s.context;
  return j;
}

}  // namespace swarmattack

#endif  // SWARMATTACK_CORPUS_HPP_
