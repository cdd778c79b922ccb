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

#ifndef SWARMATTACK_TEXT_HPP_
#define SWARMATTACK_TEXT_HPP_

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace swarmattack {

// ASCII case folding; bytes >= 0x80 pass through untouched so UTF-8 survives.
inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

inline std::string to_upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

enum class CasePattern { kLower, kCapitalized, kUpper };

inline CasePattern case_pattern(std::string_view word) {
  int letters = 0;
  int upper = 0;
  for (char c : word) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalpha(u)) {
      ++letters;
      if (std::isupper(u)) ++upper;
    }
  }
  if (letters >= 2 && upper == letters) return CasePattern::kUpper;
  if (!word.empty() && std::isupper(static_cast<unsigned char>(word[0]))) {
    return CasePattern::kCapitalized;
  }
  return CasePattern::kLower;
}

inline std::string apply_case(std::string_view lower_word, CasePattern p) {
  switch (p) {
    case CasePattern::kUpper:
      return to_upper(lower_word);
    case CasePattern::kCapitalized: {
      std::string out(lower_word);
      if (!out.empty()) {
        out[0] =
            static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
      }
      return out;
    }
    case CasePattern::kLower:
      break;
  }
  return std::string(lower_word);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const std::size_t b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const std::size_t e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace swarmattack

#endif  // SWARMATTACK_TEXT_HPP_
