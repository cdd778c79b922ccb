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

#ifndef SWARMATTACK_SPACE_HPP_
#define SWARMATTACK_SPACE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "swarmattack/errors.hpp"
#include "swarmattack/lexicon.hpp"
#include "swarmattack/sentence.hpp"
#include "swarmattack/text.hpp"

namespace swarmattack {

/// Candidate index per position of a search space.
struct Assignment {
  std::vector<std::size_t> indices;

  static Assignment zeros(std::size_t dims) {
    return Assignment{std::vector<std::size_t>(dims, 0)};
  }
  std::size_t size() const { return indices.size(); }
  std::size_t operator[](std::size_t d) const { return indices[d]; }
  std::size_t& operator[](std::size_t d) { return indices[d]; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// Number of positions where two assignments pick different candidates.
inline std::size_t edit_distance(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("assignments of length " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
  }
  std::size_t n = 0;
  for (std::size_t d = 0; d < a.size(); ++d) n += a[d] != b[d] ? 1 : 0;
  return n;
}

/// Edit count allowed by a modification-rate cap for a sentence of length D.
inline std::size_t max_edits(double max_mod_rate, std::size_t dims) {
  return static_cast<std::size_t>(max_mod_rate * static_cast<double>(dims) +
                                  1e-9);
}

/// The reduced discrete space for one sentence: position d may take any of
/// `candidates()[d]`, whose first element is the original token.
class SearchSpace {
 public:
  SearchSpace(Sentence original, std::vector<std::vector<std::string>> cands)
      : original_(std::move(original)), candidates_(std::move(cands)) {
    if (candidates_.size() != original_.size()) {
      throw LengthMismatch("candidate lists do not match sentence length");
    }
    for (std::size_t d = 0; d < candidates_.size(); ++d) {
      const auto& list = candidates_[d];
      if (list.empty() || list[0] != original_.tokens[d].surface) {
        throw ValidationError("candidate list " + std::to_string(d) +
                              " must start with the original token");
      }
      if (std::set<std::string>(list.begin(), list.end()).size() !=
          list.size()) {
        throw ValidationError("candidate list " + std::to_string(d) +
                              " has duplicates");
      }
      if (list.size() > 1) mutable_.push_back(d);
    }
  }

  const Sentence& original() const { return original_; }
  const std::vector<std::vector<std::string>>& candidates() const {
    return candidates_;
  }
  std::size_t dims() const { return candidates_.size(); }
  std::size_t choices(std::size_t d) const { return candidates_[d].size(); }
  bool is_singleton(std::size_t d) const { return candidates_[d].size() == 1; }
  /// Positions with at least one substitute, ascending.
  const std::vector<std::size_t>& mutable_positions() const { return mutable_; }
  Assignment origin() const { return Assignment::zeros(dims()); }

  /// Product of list sizes, saturating at `cap + 1`.
  std::size_t size_capped(std::size_t cap) const {
    std::size_t product = 1;
    for (const auto& list : candidates_) {
      if (product > (cap + 1) / list.size()) return cap + 1;
      product *= list.size();
    }
    return product;
  }

  void check(const Assignment& a) const {
    if (a.size() != dims()) {
      throw IndexOutOfRange("assignment length " + std::to_string(a.size()) +
                            " != " + std::to_string(dims()));
    }
    for (std::size_t d = 0; d < dims(); ++d) {
      if (a[d] >= candidates_[d].size()) {
        throw IndexOutOfRange("index " + std::to_string(a[d]) +
                              " out of range at position " + std::to_string(d));
      }
    }
  }

 private:
  Sentence original_;
  std::vector<std::vector<std::string>> candidates_;
  std::vector<std::size_t> mutable_;
};

struct SpaceConfig {
  // Inclusive token-count bounds; nullopt disables the check.
  std::optional<std::pair<std::size_t, std::size_t>> length_bounds =
      std::pair<std::size_t, std::size_t>{10, 100};
  // Treat every token as a content word (for untagged text).
  bool assume_content = false;
};

using Vocabulary = std::unordered_set<std::string>;

/// Builds V(w) for every position: the original token, then its lexicon
/// substitutes in lexicographic order, restricted to `vocab` when given.
/// Substitutes copy the original token's case pattern.
inline SearchSpace build_space(const Sentence& s, const Lexicon& lex,
                               const Vocabulary* vocab,
                               const SpaceConfig& cfg = {}) {
  if (cfg.length_bounds) {
    const auto [lo, hi] = *cfg.length_bounds;
    if (s.size() < lo || s.size() > hi) {
      throw LengthOutOfBounds("sentence length " + std::to_string(s.size()) +
                              " outside [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
    }
  }
  std::vector<std::vector<std::string>> cands;
  cands.reserve(s.size());
  bool any = false;
  for (const Token& t : s.tokens) {
    std::vector<std::string> list{t.surface};
    std::vector<std::string> subs;
    if (t.is_content()) {
      subs = lex.substitutes(t);
    } else if (cfg.assume_content) {
      std::set<std::string> merged;
      for (Pos p : kContentPos) {
        for (auto& w : lex.substitutes(t.surface, p)) merged.insert(w);
      }
      subs.assign(merged.begin(), merged.end());
    }
    const std::string original_lower = to_lower(t.surface);
    const CasePattern pattern = case_pattern(t.surface);
    for (const std::string& w : subs) {
      if (w == original_lower) continue;
      if (vocab != nullptr && !vocab->contains(w)) continue;
      list.push_back(apply_case(w, pattern));
    }
    any = any || list.size() > 1;
    cands.push_back(std::move(list));
  }
  if (!any) throw NoCandidates("no position has a substitute");
  return SearchSpace(s, std::move(cands));
}

/// Sentence selected by `a`. The all-zero assignment reproduces the original.
inline Sentence render(const SearchSpace& space, const Assignment& a) {
  space.check(a);
  Sentence out = space.original();
  for (std::size_t d = 0; d < a.size(); ++d) {
    if (a[d] == 0) continue;
    Token& t = out.tokens[d];
    t.surface = space.candidates()[d][a[d]];
    t.lemma = to_lower(t.surface);
  }
  return out;
}

/// Edit distance to the original divided by the sentence length.
inline double modification_rate(const Assignment& a, const SearchSpace& space) {
  space.check(a);
  if (space.dims() == 0) return 0.0;
  return static_cast<double>(edit_distance(a, space.origin())) /
         static_cast<double>(space.dims());
}

}  // namespace swarmattack

#endif  // SWARMATTACK_SPACE_HPP_
