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

#ifndef SWARMATTACK_EXHAUSTIVE_HPP_
#define SWARMATTACK_EXHAUSTIVE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swarmattack/attack.hpp"
#include "swarmattack/errors.hpp"
#include "swarmattack/space.hpp"
#include "swarmattack/victim.hpp"

namespace swarmattack {

inline constexpr std::size_t kDefaultExhaustiveCap = 1'000'000;

namespace detail {

// Advances `a` to the next assignment in lexicographic order (last position
// fastest). Returns false after the last one.
inline bool next_assignment(Assignment& a, const SearchSpace& space) {
  for (std::size_t d = a.size(); d-- > 0;) {
    if (++a[d] < space.choices(d)) return true;
    a[d] = 0;
  }
  return false;
}

using ScoredAssignment = std::pair<Assignment, VictimPrediction>;

// Enumerates every assignment with exactly `edits` changes in lexicographic
// order, scoring them in batches. Returns the first one that `accept`s.
template <typename Score, typename Accept>
std::optional<ScoredAssignment> scan_level(const SearchSpace& space,
                                           std::size_t edits, Score&& score,
                                           Accept&& accept) {
  constexpr std::size_t kBatch = 512;
  const Assignment origin = space.origin();
  Assignment a = origin;
  std::vector<Assignment> batch;
  auto flush = [&]() -> std::optional<ScoredAssignment> {
    if (batch.empty()) return std::nullopt;
    std::vector<VictimPrediction> preds = score(batch);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (accept(preds[i]))
        return ScoredAssignment{batch[i], std::move(preds[i])};
    }
    batch.clear();
    return std::nullopt;
  };
  do {
    if (edit_distance(a, origin) != edits) continue;
    batch.push_back(a);
    if (batch.size() == kBatch) {
      if (auto hit = flush()) return hit;
    }
  } while (next_assignment(a, space));
  return flush();
}

inline std::optional<ScoredAssignment> exhaustive_scan(
    const SearchSpace& space, Victim& victim, std::size_t target,
    double max_mod_rate, std::size_t cap, std::uint64_t* queries) {
  if (space.size_capped(cap) > cap) {
    throw SpaceTooLarge("search space exceeds " + std::to_string(cap) +
                        " assignments");
  }
  const std::size_t limit = max_edits(max_mod_rate, space.dims());
  auto score = [&](const std::vector<Assignment>& batch) {
    std::vector<Sentence> sentences;
    sentences.reserve(batch.size());
    for (const Assignment& a : batch) sentences.push_back(render(space, a));
    if (queries != nullptr) *queries += sentences.size();
    return victim.predict_batch(sentences, space.original().context);
  };
  auto accept = [&](const VictimPrediction& p) { return p.argmax() == target; };
  for (std::size_t e = 0; e <= limit && e <= space.dims(); ++e) {
    if (auto hit = scan_level(space, e, score, accept)) return hit;
  }
  return std::nullopt;
}

}  // namespace detail

/// Exact oracle: the assignment with the fewest edits (ties broken by the
/// lexicographically smallest index vector) that the victim labels `target`
/// within the modification-rate cap, or nullopt when none exists.
inline std::optional<Assignment> exhaustive_search(
    const SearchSpace& space, Victim& victim, std::size_t target,
    double max_mod_rate, std::size_t cap = kDefaultExhaustiveCap,
    std::uint64_t* queries = nullptr) {
  auto hit = detail::exhaustive_scan(space, victim, target, max_mod_rate, cap,
                                     queries);
  if (!hit) return std::nullopt;
  return std::move(hit->first);
}

/// exhaustive_search packaged as an attack: Success with the oracle's
/// assignment, otherwise Infeasible.
inline AttackResult exhaustive_attack(const SearchSpace& space, Victim& victim,
                                      std::size_t target, double max_mod_rate,
                                      std::size_t cap = kDefaultExhaustiveCap,
                                      std::uint64_t seed = 0) {
  FitnessOracle oracle(space, victim, target, max_mod_rate);
  std::uint64_t queries = oracle.queries();
  const auto hit = detail::exhaustive_scan(space, victim, target, max_mod_rate,
                                           cap, &queries);
  AttackResult r;
  if (hit) {
    r = oracle.result(AttackStatus::kSuccess, hit->first, hit->second[target],
                      0, seed);
  } else {
    r = oracle.result(AttackStatus::kInfeasible, space.origin(),
                      oracle.original_prediction()[target], 0, seed);
    r.adversarial.reset();
    r.assignment.reset();
  }
  r.queries = queries;
  return r;
}

}  // namespace swarmattack

#endif  // SWARMATTACK_EXHAUSTIVE_HPP_
