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

#ifndef SWARMATTACK_GREEDY_HPP_
#define SWARMATTACK_GREEDY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swarmattack/attack.hpp"
#include "swarmattack/space.hpp"
#include "swarmattack/victim.hpp"

namespace swarmattack {

struct GreedyParams {
  double max_mod_rate = 0.25;
  // Replacement used to measure a position's saliency.
  std::string unk_token = "<unk>";
  std::optional<std::uint64_t> query_budget;

  void validate() const {
    if (!(max_mod_rate >= 0.0 && max_mod_rate <= 1.0)) {
      throw ConfigError("max_mod_rate must lie in [0, 1]");
    }
    if (unk_token.empty()) throw ConfigError("unk_token must be non-empty");
  }
};

/// Saliency-ordered greedy substitution.
///
/// The saliency of a substitutable position is the drop in the original
/// label's probability when its token is replaced by `unk_token`. Positions
/// are visited in descending saliency (ties by position). At each one every
/// candidate is tried against the current sentence and the best is kept if
/// it strictly raises the target probability. The search stops at the first
/// valid adversarial example, or when the edit cap leaves no room.
inline AttackResult greedy_attack(const SearchSpace& space, Victim& victim,
                                  std::size_t target,
                                  const GreedyParams& params,
                                  std::uint64_t seed) {
  params.validate();
  FitnessOracle oracle(space, victim, target, params.max_mod_rate,
                       params.query_budget);
  const VictimPrediction& original = oracle.original_prediction();
  const std::size_t orig_label = original.argmax();
  const auto& positions = space.mutable_positions();

  std::vector<Sentence> probes;
  probes.reserve(positions.size());
  for (std::size_t d : positions) {
    Sentence s = space.original();
    s.tokens[d].surface = params.unk_token;
    s.tokens[d].lemma = params.unk_token;
    probes.push_back(std::move(s));
  }
  Assignment current = space.origin();
  double current_prob = original[target];
  auto probe_preds = oracle.score_sentences(probes);
  if (!probe_preds) {
    return oracle.result(AttackStatus::kBudgetExceeded, current, current_prob,
                         0, seed);
  }

  std::vector<std::size_t> order(positions.size());
  std::vector<double> saliency(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    order[i] = i;
    saliency[i] = original[orig_label] - (*probe_preds)[i][orig_label];
  }
  std::stable_sort(
      order.begin(), order.end(),
      [&](std::size_t a, std::size_t b) { return saliency[a] > saliency[b]; });

  std::size_t steps = 0;
  std::size_t edits = 0;
  for (std::size_t i : order) {
    if (edits >= oracle.max_edits_allowed()) break;
    const std::size_t d = positions[i];
    std::vector<Assignment> trials;
    for (std::size_t c = 1; c < space.choices(d); ++c) {
      Assignment a = current;
      a[d] = c;
      trials.push_back(std::move(a));
    }
    auto preds = oracle.score(trials);
    if (!preds) {
      return oracle.result(AttackStatus::kBudgetExceeded, current, current_prob,
                           steps, seed);
    }
    ++steps;
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < trials.size(); ++j) {
      if (!best || (*preds)[j][target] > (*preds)[*best][target]) best = j;
    }
    if (!best || !((*preds)[*best][target] > current_prob)) continue;
    current = trials[*best];
    current_prob = (*preds)[*best][target];
    ++edits;
    if (oracle.is_success(current, (*preds)[*best])) {
      return oracle.result(AttackStatus::kSuccess, current, current_prob, steps,
                           seed);
    }
  }
  return oracle.result(AttackStatus::kExhausted, current, current_prob, steps,
                       seed);
}

}  // namespace swarmattack

#endif  // SWARMATTACK_GREEDY_HPP_
