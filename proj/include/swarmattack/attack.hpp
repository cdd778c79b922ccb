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

#ifndef SWARMATTACK_ATTACK_HPP_
#define SWARMATTACK_ATTACK_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swarmattack/errors.hpp"
#include "swarmattack/space.hpp"
#include "swarmattack/victim.hpp"

namespace swarmattack {

enum class AttackStatus { kSuccess, kExhausted, kBudgetExceeded, kInfeasible };

inline std::string_view status_name(AttackStatus s) {
  switch (s) {
    case AttackStatus::kSuccess:
      return "success";
    case AttackStatus::kExhausted:
      return "exhausted";
    case AttackStatus::kBudgetExceeded:
      return "budget_exceeded";
    case AttackStatus::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

inline std::optional<AttackStatus> parse_status(std::string_view s) {
  for (auto st : {AttackStatus::kSuccess, AttackStatus::kExhausted,
                  AttackStatus::kBudgetExceeded, AttackStatus::kInfeasible}) {
    if (status_name(st) == s) return st;
  }
  return std::nullopt;
}

/// Outcome of one attack. A Success is guaranteed to be classified as
/// `target` by the victim and to stay within the modification-rate cap.
struct AttackResult {
  AttackStatus status = AttackStatus::kInfeasible;
  std::optional<Sentence> adversarial;
  std::optional<Assignment> assignment;
  std::size_t target = 0;
  double target_prob = 0.0;
  double mod_rate = 0.0;
  std::size_t iterations = 0;
  std::uint64_t queries = 0;
  std::uint64_t seed = 0;
};

/// Scores assignments of one space against one victim while counting the
/// queries this attack spends and enforcing its optional budget.
///
/// Construction scores the original sentence (one query) and checks the
/// attack preconditions.
class FitnessOracle {
 public:
  FitnessOracle(const SearchSpace& space, Victim& victim, std::size_t target,
                double max_mod_rate,
                std::optional<std::uint64_t> query_budget = std::nullopt)
      : space_(space),
        victim_(victim),
        target_(target),
        max_edits_(max_edits(max_mod_rate, space.dims())),
        budget_(query_budget) {
    if (target >= victim.manifest().num_labels()) {
      throw PreconditionViolated("target label " + std::to_string(target) +
                                 " out of range");
    }
    if (space.mutable_positions().empty()) {
      throw PreconditionViolated("search space has no substitutable position");
    }
    Sentence original = space.original();
    original_ = victim_
                    .predict_batch(std::span<const Sentence>(&original, 1),
                                   space.original().context)
                    .front();
    queries_ = 1;
    if (original_.argmax() == target_) {
      throw PreconditionViolated(
          "original input is already classified as "
          "the target label");
    }
  }

  /// Scores one batch; nullopt if it does not fit in the remaining budget.
  std::optional<std::vector<VictimPrediction>> score(
      std::span<const Assignment> batch) {
    if (budget_ && queries_ + batch.size() > *budget_) return std::nullopt;
    std::vector<Sentence> sentences;
    sentences.reserve(batch.size());
    for (const Assignment& a : batch) sentences.push_back(render(space_, a));
    queries_ += batch.size();
    return victim_.predict_batch(sentences, space_.original().context);
  }

  /// Scores sentences that are not assignments of the space (e.g. saliency
  /// probes). Budget semantics as score().
  std::optional<std::vector<VictimPrediction>> score_sentences(
      std::span<const Sentence> sentences) {
    if (budget_ && queries_ + sentences.size() > *budget_) return std::nullopt;
    queries_ += sentences.size();
    return victim_.predict_batch(sentences, space_.original().context);
  }

  bool within_cap(const Assignment& a) const {
    return edit_distance(a, space_.origin()) <= max_edits_;
  }

  bool is_success(const Assignment& a, const VictimPrediction& p) const {
    return p.argmax() == target_ && within_cap(a);
  }

  /// Index of the successful member with the highest target probability,
  /// ties to the lowest index.
  std::optional<std::size_t> best_success(
      std::span<const Assignment> members,
      std::span<const VictimPrediction> preds) const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!is_success(members[i], preds[i])) continue;
      if (!best || preds[i][target_] > preds[*best][target_]) best = i;
    }
    return best;
  }

  AttackResult result(AttackStatus status, const Assignment& a, double prob,
                      std::size_t iterations, std::uint64_t seed) const {
    AttackResult r;
    r.status = status;
    r.assignment = a;
    r.adversarial = render(space_, a);
    r.target = target_;
    r.target_prob = prob;
    r.mod_rate = modification_rate(a, space_);
    r.iterations = iterations;
    r.queries = queries_;
    r.seed = seed;
    return r;
  }

  const SearchSpace& space() const { return space_; }
  const VictimPrediction& original_prediction() const { return original_; }
  std::size_t target() const { return target_; }
  std::size_t max_edits_allowed() const { return max_edits_; }
  std::uint64_t queries() const { return queries_; }

 private:
  const SearchSpace& space_;
  Victim& victim_;
  std::size_t target_;
  std::size_t max_edits_;
  std::optional<std::uint64_t> budget_;
  VictimPrediction original_;
  std::uint64_t queries_ = 0;
};

/// Most probable label other than the original prediction (ties to the
/// lowest index). Used when no explicit target is given.
inline std::size_t untargeted_label(const VictimPrediction& original) {
  const std::size_t orig = original.argmax();
  std::size_t best = orig == 0 ? 1 : 0;
  for (std::size_t l = 0; l < original.probs.size(); ++l) {
    if (l != orig && original[l] > original[best]) best = l;
  }
  return best;
}

}  // namespace swarmattack

#endif  // SWARMATTACK_ATTACK_HPP_
