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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "swarmattack/exhaustive.hpp"
#include "swarmattack/genetic.hpp"
#include "swarmattack/greedy.hpp"
#include "swarmattack/pso.hpp"
#include "test_support.hpp"

namespace swarmattack {
namespace {

using testing::binary_bow;
using testing::words;

void enumerate(const SearchSpace& space, Assignment& a, std::size_t d,
               std::vector<Assignment>& out) {
  if (d == a.size()) {
    out.push_back(a);
    return;
  }
  for (std::size_t c = 0; c < space.choices(d); ++c) {
    a[d] = c;
    enumerate(space, a, d + 1, out);
  }
  a[d] = 0;
}

// Brute force over every assignment: fewest edits, then lexicographic.
std::optional<Assignment> brute_oracle(const SearchSpace& space,
                                       BowVictim& victim, std::size_t target,
                                       double max_mod_rate) {
  std::vector<Assignment> all;
  Assignment a = space.origin();
  enumerate(space, a, 0, all);
  std::optional<Assignment> best;
  for (const Assignment& c : all) {
    const std::size_t e = edit_distance(c, space.origin());
    if (e > max_edits(max_mod_rate, space.dims())) continue;
    if (victim.predict(render(space, c)).argmax() != target) continue;
    if (!best) {
      best = c;
      continue;
    }
    const std::size_t be = edit_distance(*best, space.origin());
    if (e < be || (e == be && c < *best)) best = c;
  }
  return best;
}

TEST(ExhaustiveTest, KnownOneEditSolution) {
  const SearchSpace space(words({"bad", "plot", "x", "y"}),
                          {{"bad", "good", "fine"}, {"plot"}, {"x"}, {"y"}});
  auto victim = binary_bow({{"bad", -1.0}, {"good", 2.0}, {"fine", 1.5}});
  const auto a = exhaustive_search(space, *victim, 1, 0.25);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->indices, (std::vector<std::size_t>{1, 0, 0, 0}));
}

TEST(ExhaustiveTest, InfeasibleIsNone) {
  const SearchSpace space(words({"bad", "plot"}), {{"bad", "awful"}, {"plot"}});
  auto victim = binary_bow({{"bad", -1.0}, {"awful", -2.0}});
  EXPECT_FALSE(exhaustive_search(space, *victim, 1, 1.0).has_value());
}

TEST(ExhaustiveTest, FeasibleOnlyAboveCapIsNone) {
  const SearchSpace space(words({"bad", "awful", "x", "y"}),
                          {{"bad", "good"}, {"awful", "fine"}, {"x"}, {"y"}});
  auto victim = binary_bow(
      {{"bad", -1.0}, {"awful", -1.0}, {"good", 0.4}, {"fine", 0.4}});
  EXPECT_FALSE(exhaustive_search(space, *victim, 1, 0.25).has_value());
  const auto both = exhaustive_search(space, *victim, 1, 0.5);
  ASSERT_TRUE(both.has_value());
  EXPECT_EQ(both->indices, (std::vector<std::size_t>{1, 1, 0, 0}));
}

TEST(ExhaustiveTest, TooLargeSpaceThrows) {
  const SearchSpace space(words({"a", "b", "c"}),
                          {{"a", "x", "y"}, {"b", "x", "y"}, {"c", "x", "y"}});
  auto victim = binary_bow({{"x", 1.0}}, -10.0);
  EXPECT_THROW(exhaustive_search(space, *victim, 1, 1.0, 26), SpaceTooLarge);
  EXPECT_NO_THROW(exhaustive_search(space, *victim, 1, 1.0, 27));
}

TEST(ExhaustiveTest, MatchesBruteForceOnRandomSpaces) {
  Rng gen(17);
  for (int i = 0; i < 150; ++i) {
    auto inst = testing::random_instance(gen, 6, 3);
    for (double cap : {0.25, 0.5, 1.0}) {
      EXPECT_EQ(exhaustive_search(inst.space, *inst.victim, 1, cap),
                brute_oracle(inst.space, *inst.victim, 1, cap))
          << "instance " << i << " cap " << cap;
    }
  }
}

TEST(ExhaustiveTest, AttackWrapperStatusAndQueries) {
  const SearchSpace space(words({"bad", "plot", "x", "y"}),
                          {{"bad", "good", "fine"}, {"plot"}, {"x"}, {"y"}});
  auto victim = binary_bow({{"bad", -1.0}, {"good", 2.0}, {"fine", 1.5}});
  const AttackResult r = exhaustive_attack(space, *victim, 1, 0.25);
  EXPECT_EQ(r.status, AttackStatus::kSuccess);
  EXPECT_EQ(r.queries, victim->total_queries());
  EXPECT_EQ(r.adversarial->tokens[0].surface, "good");

  auto weak = binary_bow({{"bad", -1.0}});
  const AttackResult none = exhaustive_attack(space, *weak, 1, 0.25);
  EXPECT_EQ(none.status, AttackStatus::kInfeasible);
  EXPECT_FALSE(none.adversarial.has_value());
}

TEST(GeneticTest, SingleFlipSucceeds) {
  const SearchSpace space(words({"bad", "movie", "it", "was"}),
                          {{"bad", "good"}, {"movie"}, {"it"}, {"was"}});
  auto victim = binary_bow({{"bad", -1.0}, {"good", 1.0}});
  const AttackResult r = genetic_attack(space, *victim, 1, GeneticParams{}, 3);
  EXPECT_EQ(r.status, AttackStatus::kSuccess);
  EXPECT_DOUBLE_EQ(r.mod_rate, 0.25);
}

TEST(GeneticTest, InfeasibleNeverSucceeds) {
  const SearchSpace space(words({"bad", "awful", "x", "y"}),
                          {{"bad", "good"}, {"awful", "fine"}, {"x"}, {"y"}});
  auto victim = binary_bow(
      {{"bad", -1.0}, {"awful", -1.0}, {"good", 0.4}, {"fine", 0.4}});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const AttackResult r =
        genetic_attack(space, *victim, 1, GeneticParams{}, seed);
    EXPECT_EQ(r.status, AttackStatus::kExhausted);
    EXPECT_EQ(r.queries, 1u + 60u + 20u * 59u);
  }
}

TEST(GeneticTest, ZeroGenerationsScoresInitialPopulationOnly) {
  const SearchSpace space(words({"bad", "awful", "x", "y"}),
                          {{"bad", "good"}, {"awful", "fine"}, {"x"}, {"y"}});
  auto victim = binary_bow({{"bad", -1.0}, {"awful", -1.0}});
  GeneticParams p;
  p.generations = 0;
  const AttackResult r = genetic_attack(space, *victim, 1, p, 1);
  EXPECT_EQ(r.status, AttackStatus::kExhausted);
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_EQ(r.queries, 61u);
  EXPECT_EQ(victim->total_queries(), 61u);
}

TEST(GeneticTest, RouletteFollowsWeights) {
  Rng rng(4);
  const std::vector<double> w = {0.0, 1.0, 3.0};
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 8000; ++i) ++counts[detail::roulette(w, 4.0, rng)];
  EXPECT_EQ(counts[0], 0);
  EXPECT_NEAR(counts[2] / 8000.0, 0.75, 0.03);
  std::vector<int> flat(3, 0);
  for (int i = 0; i < 3000; ++i) {
    ++flat[detail::roulette({0.0, 0.0, 0.0}, 0.0, rng)];
  }
  for (int c : flat) EXPECT_GT(c, 800);
}

TEST(GeneticTest, InvalidParamsAreConfigErrors) {
  GeneticParams p;
  p.elite = 0;
  EXPECT_THROW(p.validate(), ConfigError);
  p.elite = 61;
  EXPECT_THROW(p.validate(), ConfigError);
  p = GeneticParams{};
  p.child_mutation_prob = 1.5;
  EXPECT_THROW(p.validate(), ConfigError);
}

TEST(GreedyTest, EachStepPicksOracleArgmax) {
  // Linear victim: at every visited position greedy must keep the candidate
  // with the highest target probability against the current sentence.
  Rng gen(9);
  for (int i = 0; i < 60; ++i) {
    auto inst = testing::random_instance(gen, 8, 3);
    GreedyParams p;
    p.max_mod_rate = 1.0;
    const AttackResult r = greedy_attack(inst.space, *inst.victim, 1, p, 0);
    // Replay: walk positions by saliency and compare the picks.
    const auto& pos = inst.space.mutable_positions();
    const double orig0 = inst.victim->predict(inst.space.original())[0];
    std::vector<std::pair<double, std::size_t>> sal;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      Sentence s = inst.space.original();
      s.tokens[pos[k]].surface = "<unk>";
      sal.push_back({orig0 - inst.victim->predict(s)[0], k});
    }
    std::stable_sort(sal.begin(), sal.end(), [](const auto& a, const auto& b) {
      return a.first > b.first;
    });
    Assignment cur = inst.space.origin();
    double cur_p = inst.victim->predict(inst.space.original())[1];
    for (const auto& [s, k] : sal) {
      const std::size_t d = pos[k];
      std::size_t best = 0;
      double best_p = -1.0;
      for (std::size_t c = 1; c < inst.space.choices(d); ++c) {
        Assignment t = cur;
        t[d] = c;
        const double q = inst.victim->predict(render(inst.space, t))[1];
        if (q > best_p) {
          best_p = q;
          best = c;
        }
      }
      if (best_p > cur_p) {
        cur[d] = best;
        cur_p = best_p;
        if (best_p > 0.5) break;
      }
    }
    EXPECT_EQ(*r.assignment, cur) << "instance " << i;
  }
}

TEST(GreedyTest, TwoStepJointSubstitution) {
  // Each single change raises the target probability but only both flip it.
  const SearchSpace space(words({"bad", "dull", "plot", "x"}),
                          {{"bad", "fine"}, {"dull", "calm"}, {"plot"}, {"x"}});
  auto victim =
      binary_bow({{"bad", -1.0}, {"dull", -1.0}, {"fine", 0.2}, {"calm", 0.3}});
  ASSERT_TRUE(exhaustive_search(space, *victim, 1, 0.5).has_value());
  ASSERT_FALSE(exhaustive_search(space, *victim, 1, 0.25).has_value());
  GreedyParams p;
  p.max_mod_rate = 0.5;
  const AttackResult r = greedy_attack(space, *victim, 1, p, 0);
  ASSERT_EQ(r.status, AttackStatus::kSuccess);
  EXPECT_EQ(r.iterations, 2u);
  EXPECT_EQ(r.assignment->indices, (std::vector<std::size_t>{1, 1, 0, 0}));
}

TEST(GreedyTest, NoImprovementMeansZeroEdits) {
  const SearchSpace space(words({"good", "fine", "x", "y"}),
                          {{"good", "bad"}, {"fine", "awful"}, {"x"}, {"y"}});
  auto victim = binary_bow(
      {{"good", -1.0}, {"fine", -1.0}, {"bad", -2.0}, {"awful", -3.0}});
  GreedyParams p;
  p.max_mod_rate = 1.0;
  const AttackResult r = greedy_attack(space, *victim, 1, p, 0);
  EXPECT_EQ(r.status, AttackStatus::kExhausted);
  EXPECT_EQ(r.assignment, space.origin());
  EXPECT_DOUBLE_EQ(r.mod_rate, 0.0);
}

TEST(GreedyTest, QueryCountMatchesLedger) {
  Rng gen(44);
  for (int i = 0; i < 20; ++i) {
    auto inst = testing::random_instance(gen);
    const AttackResult r = greedy_attack(inst.space, *inst.victim, 1, {}, 0);
    EXPECT_EQ(r.queries, inst.victim->total_queries());
  }
}

TEST(SoundnessTest, NoAlgorithmBeatsTheOracle) {
  Rng gen(101);
  int infeasible = 0;
  for (int i = 0; i < 80; ++i) {
    auto inst = testing::random_instance(gen);
    if (exhaustive_search(inst.space, *inst.victim, 1, 0.25)) continue;
    ++infeasible;
    PsoParams pp;
    pp.population = 20;
    pp.iterations = 5;
    GeneticParams gp;
    gp.population = 20;
    gp.generations = 5;
    EXPECT_NE(pso_attack(inst.space, *inst.victim, 1, pp, i).status,
              AttackStatus::kSuccess);
    EXPECT_NE(genetic_attack(inst.space, *inst.victim, 1, gp, i).status,
              AttackStatus::kSuccess);
    EXPECT_NE(greedy_attack(inst.space, *inst.victim, 1, {}, i).status,
              AttackStatus::kSuccess);
  }
  EXPECT_GT(infeasible, 10);
}

TEST(QueryLedgerTest, AttackQueriesEqualSentencesScored) {
  Rng gen(55);
  for (int i = 0; i < 20; ++i) {
    auto inst = testing::random_instance(gen);
    PsoParams pp;
    pp.population = 12;
    pp.iterations = 4;
    const AttackResult a = pso_attack(inst.space, *inst.victim, 1, pp, i);
    GeneticParams gp;
    gp.population = 12;
    gp.generations = 4;
    const AttackResult b = genetic_attack(inst.space, *inst.victim, 1, gp, i);
    EXPECT_EQ(a.queries + b.queries, inst.victim->total_queries());
  }
}

}  // namespace
}  // namespace swarmattack
