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

#include "swarmattack/pso.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "test_support.hpp"

namespace swarmattack {
namespace {

using testing::binary_bow;
using testing::words;

TEST(IndicatorTest, Examples) {
  EXPECT_EQ(indicator(3, 3), 1);
  EXPECT_EQ(indicator(3, 5), -1);
  EXPECT_EQ(indicator(0, 0), 1);
}

TEST(PsoParamsTest, DefaultsMatchPublishedSettings) {
  const PsoParams p;
  EXPECT_EQ(p.population, 60u);
  EXPECT_EQ(p.iterations, 20u);
  EXPECT_EQ(p.v_max, 1.0);
  EXPECT_EQ(p.omega_max, 0.8);
  EXPECT_EQ(p.omega_min, 0.2);
  EXPECT_EQ(p.p_max, 0.8);
  EXPECT_EQ(p.p_min, 0.2);
  EXPECT_EQ(p.k, 2.0);
  EXPECT_NO_THROW(p.validate());
}

TEST(PsoParamsTest, InvalidValuesAreConfigErrors) {
  auto bad = [](auto mutate_fn) {
    PsoParams p;
    mutate_fn(p);
    return p;
  };
  EXPECT_THROW(bad([](PsoParams& p) { p.omega_min = 0.9; }).validate(),
               ConfigError);
  EXPECT_THROW(bad([](PsoParams& p) { p.omega_max = 1.0; }).validate(),
               ConfigError);
  EXPECT_THROW(bad([](PsoParams& p) { p.p_min = 0.0; }).validate(),
               ConfigError);
  EXPECT_THROW(bad([](PsoParams& p) { p.population = 0; }).validate(),
               ConfigError);
  EXPECT_THROW(bad([](PsoParams& p) { p.iterations = 0; }).validate(),
               ConfigError);
  EXPECT_THROW(bad([](PsoParams& p) { p.v_max = 0.0; }).validate(),
               ConfigError);
  EXPECT_THROW(bad([](PsoParams& p) { p.k = -1.0; }).validate(), ConfigError);
}

TEST(InertiaTest, EndpointsAndMidpoint) {
  const PsoParams p;
  EXPECT_DOUBLE_EQ(inertia(0, p), 0.8);
  EXPECT_DOUBLE_EQ(inertia(20, p), 0.2);
  EXPECT_NEAR(inertia(10, p), 0.5, 1e-12);
  EXPECT_THROW(inertia(21, p), IterationOutOfRange);
}

TEST(InertiaTest, MonotoneNonIncreasing) {
  const PsoParams p;
  for (std::size_t t = 1; t <= p.iterations; ++t) {
    EXPECT_LE(inertia(t, p), inertia(t - 1, p));
  }
}

TEST(MoveProbsTest, EndpointsAndMidpoint) {
  const PsoParams p;
  auto [pi0, pg0] = move_probs(0, p);
  EXPECT_DOUBLE_EQ(pi0, 0.8);
  EXPECT_DOUBLE_EQ(pg0, 0.2);
  auto [pit, pgt] = move_probs(20, p);
  EXPECT_DOUBLE_EQ(pit, 0.2);
  EXPECT_DOUBLE_EQ(pgt, 0.8);
  auto [pih, pgh] = move_probs(10, p);
  EXPECT_NEAR(pih, 0.5, 1e-12);
  EXPECT_NEAR(pgh, 0.5, 1e-12);
  EXPECT_THROW(move_probs(21, p), IterationOutOfRange);
}

TEST(VelocityUpdateTest, HandDerivedExamples) {
  // p_n == x, p_g != x.
  EXPECT_DOUBLE_EQ(velocity_update(1.0, 0.5, 2, 4, 2), 0.5);
  // p_n == x == p_g.
  EXPECT_DOUBLE_EQ(velocity_update(0.0, 0.5, 1, 1, 1), 1.0);
  // Neither best agrees with x.
  EXPECT_DOUBLE_EQ(velocity_update(0.0, 0.5, 0, 3, 1), -1.0);
}

TEST(VelocityUpdateTest, StaysWithinTwoOnRandomTrajectories) {
  const PsoParams p;
  Rng rng(13);
  for (int run = 0; run < 200; ++run) {
    double v = rng.uniform(-2.0, 2.0);
    for (std::size_t t = 0; t < p.iterations; ++t) {
      v = velocity_update(v, inertia(t, p), rng.below(3), rng.below(3),
                          rng.below(3));
      ASSERT_LE(std::abs(v), 2.0);
    }
  }
}

TEST(MutationProbTest, HandDerivedTriple) {
  const SearchSpace space(
      words({"a", "b", "c", "d", "e"}),
      {{"a", "x"}, {"b", "x"}, {"c", "x"}, {"d", "x"}, {"e", "x"}});
  Assignment a = space.origin();
  EXPECT_DOUBLE_EQ(mutation_prob(a, space, 2.0), 1.0);
  const SearchSpace four(words({"a", "b", "c", "d"}),
                         {{"a", "x"}, {"b", "x"}, {"c", "x"}, {"d", "x"}});
  Assignment quarter = four.origin();
  quarter[2] = 1;
  EXPECT_DOUBLE_EQ(mutation_prob(quarter, four, 2.0), 0.5);
  a[0] = a[1] = a[2] = 1;  // 3 / 5 = 0.6
  EXPECT_DOUBLE_EQ(mutation_prob(a, space, 2.0), 0.0);
}

TEST(MutateTest, ForcedFlip) {
  const SearchSpace space(words({"a", "b", "c"}), {{"a"}, {"b", "x"}, {"c"}});
  Rng rng(1);
  Assignment a = space.origin();
  for (int i = 0; i < 5; ++i) {
    a = mutate(a, space, rng);
    EXPECT_EQ(a[1], static_cast<std::size_t>((i + 1) % 2));
    EXPECT_EQ(a[0], 0u);
    EXPECT_EQ(a[2], 0u);
  }
}

TEST(MutateTest, ChangesExactlyOnePosition) {
  const SearchSpace space(
      words({"a", "b", "c", "d"}),
      {{"a", "x", "y"}, {"b"}, {"c", "x"}, {"d", "x", "y", "z"}});
  Rng rng(2);
  Assignment a = space.origin();
  for (int i = 0; i < 1000; ++i) {
    const Assignment b = mutate(a, space, rng);
    EXPECT_EQ(edit_distance(a, b), 1u);
    EXPECT_EQ(b[1], 0u);
    space.check(b);
    a = b;
  }
}

TEST(MutateTest, UniformOverPositionCandidatePairs) {
  // From the origin the reachable pairs are (pos, candidate != 0). Position
  // is uniform over the 3 substitutable ones, then candidate uniform within.
  const SearchSpace space(
      words({"a", "b", "c", "d"}),
      {{"a", "x", "y"}, {"b"}, {"c", "x"}, {"d", "x", "y", "z"}});
  std::map<std::pair<std::size_t, std::size_t>, double> expected = {
      {{0, 1}, 1.0 / 6}, {{0, 2}, 1.0 / 6}, {{2, 1}, 1.0 / 3},
      {{3, 1}, 1.0 / 9}, {{3, 2}, 1.0 / 9}, {{3, 3}, 1.0 / 9}};
  std::map<std::pair<std::size_t, std::size_t>, int> counts;
  Rng rng(99);
  constexpr int kDraws = 10000;
  for (int i = 0; i < kDraws; ++i) {
    const Assignment b = mutate(space.origin(), space, rng);
    for (std::size_t d = 0; d < b.size(); ++d) {
      if (b[d] != 0) ++counts[{d, b[d]}];
    }
  }
  double chi2 = 0.0;
  for (const auto& [key, p] : expected) {
    const double e = p * kDraws;
    chi2 += (counts[key] - e) * (counts[key] - e) / e;
  }
  EXPECT_EQ(counts.size(), expected.size());
  // 5 degrees of freedom; 0.999 quantile 20.5.
  EXPECT_LT(chi2, 20.5);
}

TEST(MutateTest, NoSubstitutablePositionThrows) {
  const SearchSpace space(words({"a"}), {{"a"}});
  Rng rng(1);
  EXPECT_THROW(mutate(space.origin(), space, rng), NoCandidates);
}

// "bad" at position 0 can become "good", which flips the victim.
struct OneFlip {
  SearchSpace space{words({"bad", "movie", "it", "was"}),
                    {{"bad", "good"}, {"movie"}, {"it"}, {"was"}}};
  std::unique_ptr<BowVictim> victim =
      binary_bow({{"bad", -1.0}, {"good", 1.0}});
};

TEST(PsoAttackTest, SingleFlipSucceedsAtInitialization) {
  OneFlip f;
  const AttackResult r = pso_attack(f.space, *f.victim, 1, PsoParams{}, 7);
  ASSERT_EQ(r.status, AttackStatus::kSuccess);
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_DOUBLE_EQ(r.mod_rate, 0.25);
  EXPECT_EQ(r.adversarial->tokens[0].surface, "good");
  EXPECT_EQ(r.queries, 61u);
  EXPECT_EQ(f.victim->total_queries(), 61u);
}

TEST(PsoAttackTest, OriginalAlreadyTargetIsPreconditionViolated) {
  OneFlip f;
  EXPECT_THROW(pso_attack(f.space, *f.victim, 0, PsoParams{}, 7),
               PreconditionViolated);
  const SearchSpace frozen(words({"bad"}), {{"bad"}});
  EXPECT_THROW(pso_attack(frozen, *f.victim, 1, PsoParams{}, 7),
               PreconditionViolated);
}

TEST(PsoAttackTest, InfeasibleNeverSucceeds) {
  // Needs two edits but the cap allows one.
  const SearchSpace space(words({"bad", "awful", "x", "y"}),
                          {{"bad", "good"}, {"awful", "fine"}, {"x"}, {"y"}});
  auto victim = binary_bow(
      {{"bad", -1.0}, {"awful", -1.0}, {"good", 0.4}, {"fine", 0.4}});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const AttackResult r = pso_attack(space, *victim, 1, PsoParams{}, seed);
    EXPECT_EQ(r.status, AttackStatus::kExhausted);
    EXPECT_EQ(r.iterations, 20u);
    EXPECT_EQ(r.queries, 1u + 60u * 21u);
    EXPECT_TRUE(r.adversarial.has_value());
  }
}

TEST(PsoAttackTest, DeterministicForFixedSeed) {
  Rng gen(4);
  for (int i = 0; i < 20; ++i) {
    auto inst = testing::random_instance(gen);
    PsoParams p;
    p.population = 8;
    p.iterations = 5;
    p.max_mod_rate = 0.5;
    const AttackResult a = pso_attack(inst.space, *inst.victim, 1, p, 123);
    const AttackResult b = pso_attack(inst.space, *inst.victim, 1, p, 123);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.assignment, b.assignment);
    EXPECT_EQ(a.target_prob, b.target_prob);
    EXPECT_EQ(a.queries, b.queries);
    EXPECT_EQ(a.iterations, b.iterations);
  }
}

TEST(PsoAttackTest, SwarmInvariantsHoldEveryIteration) {
  Rng gen(21);
  for (int i = 0; i < 30; ++i) {
    auto inst = testing::random_instance(gen);
    PsoParams p;
    p.population = 10;
    p.iterations = 10;
    p.max_mod_rate = 0.0;  // never succeeds, so every iteration runs
    double last_best = -1.0;
    std::size_t calls = 0;
    const auto observer = [&](const SwarmState& s) {
      ++calls;
      EXPECT_GE(s.global_best_score, last_best);
      last_best = s.global_best_score;
      double max_best = 0.0;
      for (const Particle& part : s.particles) {
        max_best = std::max(max_best, part.best_score);
        EXPECT_EQ(part.velocity.size(), inst.space.dims());
        EXPECT_GE(part.best_score, 0.0);
        EXPECT_LE(part.best_score, 1.0);
        for (std::size_t d = 0; d < inst.space.dims(); ++d) {
          if (inst.space.is_singleton(d)) {
            EXPECT_EQ(part.position[d], 0u);
          }
          if (s.t == 0) {
            EXPECT_LE(std::abs(part.velocity[d]), p.v_max);
          } else {
            EXPECT_LE(std::abs(part.velocity[d]), 2.0);
          }
        }
      }
      EXPECT_DOUBLE_EQ(max_best, s.global_best_score);
      EXPECT_EQ(s.queries_used, 1 + p.population * (s.t + 1));
    };
    const AttackResult r =
        pso_attack(inst.space, *inst.victim, 1, p, 5, observer);
    EXPECT_EQ(r.status, AttackStatus::kExhausted);
    EXPECT_EQ(calls, p.iterations + 1);
  }
}

TEST(PsoAttackTest, QueryBudgetStopsSearch) {
  const SearchSpace space(words({"bad", "awful", "x", "y"}),
                          {{"bad", "good"}, {"awful", "fine"}, {"x"}, {"y"}});
  auto victim = binary_bow(
      {{"bad", -1.0}, {"awful", -1.0}, {"good", 0.4}, {"fine", 0.4}});
  PsoParams p;
  p.query_budget = 1 + 60 * 3;
  const AttackResult r = pso_attack(space, *victim, 1, p, 0);
  EXPECT_EQ(r.status, AttackStatus::kBudgetExceeded);
  EXPECT_EQ(r.queries, 1u + 60u * 3u);
  EXPECT_EQ(r.iterations, 2u);
}

TEST(PsoAttackTest, SuccessIsReverifiedAgainstVictim) {
  Rng gen(31);
  for (int i = 0; i < 100; ++i) {
    auto inst = testing::random_instance(gen);
    PsoParams p;
    p.max_mod_rate = 0.5;
    const AttackResult r = pso_attack(inst.space, *inst.victim, 1, p, i);
    if (r.status != AttackStatus::kSuccess) continue;
    EXPECT_EQ(inst.victim->predict(*r.adversarial).argmax(), 1u);
    EXPECT_LE(r.mod_rate, 0.5);
    EXPECT_EQ(render(inst.space, *r.assignment), *r.adversarial);
    EXPECT_DOUBLE_EQ(r.mod_rate, modification_rate(*r.assignment, inst.space));
  }
}

}  // namespace
}  // namespace swarmattack
