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

#ifndef SWARMATTACK_GENETIC_HPP_
#define SWARMATTACK_GENETIC_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "swarmattack/attack.hpp"
#include "swarmattack/errors.hpp"
#include "swarmattack/pso.hpp"
#include "swarmattack/random.hpp"
#include "swarmattack/space.hpp"
#include "swarmattack/victim.hpp"

namespace swarmattack {

struct GeneticParams {
  std::size_t population = 60;
  std::size_t generations = 20;
  double max_mod_rate = 0.25;
  // Members carried over unchanged into the next generation.
  std::size_t elite = 1;
  // Probability that a child is mutated after crossover.
  double child_mutation_prob = 1.0;
  std::optional<std::uint64_t> query_budget;

  void validate() const {
    if (population < 1) throw ConfigError("genetic population must be >= 1");
    if (elite < 1 || elite > population) {
      throw ConfigError("genetic elite count must lie in [1, population]");
    }
    if (!(child_mutation_prob >= 0.0 && child_mutation_prob <= 1.0)) {
      throw ConfigError("child_mutation_prob must lie in [0, 1]");
    }
    if (!(max_mod_rate >= 0.0 && max_mod_rate <= 1.0)) {
      throw ConfigError("max_mod_rate must lie in [0, 1]");
    }
  }
};

namespace detail {

// Fitness-proportional pick; uniform when every weight is zero.
inline std::size_t roulette(const std::vector<double>& weights, double total,
                            Rng& rng) {
  if (!(total > 0.0)) return rng.below(weights.size());
  const double r = rng.uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (r < acc) return i;
  }
  return weights.size() - 1;
}

}  // namespace detail

/// Elitist generational genetic search.
///
/// The initial population is N single-word mutations of the original. Each
/// generation keeps the `elite` fittest members, then fills the rest with
/// children of fitness-proportional parent pairs (uniform positionwise
/// crossover, then mutation with child_mutation_prob). Only new children are
/// scored, so a generation costs N - elite queries.
inline AttackResult genetic_attack(const SearchSpace& space, Victim& victim,
                                   std::size_t target,
                                   const GeneticParams& params,
                                   std::uint64_t seed) {
  params.validate();
  FitnessOracle oracle(space, victim, target, params.max_mod_rate,
                       params.query_budget);
  Rng rng(seed);
  const Assignment origin = space.origin();
  const std::size_t n = params.population;

  std::vector<Assignment> pop(n);
  for (Assignment& a : pop) a = mutate(origin, space, rng);
  auto scored = oracle.score(pop);
  if (!scored) {
    return oracle.result(AttackStatus::kBudgetExceeded, origin,
                         oracle.original_prediction()[target], 0, seed);
  }
  std::vector<VictimPrediction> preds = std::move(*scored);

  auto fittest = [&] {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (preds[i][target] > preds[best][target]) best = i;
    }
    return best;
  };

  if (auto hit = oracle.best_success(pop, preds)) {
    return oracle.result(AttackStatus::kSuccess, pop[*hit], preds[*hit][target],
                         0, seed);
  }

  for (std::size_t g = 1; g <= params.generations; ++g) {
    // Rank by fitness, stable on index, to pick the elite.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return preds[a][target] > preds[b][target];
                     });

    std::vector<double> weights(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      weights[i] = preds[i][target];
      total += weights[i];
    }

    std::vector<Assignment> next;
    std::vector<VictimPrediction> next_preds;
    next.reserve(n);
    for (std::size_t e = 0; e < params.elite; ++e) {
      next.push_back(pop[order[e]]);
      next_preds.push_back(preds[order[e]]);
    }
    std::vector<Assignment> children;
    children.reserve(n - params.elite);
    for (std::size_t c = params.elite; c < n; ++c) {
      const Assignment& mom = pop[detail::roulette(weights, total, rng)];
      const Assignment& dad = pop[detail::roulette(weights, total, rng)];
      Assignment child = mom;
      for (std::size_t d = 0; d < child.size(); ++d) {
        if (rng.bernoulli(0.5)) child[d] = dad[d];
      }
      if (rng.bernoulli(params.child_mutation_prob)) {
        child = mutate(child, space, rng);
      }
      children.push_back(std::move(child));
    }
    auto child_preds = oracle.score(children);
    if (!child_preds) {
      const std::size_t best = fittest();
      return oracle.result(AttackStatus::kBudgetExceeded, pop[best],
                           preds[best][target], g - 1, seed);
    }
    for (std::size_t c = 0; c < children.size(); ++c) {
      next.push_back(std::move(children[c]));
      next_preds.push_back(std::move((*child_preds)[c]));
    }
    pop = std::move(next);
    preds = std::move(next_preds);

    if (auto hit = oracle.best_success(pop, preds)) {
      return oracle.result(AttackStatus::kSuccess, pop[*hit],
                           preds[*hit][target], g, seed);
    }
  }
  const std::size_t best = fittest();
  return oracle.result(AttackStatus::kExhausted, pop[best], preds[best][target],
                       params.generations, seed);
}

}  // namespace swarmattack

#endif  // SWARMATTACK_GENETIC_HPP_
