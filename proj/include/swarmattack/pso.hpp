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

#ifndef SWARMATTACK_PSO_HPP_
#define SWARMATTACK_PSO_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swarmattack/attack.hpp"
#include "swarmattack/errors.hpp"
#include "swarmattack/random.hpp"
#include "swarmattack/space.hpp"
#include "swarmattack/victim.hpp"

namespace swarmattack {

struct PsoParams {
  std::size_t population = 60;
  std::size_t iterations = 20;
  double v_max = 1.0;
  double omega_max = 0.8;
  double omega_min = 0.2;
  double p_max = 0.8;
  double p_min = 0.2;
  double k = 2.0;
  double max_mod_rate = 0.25;
  std::optional<std::uint64_t> query_budget;

  void validate() const {
    if (!(0.0 < omega_min && omega_min < omega_max && omega_max < 1.0)) {
      throw ConfigError("PSO requires 0 < omega_min < omega_max < 1");
    }
    if (!(0.0 < p_min && p_min < p_max && p_max < 1.0)) {
      throw ConfigError("PSO requires 0 < p_min < p_max < 1");
    }
    if (population < 1) throw ConfigError("PSO population must be >= 1");
    if (iterations < 1) throw ConfigError("PSO iterations must be >= 1");
    if (!(v_max > 0.0)) throw ConfigError("PSO v_max must be positive");
    if (!(k > 0.0)) throw ConfigError("PSO mutation slope k must be positive");
    if (!(max_mod_rate >= 0.0 && max_mod_rate <= 1.0)) {
      throw ConfigError("max_mod_rate must lie in [0, 1]");
    }
  }
};

/// +1 when the two candidate indices agree, -1 otherwise.
inline int indicator(std::size_t a, std::size_t b) { return a == b ? 1 : -1; }

inline void check_iteration(std::size_t t, const PsoParams& params) {
  if (t > params.iterations) {
    throw IterationOutOfRange("iteration " + std::to_string(t) +
                              " > T = " + std::to_string(params.iterations));
  }
}

/// Inertia weight, annealed linearly from omega_max at t = 0 to omega_min
/// at t = T.
inline double inertia(std::size_t t, const PsoParams& params) {
  check_iteration(t, params);
  const double T = static_cast<double>(params.iterations);
  return (params.omega_max - params.omega_min) * (T - static_cast<double>(t)) /
             T +
         params.omega_min;
}

/// Probabilities (P_i, P_g) of moving toward the individual and the global
/// best. Local moves dominate early, global moves late.
inline std::pair<double, double> move_probs(std::size_t t,
                                            const PsoParams& params) {
  check_iteration(t, params);
  const double frac =
      static_cast<double>(t) / static_cast<double>(params.iterations);
  const double span = params.p_max - params.p_min;
  return {params.p_max - frac * span, params.p_min + frac * span};
}

/// Discrete velocity update for one dimension with current index `x`,
/// individual best `p_n` and global best `p_g`.
inline double velocity_update(double v, double omega, std::size_t p_n,
                              std::size_t p_g, std::size_t x) {
  return omega * v + (1.0 - omega) * static_cast<double>(indicator(p_n, x) +
                                                         indicator(p_g, x));
}

/// Probability of mutating a particle: max(0, 1 - k * modification rate).
inline double mutation_prob(const Assignment& a, const SearchSpace& space,
                            double k) {
  const double rate = static_cast<double>(edit_distance(a, space.origin())) /
                      static_cast<double>(space.dims());
  return std::max(0.0, 1.0 - k * rate);
}

/// Replaces one uniformly chosen substitutable position with a uniformly
/// chosen different candidate.
inline Assignment mutate(const Assignment& a, const SearchSpace& space,
                         Rng& rng) {
  const auto& positions = space.mutable_positions();
  if (positions.empty()) throw NoCandidates("no substitutable position");
  Assignment out = a;
  const std::size_t d = positions[rng.below(positions.size())];
  // Draw from the other choices - 1 slots and skip over the current one.
  std::size_t pick = rng.below(space.choices(d) - 1);
  if (pick >= out[d]) ++pick;
  out[d] = pick;
  return out;
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

struct Particle {
  Assignment position;
  std::vector<double> velocity;
  Assignment best_position;
  double best_score = 0.0;
};

struct SwarmState {
  std::vector<Particle> particles;
  Assignment global_best;
  double global_best_score = 0.0;
  std::size_t t = 0;
  std::uint64_t queries_used = 0;
};

/// Called after every record step with the current swarm.
using SwarmObserver = std::function<void(const SwarmState&)>;

namespace detail {

// Each differing dimension adopts the best's value with probability
// sigmoid(v_d); dimensions already equal are left alone.
inline void move_toward(Particle& p, const Assignment& best, Rng& rng) {
  for (std::size_t d = 0; d < p.position.size(); ++d) {
    if (p.position[d] == best[d]) continue;
    if (rng.bernoulli(sigmoid(p.velocity[d]))) p.position[d] = best[d];
  }
}

}  // namespace detail

/// Discrete particle swarm search for an assignment the victim labels as
/// `target`.
///
/// Each particle starts as one random single-word substitution of the
/// original with velocities uniform in [-v_max, v_max]. Every iteration
/// records bests and stops as soon as any particle is a valid adversarial
/// example; otherwise velocities follow the discrete update, each particle
/// moves toward its own best with probability P_i and then toward the
/// global best with probability P_g, and finally mutates with
/// mutation_prob. One victim batch of N sentences is spent per iteration.
inline AttackResult pso_attack(const SearchSpace& space, Victim& victim,
                               std::size_t target, const PsoParams& params,
                               std::uint64_t seed,
                               const SwarmObserver& observer = {}) {
  params.validate();
  FitnessOracle oracle(space, victim, target, params.max_mod_rate,
                       params.query_budget);
  Rng rng(seed);
  const std::size_t dims = space.dims();
  const Assignment origin = space.origin();

  SwarmState swarm;
  swarm.particles.resize(params.population);
  for (Particle& p : swarm.particles) {
    p.position = mutate(origin, space, rng);
    p.velocity.resize(dims);
    for (double& v : p.velocity) v = rng.uniform(-params.v_max, params.v_max);
  }

  std::vector<Assignment> positions(params.population);
  auto collect = [&] {
    for (std::size_t n = 0; n < params.population; ++n) {
      positions[n] = swarm.particles[n].position;
    }
  };

  collect();
  std::optional<std::vector<VictimPrediction>> preds = oracle.score(positions);
  if (!preds) {
    return oracle.result(AttackStatus::kBudgetExceeded, origin,
                         oracle.original_prediction()[target], 0, seed);
  }
  for (std::size_t n = 0; n < params.population; ++n) {
    Particle& p = swarm.particles[n];
    p.best_position = p.position;
    p.best_score = (*preds)[n][target];
    if (n == 0 || p.best_score > swarm.global_best_score) {
      swarm.global_best = p.best_position;
      swarm.global_best_score = p.best_score;
    }
  }
  swarm.queries_used = oracle.queries();
  if (observer) observer(swarm);
  if (auto hit = oracle.best_success(positions, *preds)) {
    return oracle.result(AttackStatus::kSuccess, positions[*hit],
                         (*preds)[*hit][target], 0, seed);
  }

  for (std::size_t t = 0; t < params.iterations; ++t) {
    const double omega = inertia(t, params);
    const auto [p_i, p_g] = move_probs(t, params);
    for (Particle& p : swarm.particles) {
      for (std::size_t d = 0; d < dims; ++d) {
        p.velocity[d] =
            velocity_update(p.velocity[d], omega, p.best_position[d],
                            swarm.global_best[d], p.position[d]);
      }
      if (rng.bernoulli(p_i)) detail::move_toward(p, p.best_position, rng);
      if (rng.bernoulli(p_g)) detail::move_toward(p, swarm.global_best, rng);
      if (rng.bernoulli(mutation_prob(p.position, space, params.k))) {
        p.position = mutate(p.position, space, rng);
      }
    }

    collect();
    preds = oracle.score(positions);
    if (!preds) {
      return oracle.result(AttackStatus::kBudgetExceeded, swarm.global_best,
                           swarm.global_best_score, t, seed);
    }
    swarm.t = t + 1;
    for (std::size_t n = 0; n < params.population; ++n) {
      Particle& p = swarm.particles[n];
      const double score = (*preds)[n][target];
      if (score > p.best_score) {
        p.best_score = score;
        p.best_position = p.position;
      }
      if (p.best_score > swarm.global_best_score) {
        swarm.global_best_score = p.best_score;
        swarm.global_best = p.best_position;
      }
    }
    swarm.queries_used = oracle.queries();
    if (observer) observer(swarm);
    if (auto hit = oracle.best_success(positions, *preds)) {
      return oracle.result(AttackStatus::kSuccess, positions[*hit],
                           (*preds)[*hit][target], t + 1, seed);
    }
  }
  return oracle.result(AttackStatus::kExhausted, swarm.global_best,
                       swarm.global_best_score, params.iterations, seed);
}

}  // namespace swarmattack

#endif  // SWARMATTACK_PSO_HPP_
