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

#ifndef SWARMATTACK_METRICS_HPP_
#define SWARMATTACK_METRICS_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "swarmattack/attack.hpp"
#include "swarmattack/corpus.hpp"
#include "swarmattack/errors.hpp"
#include "swarmattack/exhaustive.hpp"
#include "swarmattack/genetic.hpp"
#include "swarmattack/greedy.hpp"
#include "swarmattack/lexicon.hpp"
#include "swarmattack/pso.hpp"
#include "swarmattack/random.hpp"
#include "swarmattack/space.hpp"
#include "swarmattack/subprocess.hpp"
#include "swarmattack/victim.hpp"

namespace swarmattack {

enum class Algorithm { kPso, kGenetic, kGreedy, kExhaustive };

inline std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kPso:
      return "pso";
    case Algorithm::kGenetic:
      return "genetic";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kExhaustive:
      return "exhaustive";
  }
  return "unknown";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
  for (auto a : {Algorithm::kPso, Algorithm::kGenetic, Algorithm::kGreedy,
                 Algorithm::kExhaustive}) {
    if (algorithm_name(a) == s) return a;
  }
  return std::nullopt;
}

struct BudgetPoint {
  std::size_t iterations;  // T
  std::size_t population;  // N
};

struct BenchmarkConfig {
  std::size_t sample_size = 1000;
  std::optional<std::pair<std::size_t, std::size_t>> length_bounds =
      std::pair<std::size_t, std::size_t>{10, 100};
  double max_mod_rate = 0.25;
  std::vector<Algorithm> algorithms = {Algorithm::kPso};
  PsoParams pso;
  GeneticParams genetic;
  GreedyParams greedy;
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
  std::vector<BudgetPoint> budget_sweep;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  bool assume_content = false;
  // External scorer commands: one sentence per input line, one number per
  // output line. Unset means the column is reported as null.
  std::optional<std::string> grammar_scorer;
  std::optional<std::string> perplexity_scorer;

  void validate() const {
    if (sample_size < 1) throw ConfigError("sample_size must be >= 1");
    if (!(max_mod_rate >= 0.0 && max_mod_rate <= 1.0)) {
      throw ConfigError("max_mod_rate must lie in [0, 1]");
    }
    if (length_bounds && length_bounds->first > length_bounds->second) {
      throw ConfigError("length bounds are inverted");
    }
    if (algorithms.empty()) throw ConfigError("no algorithm selected");
    if (workers < 1) throw ConfigError("workers must be >= 1");
    with_cap().pso.validate();
    with_cap().genetic.validate();
    greedy.validate();
    for (const BudgetPoint& b : budget_sweep) {
      if (b.iterations < 1 || b.population < 1) {
        throw ConfigError("sweep points need T >= 1 and N >= 1");
      }
    }
  }

  /// Copy whose per-algorithm parameters all use the shared cap.
  BenchmarkConfig with_cap() const {
    BenchmarkConfig c = *this;
    c.pso.max_mod_rate = max_mod_rate;
    c.genetic.max_mod_rate = max_mod_rate;
    c.greedy.max_mod_rate = max_mod_rate;
    return c;
  }
};

/// One attempted (instance, algorithm) pair, as exported.
struct InstanceRecord {
  std::size_t id = 0;
  std::string original;
  std::optional<std::string> context;
  std::optional<std::string> adversarial;
  int orig_label = 0;
  std::size_t target_label = 0;
  AttackStatus status = AttackStatus::kInfeasible;
  double mod_rate = 0.0;
  double target_prob = 0.0;
  std::uint64_t queries = 0;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kPso;
};

struct AlgorithmReport {
  Algorithm algorithm = Algorithm::kPso;
  std::size_t attempted = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;     // percent of attempted
  double mean_mod_rate = 0.0;    // over successes
  double mean_queries = 0.0;     // over attempted
  double mean_iterations = 0.0;  // over attempted
  std::optional<double> transfer_accuracy;
  std::optional<double> grammar_error_increase;  // percent
  std::optional<double> perplexity;
  std::optional<BudgetPoint> budget;
};

struct FilterCounts {
  std::size_t total = 0;
  std::size_t unlabeled = 0;
  std::size_t out_of_bounds = 0;
  std::size_t misclassified = 0;
  std::size_t eligible = 0;
  std::size_t sampled = 0;
};

struct Report {
  FilterCounts filter;
  std::vector<AlgorithmReport> algorithms;
  std::vector<InstanceRecord> records;  // by id, then algorithm order
};

/// Line-oriented external scorer (e.g. a grammar checker or language model).
class ExternalScorer {
 public:
  explicit ExternalScorer(const std::string& command) : child_(command) {}

  double score(const std::string& sentence) {
    child_.write_line(sentence);
    const auto line = child_.read_line(std::chrono::seconds(60));
    if (!line) throw ProtocolError("scorer exited");
    try {
      std::size_t used = 0;
      const double v = std::stod(*line, &used);
      if (!trim(line->substr(used)).empty()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ProtocolError("scorer reply is not a number: " + *line);
    }
  }

 private:
  ChildProcess child_;
};

namespace detail {

struct PreparedInstance {
  std::size_t id;
  const Sentence* sentence;
  int orig_label;
  std::size_t target;
  std::optional<SearchSpace> space;  // nullopt: no substitutable position
};

struct Prepared {
  FilterCounts filter;
  std::vector<PreparedInstance> instances;
};

inline Prepared prepare(const std::vector<Sentence>& corpus, const Lexicon& lex,
                        Victim& victim, const BenchmarkConfig& cfg) {
  Prepared out;
  out.filter.total = corpus.size();
  std::vector<std::size_t> in_bounds;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Sentence& s = corpus[i];
    if (!s.label) {
      ++out.filter.unlabeled;
      continue;
    }
    if (*s.label < 0 ||
        static_cast<std::size_t>(*s.label) >= victim.manifest().num_labels()) {
      throw LabelMismatch("instance " + std::to_string(i) + " has label " +
                          std::to_string(*s.label) + " outside the victim's " +
                          std::to_string(victim.manifest().num_labels()) +
                          " labels");
    }
    if (cfg.length_bounds && (s.size() < cfg.length_bounds->first ||
                              s.size() > cfg.length_bounds->second)) {
      ++out.filter.out_of_bounds;
      continue;
    }
    in_bounds.push_back(i);
  }

  // Score runs of consecutive instances that share a context in one batch.
  std::vector<VictimPrediction> preds(corpus.size());
  for (std::size_t b = 0; b < in_bounds.size();) {
    std::size_t e = b + 1;
    while (e < in_bounds.size() &&
           corpus[in_bounds[e]].context == corpus[in_bounds[b]].context) {
      ++e;
    }
    std::vector<Sentence> batch;
    for (std::size_t k = b; k < e; ++k) batch.push_back(corpus[in_bounds[k]]);
    auto p = victim.predict_batch(batch, corpus[in_bounds[b]].context);
    for (std::size_t k = b; k < e; ++k)
      preds[in_bounds[k]] = std::move(p[k - b]);
    b = e;
  }

  std::vector<std::size_t> eligible;
  for (std::size_t i : in_bounds) {
    if (preds[i].argmax() == static_cast<std::size_t>(*corpus[i].label)) {
      eligible.push_back(i);
    } else {
      ++out.filter.misclassified;
    }
  }
  out.filter.eligible = eligible.size();
  if (eligible.empty()) {
    throw EmptyAfterFilter("no correctly classified in-bounds instance");
  }
  if (eligible.size() > cfg.sample_size) {
    Rng rng(derive_seed(cfg.seed, 0x53414d504c45ULL));
    for (std::size_t i = eligible.size() - 1; i > 0; --i) {
      std::swap(eligible[i], eligible[rng.below(i + 1)]);
    }
    eligible.resize(cfg.sample_size);
    std::sort(eligible.begin(), eligible.end());
  }
  out.filter.sampled = eligible.size();

  SpaceConfig space_cfg;
  space_cfg.length_bounds = cfg.length_bounds;
  space_cfg.assume_content = cfg.assume_content;
  const Vocabulary* vocab =
      victim.manifest().vocab ? &*victim.manifest().vocab : nullptr;
  for (std::size_t i : eligible) {
    PreparedInstance inst{i, &corpus[i], *corpus[i].label,
                          untargeted_label(preds[i]), std::nullopt};
    try {
      inst.space.emplace(build_space(corpus[i], lex, vocab, space_cfg));
    } catch (const NoCandidates&) {
    }
    out.instances.push_back(std::move(inst));
  }
  return out;
}

inline AttackResult run_one(Algorithm algo, const PreparedInstance& inst,
                            Victim& victim, const BenchmarkConfig& cfg,
                            std::uint64_t seed) {
  const SearchSpace& space = *inst.space;
  switch (algo) {
    case Algorithm::kPso:
      return pso_attack(space, victim, inst.target, cfg.pso, seed);
    case Algorithm::kGenetic:
      return genetic_attack(space, victim, inst.target, cfg.genetic, seed);
    case Algorithm::kGreedy:
      return greedy_attack(space, victim, inst.target, cfg.greedy, seed);
    case Algorithm::kExhaustive:
      return exhaustive_attack(space, victim, inst.target, cfg.max_mod_rate,
                               cfg.exhaustive_cap, seed);
  }
  throw ConfigError("unknown algorithm");
}

inline InstanceRecord make_record(Algorithm algo, const PreparedInstance& inst,
                                  const std::optional<AttackResult>& r,
                                  std::uint64_t seed) {
  InstanceRecord rec;
  rec.id = inst.id;
  rec.original = join_text(*inst.sentence);
  rec.context = inst.sentence->context;
  rec.orig_label = inst.orig_label;
  rec.target_label = inst.target;
  rec.algorithm = algo;
  rec.seed = seed;
  if (!r) {
    rec.status = AttackStatus::kInfeasible;
    return rec;
  }
  rec.status = r->status;
  if (r->adversarial) rec.adversarial = join_text(*r->adversarial);
  rec.mod_rate = r->mod_rate;
  rec.target_prob = r->target_prob;
  rec.queries = r->queries;
  rec.iterations = r->iterations;
  return rec;
}

// Runs fn(i) for i in [0, n) on `workers` threads; rethrows the first error.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, n); ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          next.store(n);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

inline std::vector<InstanceRecord> attack_all(const Prepared& prep,
                                              Victim& victim,
                                              const BenchmarkConfig& cfg,
                                              Algorithm algo) {
  std::vector<InstanceRecord> records(prep.instances.size());
  parallel_for(prep.instances.size(), cfg.workers, [&](std::size_t i) {
    const PreparedInstance& inst = prep.instances[i];
    const std::uint64_t seed = derive_seed(cfg.seed, inst.id);
    std::optional<AttackResult> r;
    try {
      if (inst.space) r = run_one(algo, inst, victim, cfg, seed);
    } catch (const SpaceTooLarge&) {
      // The oracle's enumeration cap acts as its query budget.
      records[i] = make_record(algo, inst, std::nullopt, seed);
      records[i].status = AttackStatus::kBudgetExceeded;
      return;
    }
    records[i] = make_record(algo, inst, r, seed);
  });
  return records;
}

inline void add_quality_columns(AlgorithmReport& rep,
                                const std::vector<InstanceRecord>& records,
                                const BenchmarkConfig& cfg) {
  if (cfg.grammar_scorer) {
    ExternalScorer scorer(*cfg.grammar_scorer);
    double orig = 0.0;
    double adv = 0.0;
    for (const auto& r : records) {
      if (r.status != AttackStatus::kSuccess) continue;
      orig += scorer.score(r.original);
      adv += scorer.score(*r.adversarial);
    }
    if (orig > 0.0) rep.grammar_error_increase = 100.0 * (adv - orig) / orig;
  }
  if (cfg.perplexity_scorer) {
    ExternalScorer scorer(*cfg.perplexity_scorer);
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& r : records) {
      if (r.status != AttackStatus::kSuccess) continue;
      sum += scorer.score(*r.adversarial);
      ++n;
    }
    if (n > 0) rep.perplexity = sum / static_cast<double>(n);
  }
}

}  // namespace detail

/// Aggregates one algorithm's records into report metrics.
inline AlgorithmReport summarize(Algorithm algo,
                                 const std::vector<InstanceRecord>& records) {
  AlgorithmReport rep;
  rep.algorithm = algo;
  double mod = 0.0;
  double queries = 0.0;
  double iters = 0.0;
  for (const auto& r : records) {
    if (r.algorithm != algo) continue;
    ++rep.attempted;
    queries += static_cast<double>(r.queries);
    iters += static_cast<double>(r.iterations);
    if (r.status == AttackStatus::kSuccess) {
      ++rep.successes;
      mod += r.mod_rate;
    }
  }
  if (rep.attempted > 0) {
    const auto n = static_cast<double>(rep.attempted);
    rep.success_rate = 100.0 * static_cast<double>(rep.successes) / n;
    rep.mean_queries = queries / n;
    rep.mean_iterations = iters / n;
  }
  if (rep.successes > 0) mod /= static_cast<double>(rep.successes);
  rep.mean_mod_rate = mod;
  return rep;
}

/// Attacks every correctly classified, in-bounds instance (a deterministic
/// sample of at most sample_size) with each configured algorithm. Instance
/// seeds derive from cfg.seed and the instance id.
inline Report run_benchmark(const std::vector<Sentence>& corpus,
                            const Lexicon& lex, Victim& victim,
                            const BenchmarkConfig& config) {
  config.validate();
  const BenchmarkConfig cfg = config.with_cap();
  const detail::Prepared prep = detail::prepare(corpus, lex, victim, cfg);
  Report report;
  report.filter = prep.filter;
  std::vector<std::vector<InstanceRecord>> per_algo;
  for (Algorithm algo : cfg.algorithms) {
    per_algo.push_back(detail::attack_all(prep, victim, cfg, algo));
    AlgorithmReport rep = summarize(algo, per_algo.back());
    detail::add_quality_columns(rep, per_algo.back(), cfg);
    report.algorithms.push_back(rep);
  }
  for (std::size_t i = 0; i < prep.instances.size(); ++i) {
    for (const auto& recs : per_algo) report.records.push_back(recs[i]);
  }
  return report;
}

struct SweepResult {
  FilterCounts filter;
  std::vector<AlgorithmReport> points;  // grid order, algorithm order within
};

/// Reruns PSO and genetic search over a (T, N) grid.
///
/// Iteration budgets extend rather than restart: with the instance seed
/// fixed, an instance counts as solved at budget T if the run at any swept
/// budget T' <= T (same N) succeeded, so success is non-decreasing in T.
inline SweepResult budget_sweep(const std::vector<Sentence>& corpus,
                                const Lexicon& lex, Victim& victim,
                                const BenchmarkConfig& config) {
  config.validate();
  SweepResult out;
  if (config.budget_sweep.empty()) return out;
  const BenchmarkConfig base = config.with_cap();
  const detail::Prepared prep = detail::prepare(corpus, lex, victim, base);
  out.filter = prep.filter;

  std::vector<Algorithm> algos;
  for (Algorithm a : base.algorithms) {
    if (a == Algorithm::kPso || a == Algorithm::kGenetic) algos.push_back(a);
  }
  if (algos.empty()) algos = {Algorithm::kPso, Algorithm::kGenetic};

  struct Key {
    std::size_t n;
    std::size_t t;
    Algorithm a;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, AlgorithmReport> reports;
  std::map<std::size_t, std::vector<std::size_t>> by_population;
  for (const BudgetPoint& b : base.budget_sweep) {
    auto& ts = by_population[b.population];
    if (std::find(ts.begin(), ts.end(), b.iterations) == ts.end()) {
      ts.push_back(b.iterations);
    }
  }
  for (auto& [n, ts] : by_population) {
    std::sort(ts.begin(), ts.end());
    for (Algorithm algo : algos) {
      std::vector<std::optional<InstanceRecord>> carried(prep.instances.size());
      for (std::size_t t : ts) {
        BenchmarkConfig cfg = base;
        cfg.pso.population = n;
        cfg.pso.iterations = t;
        cfg.genetic.population = n;
        cfg.genetic.generations = t;
        std::vector<InstanceRecord> recs =
            detail::attack_all(prep, victim, cfg, algo);
        for (std::size_t i = 0; i < recs.size(); ++i) {
          if (carried[i]) {
            recs[i] = *carried[i];
          } else if (recs[i].status == AttackStatus::kSuccess) {
            carried[i] = recs[i];
          }
        }
        AlgorithmReport rep = summarize(algo, recs);
        rep.budget = BudgetPoint{t, n};
        reports[{n, t, algo}] = rep;
      }
    }
  }
  for (const BudgetPoint& b : base.budget_sweep) {
    for (Algorithm algo : algos) {
      out.points.push_back(reports.at({b.population, b.iterations, algo}));
    }
  }
  return out;
}

inline nlohmann::json to_json(const InstanceRecord& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["original"] = r.original;
  if (r.context) j["context"] = *r.context;
  j["adversarial"] =
      r.adversarial ? nlohmann::json(*r.adversarial) : nlohmann::json(nullptr);
  j["orig_label"] = r.orig_label;
  j["target_label"] = r.target_label;
  j["status"] = std::string(status_name(r.status));
  j["mod_rate"] = r.mod_rate;
  j["target_prob"] = r.target_prob;
  j["queries"] = r.queries;
  j["iterations"] = r.iterations;
  j["seed"] = r.seed;
  j["algorithm"] = std::string(algorithm_name(r.algorithm));
  return j;
}

inline InstanceRecord record_from_json(const nlohmann::json& j,
                                       std::size_t lineno) {
  try {
    InstanceRecord r;
    r.id = j.at("id").get<std::size_t>();
    r.original = j.at("original").get<std::string>();
    if (j.contains("context") && j["context"].is_string()) {
      r.context = j["context"].get<std::string>();
    }
    if (!j.at("adversarial").is_null()) {
      r.adversarial = j["adversarial"].get<std::string>();
    }
    r.orig_label = j.at("orig_label").get<int>();
    r.target_label = j.at("target_label").get<std::size_t>();
    const auto st = parse_status(j.at("status").get<std::string>());
    if (!st) throw ParseError("unknown status", lineno);
    r.status = *st;
    r.mod_rate = j.at("mod_rate").get<double>();
    r.target_prob = j.value("target_prob", 0.0);
    r.queries = j.at("queries").get<std::uint64_t>();
    r.iterations = j.at("iterations").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    const auto algo = parse_algorithm(j.at("algorithm").get<std::string>());
    if (!algo) throw ParseError("unknown algorithm", lineno);
    r.algorithm = *algo;
    if (r.status == AttackStatus::kSuccess && !r.adversarial) {
      throw ParseError("success record without adversarial text", lineno);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad export record: ") + e.what(), lineno);
  }
}

inline void write_export(std::ostream& out,
                         const std::vector<InstanceRecord>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

inline std::vector<InstanceRecord> read_export(std::istream& in) {
  std::vector<InstanceRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), lineno);
    }
    out.push_back(record_from_json(j, lineno));
  }
  return out;
}

struct TransferResult {
  std::size_t evaluated = 0;
  std::size_t still_original = 0;
  double accuracy = 0.0;  // percent classified as the original label
};

/// Classifies the successful adversarial examples in `records` with another
/// victim. Lower accuracy means the examples transfer better.
inline TransferResult cross_evaluate(const std::vector<InstanceRecord>& records,
                                     Victim& other) {
  TransferResult res;
  for (const auto& r : records) {
    if (r.status != AttackStatus::kSuccess) continue;
    if (r.orig_label < 0 || static_cast<std::size_t>(r.orig_label) >=
                                other.manifest().num_labels()) {
      throw LabelMismatch("record " + std::to_string(r.id) + " label " +
                          std::to_string(r.orig_label) +
                          " outside the victim's labels");
    }
    Sentence s = sentence_from_text(*r.adversarial);
    s.context = r.context;
    const VictimPrediction p = other.predict(s);
    ++res.evaluated;
    if (p.argmax() == static_cast<std::size_t>(r.orig_label)) {
      ++res.still_original;
    }
  }
  if (res.evaluated == 0) {
    throw EmptyAfterFilter("no successful adversarial example to transfer");
  }
  res.accuracy = 100.0 * static_cast<double>(res.still_original) /
                 static_cast<double>(res.evaluated);
  return res;
}

inline TransferResult cross_evaluate(const std::filesystem::path& adv_file,
                                     Victim& other) {
  std::ifstream in(adv_file);
  if (!in)
    throw ParseError("cannot open adversarial file " + adv_file.string());
  return cross_evaluate(read_export(in), other);
}

inline nlohmann::json to_json(const AlgorithmReport& r) {
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["algorithm"] = std::string(algorithm_name(r.algorithm));
  if (r.budget) {
    j["T"] = r.budget->iterations;
    j["N"] = r.budget->population;
  }
  j["attempted"] = r.attempted;
  j["successes"] = r.successes;
  j["success_rate"] = r.success_rate;
  j["mean_mod_rate"] = r.mean_mod_rate;
  j["mean_queries"] = r.mean_queries;
  j["mean_iterations"] = r.mean_iterations;
  j["transfer_accuracy"] = opt(r.transfer_accuracy);
  j["grammar_error_increase"] = opt(r.grammar_error_increase);
  j["perplexity"] = opt(r.perplexity);
  return j;
}

inline nlohmann::json to_json(const FilterCounts& f) {
  return {{"total", f.total},
          {"unlabeled", f.unlabeled},
          {"out_of_bounds", f.out_of_bounds},
          {"misclassified", f.misclassified},
          {"eligible", f.eligible},
          {"sampled", f.sampled}};
}

inline nlohmann::json config_json(const BenchmarkConfig& c) {
  nlohmann::json algos = nlohmann::json::array();
  for (Algorithm a : c.algorithms)
    algos.push_back(std::string(algorithm_name(a)));
  nlohmann::json j;
  j["seed"] = c.seed;
  j["sample_size"] = c.sample_size;
  j["length_bounds"] = c.length_bounds
                           ? nlohmann::json::array({c.length_bounds->first,
                                                    c.length_bounds->second})
                           : nlohmann::json(nullptr);
  j["max_mod_rate"] = c.max_mod_rate;
  j["algorithms"] = algos;
  j["pso"] = {{"N", c.pso.population},        {"T", c.pso.iterations},
              {"v_max", c.pso.v_max},         {"omega_max", c.pso.omega_max},
              {"omega_min", c.pso.omega_min}, {"p_max", c.pso.p_max},
              {"p_min", c.pso.p_min},         {"k", c.pso.k}};
  j["genetic"] = {{"N", c.genetic.population},
                  {"T", c.genetic.generations},
                  {"elite", c.genetic.elite},
                  {"child_mutation_prob", c.genetic.child_mutation_prob}};
  return j;
}

inline nlohmann::json report_json(const Report& r, const BenchmarkConfig& c) {
  nlohmann::json algos = nlohmann::json::array();
  for (const auto& a : r.algorithms) algos.push_back(to_json(a));
  return {{"config", config_json(c)},
          {"filter", to_json(r.filter)},
          {"algorithms", std::move(algos)}};
}

/// Aligned plain-text table, one row per report.
inline std::string format_table(const std::vector<AlgorithmReport>& rows) {
  std::vector<std::vector<std::string>> cells;
  const bool sweep = !rows.empty() && rows.front().budget.has_value();
  std::vector<std::string> header = {"algorithm"};
  if (sweep) {
    header.push_back("T");
    header.push_back("N");
  }
  for (const char* h : {"attempted", "success%", "mod%", "queries", "iters",
                        "transfer%", "grammar%", "ppl"}) {
    header.emplace_back(h);
  }
  cells.push_back(header);
  auto fixed = [](double v, int prec) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(prec) << v;
    return os.str();
  };
  auto opt = [&](const std::optional<double>& v) {
    return v ? fixed(*v, 2) : std::string("-");
  };
  for (const auto& r : rows) {
    std::vector<std::string> row = {std::string(algorithm_name(r.algorithm))};
    if (sweep) {
      row.push_back(r.budget ? std::to_string(r.budget->iterations) : "-");
      row.push_back(r.budget ? std::to_string(r.budget->population) : "-");
    }
    row.push_back(std::to_string(r.attempted));
    row.push_back(fixed(r.success_rate, 2));
    row.push_back(fixed(100.0 * r.mean_mod_rate, 2));
    row.push_back(fixed(r.mean_queries, 1));
    row.push_back(fixed(r.mean_iterations, 2));
    row.push_back(opt(r.transfer_accuracy));
    row.push_back(opt(r.grammar_error_increase));
    row.push_back(opt(r.perplexity));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        os << "  " << std::right << std::setw(static_cast<int>(width[c]))
           << row[c];
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace swarmattack

#endif  // SWARMATTACK_METRICS_HPP_
