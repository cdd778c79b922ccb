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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "swarmattack/swarmattack.hpp"

namespace swarmattack::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::size_t parse_count(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw ConfigError("bad " + what + " '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> parse_counts(const std::string& s,
                                      const std::string& what) {
  std::vector<std::size_t> out;
  for (const std::string& part : split(s, ',')) {
    out.push_back(parse_count(std::string(trim(part)), what));
  }
  return out;
}

// "2,5,20x60" or "2,5,20x4,8": iteration counts, then population sizes.
std::vector<BudgetPoint> parse_sweep(const std::string& s) {
  const auto halves = split(s, 'x');
  if (halves.size() != 2) {
    throw ConfigError("sweep grid must look like T1,T2,...xN1,N2,...");
  }
  std::vector<BudgetPoint> grid;
  for (std::size_t t : parse_counts(halves[0], "sweep T")) {
    for (std::size_t n : parse_counts(halves[1], "sweep N")) {
      grid.push_back({t, n});
    }
  }
  return grid;
}

std::vector<Algorithm> parse_algorithms(const std::string& s) {
  std::vector<Algorithm> out;
  for (const std::string& part : split(s, ',')) {
    const auto a = parse_algorithm(trim(part));
    if (!a) throw ConfigError("unknown algorithm '" + part + "'");
    out.push_back(*a);
  }
  return out;
}

// Options shared by the attack and bench commands.
struct SearchOptions {
  std::string lexicon;
  std::string victim;
  std::string algo = "pso";
  std::uint64_t seed = 0;
  std::size_t pop = 60;
  std::size_t iters = 20;
  double max_mod = 0.25;
  double k = 2.0;
  double omega_max = 0.8;
  double omega_min = 0.2;
  double p_max = 0.8;
  double p_min = 0.2;
  double v_max = 1.0;
  std::size_t elite = 1;
  double child_mutation = 1.0;
  std::optional<std::uint64_t> budget;
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
  bool assume_content = false;
  bool no_length_bounds = false;
  std::size_t min_len = 10;
  std::size_t max_len = 100;
  double timeout_s = 30.0;

  void add(CLI::App* app) {
    app->add_option("--lexicon", lexicon, "Lexicon file")->required();
    app->add_option("--victim", victim, "Victim spec")->required();
    app->add_option("--algo", algo, "pso|genetic|greedy|exhaustive");
    app->add_option("--seed", seed, "Base seed");
    app->add_option("--pop", pop, "Population size N");
    app->add_option("--iters", iters, "Iterations / generations T");
    app->add_option("--max-mod", max_mod, "Modification-rate cap");
    app->add_option("--k", k, "PSO mutation slope");
    app->add_option("--omega-max", omega_max);
    app->add_option("--omega-min", omega_min);
    app->add_option("--p-max", p_max);
    app->add_option("--p-min", p_min);
    app->add_option("--v-max", v_max);
    app->add_option("--elite", elite, "Genetic elite count");
    app->add_option("--child-mutation", child_mutation,
                    "Genetic child mutation probability");
    app->add_option("--budget", budget, "Query budget per attack");
    app->add_option("--exhaustive-cap", exhaustive_cap);
    app->add_flag("--assume-content", assume_content,
                  "Treat every token as a content word");
    app->add_flag("--no-length-bounds", no_length_bounds);
    app->add_option("--min-len", min_len);
    app->add_option("--max-len", max_len);
    app->add_option("--timeout", timeout_s, "Remote victim timeout (s)");
  }

  std::chrono::milliseconds timeout() const {
    return std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));
  }

  BenchmarkConfig bench_config() const {
    BenchmarkConfig c;
    c.algorithms = parse_algorithms(algo);
    c.seed = seed;
    c.max_mod_rate = max_mod;
    c.length_bounds = no_length_bounds
                          ? std::nullopt
                          : std::optional<std::pair<std::size_t, std::size_t>>(
                                {min_len, max_len});
    c.assume_content = assume_content;
    c.pso.population = pop;
    c.pso.iterations = iters;
    c.pso.k = k;
    c.pso.omega_max = omega_max;
    c.pso.omega_min = omega_min;
    c.pso.p_max = p_max;
    c.pso.p_min = p_min;
    c.pso.v_max = v_max;
    c.pso.query_budget = budget;
    c.genetic.population = pop;
    c.genetic.generations = iters;
    c.genetic.elite = elite;
    c.genetic.child_mutation_prob = child_mutation;
    c.genetic.query_budget = budget;
    c.greedy.query_budget = budget;
    c.exhaustive_cap = exhaustive_cap;
    c = c.with_cap();
    return c;
  }
};

struct InputOptions {
  std::string text_file;
  std::string text;
  std::size_t line = 1;
  bool plain = false;

  void add(CLI::App* app) {
    auto* f = app->add_option("--text-file", text_file,
                              "Tagged JSONL (or plain with --plain) input");
    auto* t = app->add_option("--text", text, "Raw whitespace-tokenized text");
    f->excludes(t);
    app->add_option("--line", line, "1-based line of --text-file to use");
    app->add_flag("--plain", plain, "Input is plain text");
  }

  Sentence read() const {
    if (!text.empty()) return sentence_from_text(text);
    if (text_file.empty()) throw ConfigError("need --text-file or --text");
    const auto corpus = load_corpus(text_file, plain);
    if (line < 1 || line > corpus.size()) {
      throw ConfigError("--line " + std::to_string(line) + " outside " +
                        text_file);
    }
    return corpus[line - 1];
  }
};

json attack_json(const AttackResult& r, const Sentence& original,
                 std::size_t orig_label, Algorithm algo) {
  json j;
  j["algorithm"] = std::string(algorithm_name(algo));
  j["status"] = std::string(status_name(r.status));
  j["original"] = join_text(original);
  j["adversarial"] =
      r.adversarial ? json(join_text(*r.adversarial)) : json(nullptr);
  j["assignment"] = r.assignment ? json(r.assignment->indices) : json(nullptr);
  j["orig_label"] = orig_label;
  j["target_label"] = r.target;
  j["target_prob"] = r.target_prob;
  j["mod_rate"] = r.mod_rate;
  j["iterations"] = r.iterations;
  j["queries"] = r.queries;
  j["seed"] = r.seed;
  return j;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << content;
}

const Vocabulary* vocab_of(const Victim& v) {
  return v.manifest().vocab ? &*v.manifest().vocab : nullptr;
}

SpaceConfig space_config(const SearchOptions& o) {
  SpaceConfig c;
  c.assume_content = o.assume_content;
  if (o.no_length_bounds) {
    c.length_bounds.reset();
  } else {
    c.length_bounds = {{o.min_len, o.max_len}};
  }
  return c;
}

int cmd_attack(const SearchOptions& so, const InputOptions& in,
               std::optional<std::size_t> target, std::ostream& out,
               std::ostream& err) {
  const BenchmarkConfig cfg = so.bench_config();
  if (cfg.algorithms.size() != 1) {
    throw ConfigError("attack takes exactly one --algo");
  }
  cfg.validate();
  const Lexicon lex = load_lexicon(so.lexicon);
  const Sentence s = in.read();
  auto victim = make_victim(so.victim, so.timeout());
  const VictimPrediction orig = victim->predict(s);
  const std::size_t t = target ? *target : untargeted_label(orig);
  if (t >= victim->manifest().num_labels()) {
    throw ConfigError("--target outside the victim's labels");
  }
  const Algorithm algo = cfg.algorithms.front();
  AttackResult r;
  try {
    const SearchSpace space =
        build_space(s, lex, vocab_of(*victim), space_config(so));
    switch (algo) {
      case Algorithm::kPso:
        r = pso_attack(space, *victim, t, cfg.pso, so.seed);
        break;
      case Algorithm::kGenetic:
        r = genetic_attack(space, *victim, t, cfg.genetic, so.seed);
        break;
      case Algorithm::kGreedy:
        r = greedy_attack(space, *victim, t, cfg.greedy, so.seed);
        break;
      case Algorithm::kExhaustive:
        r = exhaustive_attack(space, *victim, t, cfg.max_mod_rate,
                              cfg.exhaustive_cap, so.seed);
        break;
    }
  } catch (const NoCandidates& e) {
    err << "no candidates: " << e.what() << '\n';
    r.status = AttackStatus::kInfeasible;
    r.target = t;
    r.target_prob = orig[t];
    r.seed = so.seed;
  } catch (const LengthOutOfBounds& e) {
    err << "length out of bounds: " << e.what() << '\n';
    return kExitNoResult;
  } catch (const PreconditionViolated& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitNoResult;
  }
  out << attack_json(r, s, orig.argmax(), algo).dump(2) << '\n';
  return r.status == AttackStatus::kSuccess ? kExitOk : kExitNoResult;
}

int cmd_bench(const SearchOptions& so, const std::string& corpus_path,
              bool plain, std::size_t sample_size, std::size_t workers,
              const std::string& sweep, const std::string& out_dir,
              const std::string& transfer_spec,
              const std::optional<std::string>& grammar,
              const std::optional<std::string>& perplexity, std::ostream& out,
              std::ostream& err) {
  BenchmarkConfig cfg = so.bench_config();
  cfg.sample_size = sample_size;
  cfg.workers = workers;
  cfg.grammar_scorer = grammar;
  cfg.perplexity_scorer = perplexity;
  if (!sweep.empty()) cfg.budget_sweep = parse_sweep(sweep);
  cfg.validate();
  const Lexicon lex = load_lexicon(so.lexicon);
  const auto corpus = load_corpus(corpus_path, plain);
  if (corpus.empty()) {
    err << "corpus " << corpus_path << " is empty\n";
    return kExitConfig;
  }
  auto victim = make_victim(so.victim, so.timeout());

  if (!cfg.budget_sweep.empty()) {
    const SweepResult sw = budget_sweep(corpus, lex, *victim, cfg);
    json points = json::array();
    for (const auto& p : sw.points) points.push_back(to_json(p));
    const json j = {{"config", config_json(cfg)},
                    {"filter", to_json(sw.filter)},
                    {"points", std::move(points)}};
    const std::string table = format_table(sw.points);
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      write_file(fs::path(out_dir) / "sweep.json", j.dump(2) + "\n");
      write_file(fs::path(out_dir) / "sweep.txt", table);
    }
    out << table;
    return kExitOk;
  }

  Report report = run_benchmark(corpus, lex, *victim, cfg);
  if (!transfer_spec.empty()) {
    auto other = make_victim(transfer_spec, so.timeout());
    for (auto& rep : report.algorithms) {
      std::vector<InstanceRecord> mine;
      for (const auto& r : report.records) {
        if (r.algorithm == rep.algorithm) mine.push_back(r);
      }
      try {
        rep.transfer_accuracy = cross_evaluate(mine, *other).accuracy;
      } catch (const EmptyAfterFilter&) {
      }
    }
  }
  const std::string table = format_table(report.algorithms);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::ostringstream exp;
    write_export(exp, report.records);
    write_file(fs::path(out_dir) / "report.json",
               report_json(report, cfg).dump(2) + "\n");
    write_file(fs::path(out_dir) / "report.txt", table);
    write_file(fs::path(out_dir) / "export.jsonl", exp.str());
  }
  out << table;
  return kExitOk;
}

int cmd_space(const std::string& lexicon, const std::string& victim_spec,
              const InputOptions& in, const SearchOptions& so,
              std::ostream& out, std::ostream& err) {
  const Lexicon lex = load_lexicon(lexicon);
  const Sentence s = in.read();
  std::unique_ptr<Victim> victim;
  if (!victim_spec.empty()) victim = make_victim(victim_spec, so.timeout());
  try {
    const SearchSpace space = build_space(
        s, lex, victim ? vocab_of(*victim) : nullptr, space_config(so));
    json cands = json::array();
    for (const auto& c : space.candidates()) cands.push_back(c);
    json j = {{"dims", space.dims()},
              {"mutable_positions", space.mutable_positions()},
              {"size", space.size_capped(kDefaultExhaustiveCap)},
              {"candidates", std::move(cands)}};
    out << j.dump(2) << '\n';
    return kExitOk;
  } catch (const NoCandidates& e) {
    err << "no candidates: " << e.what() << '\n';
    return kExitNoResult;
  } catch (const LengthOutOfBounds& e) {
    err << "length out of bounds: " << e.what() << '\n';
    return kExitNoResult;
  }
}

int cmd_lexstats(const std::string& lexicon, const std::string& corpus_path,
                 bool plain, std::ostream& out) {
  const Lexicon lex = load_lexicon(lexicon);
  const auto corpus = load_corpus(corpus_path, plain);
  const SubstituteStats st = lexicon_stats(lex, corpus);
  json hist = json::object();
  for (const auto& [size, count] : st.histogram) {
    hist[std::to_string(size)] = count;
  }
  out << json{{"lexicon_version", lex.version()},
              {"entries", lex.size()},
              {"occurrences", st.occurrences},
              {"mean", st.mean},
              {"histogram", std::move(hist)}}
             .dump(2)
      << '\n';
  return kExitOk;
}

}  // namespace

std::unique_ptr<Victim> make_victim(const std::string& spec,
                                    std::chrono::milliseconds timeout) {
  if (spec.rfind("builtin:bow:", 0) == 0) return builtin_bow(spec.substr(12));
  if (spec.rfind("builtin:const:", 0) == 0) {
    const auto rest = spec.substr(14);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw ConfigError("builtin:const needs IDX:LABEL1,LABEL2,...");
    }
    const std::size_t idx = parse_count(rest.substr(0, colon), "label index");
    try {
      return std::make_unique<ConstantVictim>(
          split(rest.substr(colon + 1), ','), idx);
    } catch (const ValidationError& e) {
      throw ConfigError(e.what());
    }
  }
  RemoteOptions opts;
  opts.timeout = timeout;
  return connect_remote(spec, opts);
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Word-level adversarial attacks by discrete particle swarm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML config; sections name subcommands")
      ->envname("SWARMATTACK_CONFIG");

  SearchOptions attack_opts;
  InputOptions attack_in;
  std::optional<std::size_t> target;
  auto* attack = app.add_subcommand("attack", "Attack one sentence");
  attack_opts.add(attack);
  attack_in.add(attack);
  attack->add_option("--target", target, "Target label (default: untargeted)");

  SearchOptions bench_opts;
  std::string corpus;
  bool bench_plain = false;
  std::size_t sample_size = 1000;
  std::size_t workers = 1;
  std::string sweep;
  std::string out_dir;
  std::string transfer_victim;
  std::optional<std::string> grammar;
  std::optional<std::string> perplexity;
  auto* bench = app.add_subcommand("bench", "Run the evaluation harness");
  bench_opts.add(bench);
  bench->add_option("--corpus", corpus, "Tagged JSONL corpus")->required();
  bench->add_flag("--plain", bench_plain, "Corpus is plain text");
  bench->add_option("--sample-size", sample_size);
  bench->add_option("--workers", workers);
  bench->add_option("--sweep", sweep, "Budget grid T1,T2,...xN1,N2,...");
  bench->add_option("--out", out_dir, "Output directory");
  bench->add_option("--transfer-victim", transfer_victim,
                    "Second victim for transfer accuracy");
  bench->add_option("--grammar-scorer", grammar, "External scorer command");
  bench->add_option("--perplexity-scorer", perplexity,
                    "External scorer command");

  std::string adv_file;
  std::string transfer_spec;
  double transfer_timeout = 30.0;
  auto* transfer = app.add_subcommand("transfer", "Cross-evaluate an export");
  transfer->add_option("--adv-file", adv_file, "Export JSONL")->required();
  transfer->add_option("--victim", transfer_spec, "Victim spec")->required();
  transfer->add_option("--timeout", transfer_timeout);

  std::string space_lexicon;
  std::string space_victim;
  InputOptions space_in;
  SearchOptions space_opts;
  auto* space = app.add_subcommand("space", "Print a sentence's candidates");
  space->add_option("--lexicon", space_lexicon, "Lexicon file")->required();
  space->add_option("--victim", space_victim, "Victim spec (vocab filter)");
  space->add_flag("--assume-content", space_opts.assume_content);
  space->add_flag("--no-length-bounds", space_opts.no_length_bounds);
  space->add_option("--min-len", space_opts.min_len);
  space->add_option("--max-len", space_opts.max_len);
  space_in.add(space);

  std::string stats_lexicon;
  std::string stats_corpus;
  bool stats_plain = false;
  auto* lexstats =
      app.add_subcommand("lexstats", "Substitute-count statistics");
  lexstats->add_option("--lexicon", stats_lexicon, "Lexicon file")->required();
  lexstats->add_option("--corpus", stats_corpus, "Tagged JSONL corpus")
      ->required();
  lexstats->add_flag("--plain", stats_plain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*attack) return cmd_attack(attack_opts, attack_in, target, out, err);
    if (*bench) {
      return cmd_bench(bench_opts, corpus, bench_plain, sample_size, workers,
                       sweep, out_dir, transfer_victim, grammar, perplexity,
                       out, err);
    }
    if (*transfer) {
      auto victim = make_victim(
          transfer_spec, std::chrono::milliseconds(
                             static_cast<long long>(transfer_timeout * 1000)));
      const TransferResult r = cross_evaluate(fs::path(adv_file), *victim);
      out << json{{"evaluated", r.evaluated},
                  {"still_original", r.still_original},
                  {"accuracy", r.accuracy}}
                 .dump(2)
          << '\n';
      return kExitOk;
    }
    if (*space) {
      return cmd_space(space_lexicon, space_victim, space_in, space_opts, out,
                       err);
    }
    if (*lexstats)
      return cmd_lexstats(stats_lexicon, stats_corpus, stats_plain, out);
  } catch (const ConnectFailed& e) {
    err << "connect failed: " << e.what() << '\n';
    return kExitConnect;
  } catch (const HandshakeMismatch& e) {
    err << "handshake failed: " << e.what() << '\n';
    return kExitConnect;
  } catch (const Timeout& e) {
    err << "victim timeout: " << e.what() << '\n';
    return kExitConnect;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace swarmattack::cli
