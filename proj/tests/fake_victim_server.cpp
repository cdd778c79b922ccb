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

// Scriptable NDJSON victim for the remote-client tests:
//   fake_victim_server MODE [WEIGHTS] [LOG]
// MODE picks the reply behaviour; WEIGHTS is a bag-of-words file used by
// modes that score texts; LOG, when given, receives every request line.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <string>
#include <thread>

#include "swarmattack/corpus.hpp"
#include "swarmattack/victim.hpp"

using nlohmann::json;

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "fixed";
  std::unique_ptr<swarmattack::BowVictim> bow;
  if (argc > 2 && std::string(argv[2]) != "-") {
    bow = swarmattack::builtin_bow(argv[2]);
  }
  std::ofstream log;
  if (argc > 3) log.open(argv[3], std::ios::app);
  if (mode == "die") return 1;

  std::string line;
  while (std::getline(std::cin, line)) {
    if (log.is_open()) log << line << std::endl;
    json req;
    try {
      req = json::parse(line);
    } catch (const json::parse_error&) {
      std::cout << json{{"error", "bad json"}}.dump() << std::endl;
      continue;
    }
    if (!req.contains("op")) {
      std::cout << json{{"error", "missing op"}}.dump() << std::endl;
      continue;
    }
    const std::string op = req["op"];
    if (op == "manifest") {
      if (mode == "bad_manifest") {
        std::cout << json{{"labels", json::array({"only"})}}.dump()
                  << std::endl;
        continue;
      }
      if (mode == "garbage_manifest") {
        std::cout << "this is not json" << std::endl;
        continue;
      }
      json m = {{"labels", json::array({"negative", "positive"})},
                {"max_batch", mode == "small_batch" ? 2 : 64},
                {"vocab_digest", "toy"}};
      if (bow) {
        json vocab = json::array();
        for (const auto& w : *bow->manifest().vocab) vocab.push_back(w);
        std::sort(vocab.begin(), vocab.end());
        m["vocab"] = vocab;
      }
      std::cout << m.dump() << std::endl;
      continue;
    }
    if (op != "predict") {
      std::cout << json{{"error", "unknown op"}}.dump() << std::endl;
      continue;
    }
    if (mode == "hang") {
      std::this_thread::sleep_for(std::chrono::seconds(30));
    }
    if (mode == "exit_on_predict") return 0;
    if (mode == "garbage") {
      std::cout << "{\"probs\": [[0.5," << std::endl;
      continue;
    }
    json rows = json::array();
    for (const auto& t : req["texts"]) {
      if (mode == "short") {
        rows.push_back(json::array({1.0}));
      } else if (mode == "sum9995") {
        rows.push_back(json::array({0.2, 0.7995}));
      } else if (mode == "sum98") {
        rows.push_back(json::array({0.18, 0.8}));
      } else if (mode == "negative") {
        rows.push_back(json::array({-0.1, 1.1}));
      } else if (bow) {
        const auto s = swarmattack::sentence_from_text(t.get<std::string>());
        rows.push_back(bow->predict(s).probs);
      } else {
        rows.push_back(json::array({0.25, 0.75}));
      }
    }
    if (mode == "wrong_rows") rows.push_back(json::array({0.5, 0.5}));
    std::cout << json{{"probs", rows}}.dump() << std::endl;
  }
  return 0;
}
