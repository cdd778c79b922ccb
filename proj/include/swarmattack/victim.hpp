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

#ifndef SWARMATTACK_VICTIM_HPP_
#define SWARMATTACK_VICTIM_HPP_

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "swarmattack/errors.hpp"
#include "swarmattack/sentence.hpp"
#include "swarmattack/text.hpp"

namespace swarmattack {

struct VictimManifest {
  std::vector<std::string> labels;
  std::optional<std::unordered_set<std::string>> vocab;
  std::size_t max_batch = 64;
  std::string vocab_digest;

  std::size_t num_labels() const { return labels.size(); }
};

struct VictimPrediction {
  std::vector<double> probs;

  /// Highest-probability label; ties go to the lowest index.
  std::size_t argmax() const {
    return static_cast<std::size_t>(
        std::max_element(probs.begin(), probs.end()) - probs.begin());
  }
  double operator[](std::size_t label) const { return probs[label]; }
};

/// Exponential normalization of raw label scores.
inline std::vector<double> softmax(std::span<const double> scores) {
  std::vector<double> out(scores.begin(), scores.end());
  if (out.empty()) return out;
  const double hi = *std::max_element(out.begin(), out.end());
  double sum = 0.0;
  for (double& x : out) {
    x = std::exp(x - hi);
    sum += x;
  }
  for (double& x : out) x /= sum;
  return out;
}

/// Black-box classifier reachable only through probability queries.
///
/// Every scored sentence costs one query on the shared ledger. Batches
/// larger than the manifest's max_batch are split transparently.
class Victim {
 public:
  virtual ~Victim() = default;

  virtual const VictimManifest& manifest() const = 0;

  std::vector<VictimPrediction> predict_batch(
      std::span<const Sentence> sentences,
      const std::optional<std::string>& context = std::nullopt) {
    std::vector<VictimPrediction> out;
    out.reserve(sentences.size());
    const std::size_t step = std::max<std::size_t>(1, manifest().max_batch);
    for (std::size_t i = 0; i < sentences.size(); i += step) {
      const auto chunk =
          sentences.subspan(i, std::min(step, sentences.size() - i));
      std::vector<VictimPrediction> part = score(chunk, context);
      if (part.size() != chunk.size()) {
        throw ProtocolError("victim returned " + std::to_string(part.size()) +
                            " predictions for " + std::to_string(chunk.size()) +
                            " sentences");
      }
      for (const auto& p : part) {
        if (p.probs.size() != manifest().num_labels()) {
          throw LabelMismatch(
              "prediction has " + std::to_string(p.probs.size()) +
              " probabilities, manifest has " +
              std::to_string(manifest().num_labels()) + " labels");
        }
      }
      total_queries_.fetch_add(chunk.size(), std::memory_order_relaxed);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }

  VictimPrediction predict(const Sentence& s) {
    return predict_batch(std::span<const Sentence>(&s, 1), s.context).front();
  }

  std::uint64_t total_queries() const {
    return total_queries_.load(std::memory_order_relaxed);
  }

 protected:
  virtual std::vector<VictimPrediction> score(
      std::span<const Sentence> sentences,
      const std::optional<std::string>& context) = 0;

 private:
  std::atomic<std::uint64_t> total_queries_{0};
};

/// Linear bag-of-words classifier: the score of a label is its bias plus the
/// sum of the label's weights over the (lowercased) tokens.
///
/// Weights file (JSON):
///   {"labels":["negative","positive"],
///    "weights":{"good":[0.0,1.0], ...},
///    "bias":[0.0,0.0], "vocab":["the", ...], "max_batch":256}
/// `bias`, `vocab` and `max_batch` are optional; the vocabulary is the union
/// of weighted words and `vocab`.
class BowVictim : public Victim {
 public:
  BowVictim(std::vector<std::string> labels,
            std::unordered_map<std::string, std::vector<double>> weights,
            std::vector<double> bias = {},
            std::vector<std::string> extra_vocab = {},
            std::size_t max_batch = 256)
      : weights_(std::move(weights)), bias_(std::move(bias)) {
    manifest_.labels = std::move(labels);
    manifest_.max_batch = max_batch;
    if (manifest_.labels.size() < 2) {
      throw ValidationError("victim needs at least two labels");
    }
    if (bias_.empty()) bias_.assign(manifest_.labels.size(), 0.0);
    if (bias_.size() != manifest_.labels.size()) {
      throw ValidationError("bias length does not match labels");
    }
    std::unordered_map<std::string, std::vector<double>> lowered;
    std::unordered_set<std::string> vocab;
    for (auto& [w, vec] : weights_) {
      if (vec.size() != manifest_.labels.size()) {
        throw ValidationError("weight vector for '" + w +
                              "' does not match labels");
      }
      vocab.insert(to_lower(w));
      lowered[to_lower(w)] = std::move(vec);
    }
    weights_ = std::move(lowered);
    for (const auto& w : extra_vocab) vocab.insert(to_lower(w));
    manifest_.vocab = std::move(vocab);
  }

  const VictimManifest& manifest() const override { return manifest_; }

  /// Raw (pre-normalization) label scores.
  std::vector<double> logits(const Sentence& s) const {
    std::vector<double> z = bias_;
    std::string key;
    for (const Token& t : s.tokens) {
      key.assign(t.surface);
      for (char& c : key) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      if (auto it = weights_.find(key); it != weights_.end()) {
        for (std::size_t l = 0; l < z.size(); ++l) z[l] += it->second[l];
      }
    }
    return z;
  }

  const std::unordered_map<std::string, std::vector<double>>& weights() const {
    return weights_;
  }
  const std::vector<double>& bias() const { return bias_; }

 protected:
  std::vector<VictimPrediction> score(
      std::span<const Sentence> sentences,
      const std::optional<std::string>& /*context*/) override {
    std::vector<VictimPrediction> out;
    out.reserve(sentences.size());
    for (const Sentence& s : sentences) {
      const std::vector<double> z = logits(s);
      out.push_back(VictimPrediction{softmax(z)});
    }
    return out;
  }

 private:
  VictimManifest manifest_;
  std::unordered_map<std::string, std::vector<double>> weights_;
  std::vector<double> bias_;
};

inline std::unique_ptr<BowVictim> builtin_bow(
    const std::filesystem::path& weights_path) {
  std::ifstream in(weights_path);
  if (!in)
    throw ParseError("cannot open weights file " + weights_path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    std::vector<std::string> labels = j.at("labels");
    std::unordered_map<std::string, std::vector<double>> weights =
        j.at("weights");
    std::vector<double> bias = j.value("bias", std::vector<double>{});
    std::vector<std::string> vocab =
        j.value("vocab", std::vector<std::string>{});
    const std::size_t max_batch = j.value("max_batch", std::size_t{256});
    return std::make_unique<BowVictim>(std::move(labels), std::move(weights),
                                       std::move(bias), std::move(vocab),
                                       max_batch);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("weights file " + weights_path.string() + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ParseError("weights file " + weights_path.string() + ": " + e.what());
  }
}

/// Always predicts the same label with probability one.
class ConstantVictim : public Victim {
 public:
  ConstantVictim(std::vector<std::string> labels, std::size_t label)
      : label_(label) {
    manifest_.labels = std::move(labels);
    manifest_.max_batch = 1024;
    if (manifest_.labels.size() < 2 || label_ >= manifest_.labels.size()) {
      throw ValidationError("constant victim label out of range");
    }
  }

  const VictimManifest& manifest() const override { return manifest_; }

 protected:
  std::vector<VictimPrediction> score(
      std::span<const Sentence> sentences,
      const std::optional<std::string>& /*context*/) override {
    std::vector<double> probs(manifest_.labels.size(), 0.0);
    probs[label_] = 1.0;
    return std::vector<VictimPrediction>(sentences.size(),
                                         VictimPrediction{probs});
  }

 private:
  VictimManifest manifest_;
  std::size_t label_;
};

}  // namespace swarmattack

#endif  // SWARMATTACK_VICTIM_HPP_
