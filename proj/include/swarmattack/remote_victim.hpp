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

#ifndef SWARMATTACK_REMOTE_VICTIM_HPP_
#define SWARMATTACK_REMOTE_VICTIM_HPP_

#include <httplib.h>

#include <chrono>
#include <cmath>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "swarmattack/errors.hpp"
#include "swarmattack/log.hpp"
#include "swarmattack/subprocess.hpp"
#include "swarmattack/victim.hpp"

namespace swarmattack {

struct RemoteOptions {
  std::chrono::milliseconds timeout = std::chrono::seconds(30);
  // Probability rows further than this from summing to one are rejected;
  // closer ones are renormalized, with a warning past 1e-6.
  double renormalize_tolerance = 1e-3;
};

/// Carries one JSON request and its JSON reply.
class Transport {
 public:
  virtual ~Transport() = default;
  // `op` is "manifest" or "predict".
  virtual nlohmann::json request(const std::string& op,
                                 const nlohmann::json& body) = 0;
};

/// Newline-delimited JSON over the stdio of a spawned command.
class StdioTransport : public Transport {
 public:
  explicit StdioTransport(const std::string& command,
                          std::chrono::milliseconds timeout)
      : child_(command), timeout_(timeout) {}

  nlohmann::json request(const std::string& /*op*/,
                         const nlohmann::json& body) override {
    child_.write_line(body.dump());
    const std::optional<std::string> line = child_.read_line(timeout_);
    if (!line) throw ConnectFailed("victim process closed its output");
    try {
      return nlohmann::json::parse(*line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ProtocolError(std::string("malformed reply: ") + e.what());
    }
  }

 private:
  ChildProcess child_;
  std::chrono::milliseconds timeout_;
};

/// HTTP POST of the same bodies to `<base>/v1/manifest` and `/v1/predict`.
class HttpTransport : public Transport {
 public:
  HttpTransport(const std::string& base_url, std::chrono::milliseconds timeout)
      : client_(base_url) {
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout);
    const auto usecs =
        std::chrono::duration_cast<std::chrono::microseconds>(timeout - secs);
    client_.set_connection_timeout(secs.count(), usecs.count());
    client_.set_read_timeout(secs.count(), usecs.count());
    client_.set_write_timeout(secs.count(), usecs.count());
    if (!client_.is_valid()) throw ConnectFailed("invalid URL " + base_url);
  }

  nlohmann::json request(const std::string& op,
                         const nlohmann::json& body) override {
    auto res = client_.Post("/v1/" + op, body.dump(), "application/json");
    if (!res) {
      if (res.error() == httplib::Error::Read ||
          res.error() == httplib::Error::Write) {
        throw Timeout("HTTP " + op + ": " + httplib::to_string(res.error()));
      }
      throw ConnectFailed("HTTP " + op + ": " +
                          httplib::to_string(res.error()));
    }
    if (res->status != 200 && res->status != 400) {
      throw ProtocolError("HTTP " + op + " returned status " +
                          std::to_string(res->status));
    }
    try {
      return nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ProtocolError(std::string("malformed reply: ") + e.what());
    }
  }

 private:
  httplib::Client client_;
};

/// Parses a manifest reply; throws HandshakeMismatch when it is unusable.
inline VictimManifest parse_manifest(const nlohmann::json& j) {
  if (!j.is_object())
    throw HandshakeMismatch("manifest reply is not an object");
  if (j.contains("error")) {
    throw HandshakeMismatch("manifest request failed: " + j["error"].dump());
  }
  VictimManifest m;
  if (!j.contains("labels") || !j["labels"].is_array()) {
    throw HandshakeMismatch("manifest lacks a labels array");
  }
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) throw HandshakeMismatch("label names must be strings");
    m.labels.push_back(l.get<std::string>());
  }
  if (m.labels.size() < 2) {
    throw HandshakeMismatch("manifest declares fewer than two labels");
  }
  if (j.contains("max_batch")) {
    if (!j["max_batch"].is_number_integer() || j["max_batch"].get<long>() < 1) {
      throw HandshakeMismatch("max_batch must be a positive integer");
    }
    m.max_batch = j["max_batch"].get<std::size_t>();
  }
  if (j.contains("vocab_digest") && j["vocab_digest"].is_string()) {
    m.vocab_digest = j["vocab_digest"].get<std::string>();
  }
  if (j.contains("vocab") && j["vocab"].is_array()) {
    std::unordered_set<std::string> vocab;
    for (const auto& w : j["vocab"]) {
      if (w.is_string()) vocab.insert(to_lower(w.get<std::string>()));
    }
    m.vocab = std::move(vocab);
  }
  return m;
}

/// Validates one reply vector against the label count and renormalizes it.
inline std::vector<double> checked_probs(const nlohmann::json& row,
                                         std::size_t num_labels,
                                         double tolerance) {
  if (!row.is_array()) throw ProtocolError("probability row is not an array");
  if (row.size() != num_labels) {
    throw LabelMismatch("reply has " + std::to_string(row.size()) +
                        " probabilities for " + std::to_string(num_labels) +
                        " labels");
  }
  std::vector<double> probs;
  probs.reserve(row.size());
  double sum = 0.0;
  for (const auto& x : row) {
    if (!x.is_number()) throw ProtocolError("probability is not a number");
    const double p = x.get<double>();
    if (!std::isfinite(p) || p < 0.0) {
      throw ProtocolError("probability out of range");
    }
    probs.push_back(p);
    sum += p;
  }
  const double off = std::abs(sum - 1.0);
  if (off > tolerance) {
    throw ProtocolError("probabilities sum to " + std::to_string(sum));
  }
  if (off > 1e-6) {
    log_warning("renormalizing probabilities that sum to " +
                std::to_string(sum));
  }
  // Rows already normalized to double precision pass through untouched, so
  // a remote victim can reproduce a local one bit for bit.
  if (off > 1e-12) {
    for (double& p : probs) p /= sum;
  }
  return probs;
}

/// Victim served by an external process or HTTP endpoint. The manifest is
/// fetched once on construction; requests on one instance are serialized.
class RemoteVictim : public Victim {
 public:
  explicit RemoteVictim(std::unique_ptr<Transport> transport,
                        double renormalize_tolerance = 1e-3)
      : transport_(std::move(transport)), tolerance_(renormalize_tolerance) {
    nlohmann::json reply;
    try {
      reply = transport_->request("manifest", {{"op", "manifest"}});
    } catch (const ProtocolError& e) {
      throw HandshakeMismatch(e.what());
    }
    manifest_ = parse_manifest(reply);
  }

  const VictimManifest& manifest() const override { return manifest_; }

 protected:
  std::vector<VictimPrediction> score(
      std::span<const Sentence> sentences,
      const std::optional<std::string>& context) override {
    if (sentences.empty()) return {};
    nlohmann::json texts = nlohmann::json::array();
    for (const Sentence& s : sentences) texts.push_back(join_text(s));
    nlohmann::json body{{"op", "predict"}, {"texts", std::move(texts)}};
    if (context) {
      body["context"] =
          nlohmann::json::array_t(sentences.size(), nlohmann::json(*context));
    }
    nlohmann::json reply;
    {
      std::lock_guard<std::mutex> lock(mu_);
      reply = transport_->request("predict", body);
    }
    if (!reply.is_object())
      throw ProtocolError("predict reply is not an object");
    if (reply.contains("error")) {
      throw ProtocolError("victim error: " + reply["error"].dump());
    }
    if (!reply.contains("probs") || !reply["probs"].is_array()) {
      throw ProtocolError("predict reply lacks a probs array");
    }
    const auto& rows = reply["probs"];
    if (rows.size() != sentences.size()) {
      throw ProtocolError("reply has " + std::to_string(rows.size()) +
                          " rows for " + std::to_string(sentences.size()) +
                          " texts");
    }
    std::vector<VictimPrediction> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
      out.push_back(VictimPrediction{
          checked_probs(row, manifest_.num_labels(), tolerance_)});
    }
    return out;
  }

 private:
  std::unique_ptr<Transport> transport_;
  double tolerance_;
  VictimManifest manifest_;
  std::mutex mu_;
};

/// Connects to `exec:<command>` or `http://host:port` (also `http:host:port`).
inline std::unique_ptr<RemoteVictim> connect_remote(
    const std::string& endpoint, const RemoteOptions& opts = {}) {
  std::unique_ptr<Transport> transport;
  if (endpoint.rfind("exec:", 0) == 0) {
    transport =
        std::make_unique<StdioTransport>(endpoint.substr(5), opts.timeout);
  } else if (endpoint.rfind("http://", 0) == 0) {
    transport = std::make_unique<HttpTransport>(endpoint, opts.timeout);
  } else if (endpoint.rfind("http:", 0) == 0) {
    transport = std::make_unique<HttpTransport>("http://" + endpoint.substr(5),
                                                opts.timeout);
  }
  if (transport) {
    return std::make_unique<RemoteVictim>(std::move(transport),
                                          opts.renormalize_tolerance);
  }
  throw ConfigError("unrecognized remote endpoint '" + endpoint + "'");
}

}  // namespace swarmattack

#endif  // SWARMATTACK_REMOTE_VICTIM_HPP_
