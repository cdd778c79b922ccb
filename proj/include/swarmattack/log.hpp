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

#ifndef SWARMATTACK_LOG_HPP_
#define SWARMATTACK_LOG_HPP_

#include <functional>
#include <iostream>
#include <mutex>
#include <string_view>
#include <utility>

namespace swarmattack {

using LogSink = std::function<void(std::string_view)>;

namespace detail {
inline std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}
inline LogSink& warning_sink() {
  static LogSink sink = [](std::string_view msg) {
    std::cerr << "warning: " << msg << '\n';
  };
  return sink;
}
}  // namespace detail

/// Replaces the warning sink, returning the previous one.
inline LogSink set_warning_sink(LogSink sink) {
  std::lock_guard<std::mutex> lock(detail::log_mutex());
  return std::exchange(detail::warning_sink(), std::move(sink));
}

inline void log_warning(std::string_view msg) {
  std::lock_guard<std::mutex> lock(detail::log_mutex());
  if (detail::warning_sink()) detail::warning_sink()(msg);
}

}  // namespace swarmattack

#endif  // SWARMATTACK_LOG_HPP_
