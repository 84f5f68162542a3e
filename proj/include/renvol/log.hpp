// Copyright 2026 The renvol Authors.
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

#pragma once

#include <functional>
#include <iostream>
#include <mutex>
#include <string>
#include <utility>

namespace renvol::log {

enum class Level { debug = 0, info = 1, warn = 2, silent = 3 };

using Sink = std::function<void(Level, const std::string&)>;

namespace detail {
struct State {
  std::mutex mutex;
  Level threshold = Level::warn;
  Sink sink = [](Level lvl, const std::string& msg) {
    static const char* names[] = {"debug", "info", "warn", ""};
    std::clog << "[renvol " << names[static_cast<int>(lvl)] << "] " << msg << '\n';
  };
};
inline State& state() {
  static State s;
  return s;
}
}  // namespace detail

inline void set_level(Level lvl) {
  std::scoped_lock lock(detail::state().mutex);
  detail::state().threshold = lvl;
}

inline Level level() {
  std::scoped_lock lock(detail::state().mutex);
  return detail::state().threshold;
}

/// Replace the output sink (tests capture messages this way).
inline void set_sink(Sink sink) {
  std::scoped_lock lock(detail::state().mutex);
  detail::state().sink = std::move(sink);
}

inline void write(Level lvl, const std::string& msg) {
  auto& s = detail::state();
  std::scoped_lock lock(s.mutex);
  if (lvl < s.threshold || s.threshold == Level::silent) return;
  if (s.sink) s.sink(lvl, msg);
}

inline void debug(const std::string& msg) { write(Level::debug, msg); }
inline void info(const std::string& msg) { write(Level::info, msg); }
inline void warn(const std::string& msg) { write(Level::warn, msg); }

}  // namespace renvol::log
