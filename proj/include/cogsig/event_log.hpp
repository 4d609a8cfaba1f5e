// Copyright 2026 The cogsig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Keystroke event streams: the cogsig-v1 JSONL wire format, inter-key
// intervals, privacy quantization and document replay.

#ifndef COGSIG_EVENT_LOG_HPP
#define COGSIG_EVENT_LOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cogsig {

using Millis = std::int64_t;

enum class EventKind { kInsert, kBackspace, kDelete, kCursorMove, kEnter };

std::string_view event_kind_name(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view name);

constexpr bool is_deletion(EventKind kind) {
  return kind == EventKind::kBackspace || kind == EventKind::kDelete;
}

// Insert and enter both add one character to the document.
constexpr bool is_insertion(EventKind kind) {
  return kind == EventKind::kInsert || kind == EventKind::kEnter;
}

struct KeystrokeEvent {
  Millis t = 0;
  EventKind kind = EventKind::kInsert;
  // One Unicode code point; only on inserts outside privacy mode.
  std::optional<char32_t> payload;
  std::size_t pos = 0;
  // Complexity bin 0-7 attached to word onsets in privacy mode.
  std::optional<int> cbin;

  friend bool operator==(const KeystrokeEvent&, const KeystrokeEvent&) = default;
};

inline constexpr int kDefaultResolutionMs = 5;
inline constexpr std::string_view kSessionSchema = "cogsig-v1";

struct Session {
  std::vector<KeystrokeEvent> events;
  int resolution_ms = kDefaultResolutionMs;
  bool privacy_mode = false;
  std::string writer_id;
  std::string session_id;

  friend bool operator==(const Session&, const Session&) = default;
};

struct IkiSeries {
  std::vector<Millis> values;
  // index_map[i] is the event that terminates values[i].
  std::vector<std::size_t> index_map;
};

// Parses the JSONL wire format. The first non-blank line is the session
// header when it carries "schema"; every other non-blank line is one event.
// Without a header the session has default settings and empty ids.
Session parse_log(std::string_view text);

// Writes the JSONL wire format; parse_log(serialize_log(s)) == s.
std::string serialize_log(const Session& session);

IkiSeries compute_ikis(const Session& session);

// Floor quantization to a multiple of `resolution_ms`.
Millis quantize(Millis iki, int resolution_ms);

// Copy of `session` whose consecutive timestamp differences are quantized
// at `resolution_ms`; the result carries that resolution.
Session quantize_session(const Session& session, int resolution_ms);

struct ReconstructedText {
  std::u32string text;
  // For each surviving character, the event that inserted it.
  std::vector<std::size_t> origin_event;
};

ReconstructedText reconstruct_text(const Session& session);

// Code point removed by each deletion event (nullopt for other events and
// in privacy mode). Throws PositionOutOfRange on invalid edits.
std::vector<std::optional<char32_t>> deleted_characters(const Session& session);

std::string to_utf8(std::u32string_view text);
std::u32string from_utf8(std::string_view text);

}  // namespace cogsig

#endif  // COGSIG_EVENT_LOG_HPP
