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

#include "cogsig/event_log.hpp"

#include <algorithm>
#include <array>

#include "cogsig/error.hpp"
#include "json.hpp"

namespace cogsig {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 5> kKindNames = {
    "insert", "backspace", "delete", "cursor_move", "enter"};

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  });
}

[[noreturn]] void malformed(std::size_t line, const std::string& reason) {
  throw RecordError(ErrorCode::kMalformedRecord, line, reason);
}

std::int64_t require_int(const json& record, const char* key,
                         std::size_t line) {
  auto it = record.find(key);
  if (it == record.end()) malformed(line, std::string("missing \"") + key + "\"");
  if (!it->is_number_integer()) {
    malformed(line, std::string("\"") + key + "\" must be an integer");
  }
  return it->get<std::int64_t>();
}

std::string require_string(const json& record, const char* key,
                           std::size_t line) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_string()) {
    malformed(line, std::string("\"") + key + "\" must be a string");
  }
  return it->get<std::string>();
}

void parse_header(const json& header, Session& session, std::size_t line) {
  if (!header.is_object()) malformed(line, "header must be a JSON object");
  for (const auto& [key, value] : header.items()) {
    if (key != "schema" && key != "session" && key != "writer" && key != "r" &&
        key != "privacy") {
      malformed(line, "unknown header field \"" + key + "\"");
    }
  }
  if (require_string(header, "schema", line) != kSessionSchema) {
    malformed(line, "unsupported schema");
  }
  session.session_id = require_string(header, "session", line);
  session.writer_id = require_string(header, "writer", line);
  const std::int64_t r = require_int(header, "r", line);
  if (r < 1 || r > 1'000'000) malformed(line, "\"r\" must be a positive integer");
  session.resolution_ms = static_cast<int>(r);
  auto privacy = header.find("privacy");
  if (privacy == header.end() || !privacy->is_boolean()) {
    malformed(line, "\"privacy\" must be a boolean");
  }
  session.privacy_mode = privacy->get<bool>();
}

KeystrokeEvent parse_event(const json& record, bool privacy_mode,
                           std::size_t line) {
  if (!record.is_object()) malformed(line, "event must be a JSON object");
  for (const auto& [key, value] : record.items()) {
    if (key != "t" && key != "kind" && key != "payload" && key != "pos" &&
        key != "cbin") {
      malformed(line, "unknown event field \"" + key + "\"");
    }
  }
  KeystrokeEvent event;
  event.t = require_int(record, "t", line);
  if (event.t < 0) malformed(line, "\"t\" must be non-negative");
  const auto kind = parse_event_kind(require_string(record, "kind", line));
  if (!kind) malformed(line, "unknown event kind");
  event.kind = *kind;
  const std::int64_t pos = require_int(record, "pos", line);
  if (pos < 0) malformed(line, "\"pos\" must be non-negative");
  event.pos = static_cast<std::size_t>(pos);

  auto payload = record.find("payload");
  const bool wants_payload = event.kind == EventKind::kInsert && !privacy_mode;
  if (payload != record.end()) {
    if (!wants_payload) {
      malformed(line, privacy_mode ? "payload not allowed in privacy mode"
                                   : "payload only allowed on insert");
    }
    if (!payload->is_string()) malformed(line, "\"payload\" must be a string");
    const std::u32string decoded = from_utf8(payload->get<std::string>());
    if (decoded.size() != 1) {
      malformed(line, "\"payload\" must be exactly one character");
    }
    event.payload = decoded.front();
  } else if (wants_payload) {
    malformed(line, "insert requires a payload outside privacy mode");
  }

  auto cbin = record.find("cbin");
  if (cbin != record.end()) {
    if (!privacy_mode) malformed(line, "\"cbin\" only allowed in privacy mode");
    if (!cbin->is_number_integer()) malformed(line, "\"cbin\" must be an integer");
    const auto value = cbin->get<std::int64_t>();
    if (value < 0 || value > 7) malformed(line, "\"cbin\" must be in 0-7");
    event.cbin = static_cast<int>(value);
  }
  return event;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Replays edits, calling `on_delete(event_index, removed)` for deletions.
template <typename OnDelete>
ReconstructedText replay(const Session& session, OnDelete&& on_delete) {
  ReconstructedText doc;
  for (std::size_t i = 0; i < session.events.size(); ++i) {
    const KeystrokeEvent& e = session.events[i];
    const std::size_t len = doc.text.size();
    auto out_of_range = [&] {
      throw Error(ErrorCode::kPositionOutOfRange,
                  "event " + std::to_string(i) + ": position " +
                      std::to_string(e.pos) + " invalid for document length " +
                      std::to_string(len));
    };
    switch (e.kind) {
      case EventKind::kInsert:
      case EventKind::kEnter: {
        if (e.pos > len) out_of_range();
        const char32_t c = e.kind == EventKind::kEnter ? U'\n' : e.payload.value_or(U'\uFFFD');
        doc.text.insert(doc.text.begin() + static_cast<std::ptrdiff_t>(e.pos), c);
        doc.origin_event.insert(
            doc.origin_event.begin() + static_cast<std::ptrdiff_t>(e.pos), i);
        break;
      }
      case EventKind::kBackspace:
      case EventKind::kDelete: {
        // Backspace removes the character before the caret, delete the one
        // after it.
        const bool back = e.kind == EventKind::kBackspace;
        if (back ? (e.pos == 0 || e.pos > len) : e.pos >= len) out_of_range();
        const std::size_t at = back ? e.pos - 1 : e.pos;
        on_delete(i, doc.text[at]);
        doc.text.erase(doc.text.begin() + static_cast<std::ptrdiff_t>(at));
        doc.origin_event.erase(doc.origin_event.begin() +
                               static_cast<std::ptrdiff_t>(at));
        break;
      }
      case EventKind::kCursorMove:
        if (e.pos > len) out_of_range();
        break;
    }
  }
  return doc;
}

}  // namespace

std::string_view event_kind_name(EventKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<EventKind> parse_event_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<EventKind>(i);
  }
  return std::nullopt;
}

Session parse_log(std::string_view text) {
  Session session;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (is_blank(line)) continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      malformed(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!have_header) {
      have_header = true;
      // Header-less logs take the default session settings.
      if (!record.is_object() || record.contains("schema")) {
        parse_header(record, session, line_no);
        continue;
      }
    }
    KeystrokeEvent event = parse_event(record, session.privacy_mode, line_no);
    if (!session.events.empty() && event.t < session.events.back().t) {
      throw RecordError(ErrorCode::kNonMonotonicTimestamp, line_no,
                        "timestamp " + std::to_string(event.t) +
                            " precedes " +
                            std::to_string(session.events.back().t));
    }
    session.events.push_back(std::move(event));
  }
  if (session.events.empty()) {
    throw Error(ErrorCode::kEmptyLog, "log contains no events");
  }
  return session;
}

std::string serialize_log(const Session& session) {
  std::string out;
  nlohmann::ordered_json header;
  header["schema"] = kSessionSchema;
  header["session"] = session.session_id;
  header["writer"] = session.writer_id;
  header["r"] = session.resolution_ms;
  header["privacy"] = session.privacy_mode;
  out += header.dump();
  out += '\n';
  for (const KeystrokeEvent& e : session.events) {
    nlohmann::ordered_json record;
    record["t"] = e.t;
    record["kind"] = event_kind_name(e.kind);
    if (e.payload) {
      std::string utf8;
      append_utf8(utf8, *e.payload);
      record["payload"] = utf8;
    }
    record["pos"] = e.pos;
    if (e.cbin) record["cbin"] = *e.cbin;
    out += record.dump();
    out += '\n';
  }
  return out;
}

IkiSeries compute_ikis(const Session& session) {
  const auto& events = session.events;
  if (events.size() < 2) {
    throw Error(ErrorCode::kEmptyLog, "need at least 2 events for intervals");
  }
  IkiSeries series;
  series.values.reserve(events.size() - 1);
  series.index_map.reserve(events.size() - 1);
  for (std::size_t i = 1; i < events.size(); ++i) {
    series.values.push_back(events[i].t - events[i - 1].t);
    series.index_map.push_back(i);
  }
  return series;
}

Millis quantize(Millis iki, int resolution_ms) {
  if (resolution_ms < 1) {
    throw Error(ErrorCode::kInvalidResolution,
                "resolution must be at least 1 ms");
  }
  if (iki < 0) {
    throw Error(ErrorCode::kInvalidParameters, "interval must be non-negative");
  }
  return iki / resolution_ms * resolution_ms;
}

Session quantize_session(const Session& session, int resolution_ms) {
  Session out = session;
  out.resolution_ms = resolution_ms;
  if (out.events.empty()) return out;
  out.events[0].t = quantize(session.events[0].t, resolution_ms);
  for (std::size_t i = 1; i < out.events.size(); ++i) {
    out.events[i].t = out.events[i - 1].t +
                      quantize(session.events[i].t - session.events[i - 1].t,
                               resolution_ms);
  }
  return out;
}

ReconstructedText reconstruct_text(const Session& session) {
  if (session.privacy_mode) {
    throw Error(ErrorCode::kPrivacyModeActive,
                "text cannot be reconstructed from a privacy-mode session");
  }
  return replay(session, [](std::size_t, char32_t) {});
}

std::vector<std::optional<char32_t>> deleted_characters(const Session& session) {
  std::vector<std::optional<char32_t>> removed(session.events.size());
  if (session.privacy_mode) return removed;
  replay(session, [&](std::size_t i, char32_t c) { removed[i] = c; });
  return removed;
}

std::string to_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) append_utf8(out, c);
  return out;
}

std::u32string from_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      extra = 1;
    } else if ((lead & 0xF0) == 0xE0) {
      cp = lead & 0x0F;
      extra = 2;
    } else {
      cp = lead & 0x07;
      extra = 3;
    }
    ++i;
    for (int k = 0; k < extra && i < text.size(); ++k, ++i) {
      cp = (cp << 6) | (static_cast<unsigned char>(text[i]) & 0x3F);
    }
    out.push_back(cp);
  }
  return out;
}

}  // namespace cogsig
