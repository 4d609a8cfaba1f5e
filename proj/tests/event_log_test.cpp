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

#include <functional>
#include <random>
#include <string>

#include "cogsig/error.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace cogsig {
namespace {

constexpr char kHeader[] =
    R"({"schema":"cogsig-v1","session":"s1","writer":"w1","r":5,"privacy":false})";

KeystrokeEvent insert(Millis t, char32_t c, std::size_t pos) {
  KeystrokeEvent e;
  e.t = t;
  e.kind = EventKind::kInsert;
  e.payload = c;
  e.pos = pos;
  return e;
}

KeystrokeEvent edit(Millis t, EventKind kind, std::size_t pos) {
  KeystrokeEvent e;
  e.t = t;
  e.kind = kind;
  e.pos = pos;
  return e;
}

Session session_of(std::vector<KeystrokeEvent> events) {
  Session s;
  s.events = std::move(events);
  return s;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidParameters;
}

TEST(ParseLogTest, MinimalLogWithoutHeader) {
  const Session s = parse_log(
      "{\"t\":0,\"kind\":\"insert\",\"payload\":\"a\",\"pos\":0}\n"
      "{\"t\":150,\"kind\":\"insert\",\"payload\":\"b\",\"pos\":1}");
  ASSERT_EQ(s.events.size(), 2u);
  EXPECT_EQ(s.events[1].t, 150);
  EXPECT_EQ(*s.events[1].payload, U'b');
  EXPECT_EQ(s.resolution_ms, 5);
  EXPECT_FALSE(s.privacy_mode);
}

TEST(ParseLogTest, HeaderFields) {
  const Session s = parse_log(std::string(kHeader) +
                              "\n{\"t\":3,\"kind\":\"enter\",\"pos\":0}\n\n");
  EXPECT_EQ(s.session_id, "s1");
  EXPECT_EQ(s.writer_id, "w1");
  ASSERT_EQ(s.events.size(), 1u);
  EXPECT_EQ(s.events[0].kind, EventKind::kEnter);
  EXPECT_FALSE(s.events[0].payload.has_value());
}

TEST(ParseLogTest, DecreasingTimestamp) {
  const std::string log = std::string(kHeader) +
                          "\n{\"t\":10,\"kind\":\"insert\",\"payload\":\"a\",\"pos\":0}"
                          "\n{\"t\":9,\"kind\":\"insert\",\"payload\":\"b\",\"pos\":1}";
  try {
    parse_log(log);
    FAIL();
  } catch (const RecordError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMonotonicTimestamp);
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseLogTest, EmptyInput) {
  EXPECT_EQ(code_of([] { parse_log(""); }), ErrorCode::kEmptyLog);
  EXPECT_EQ(code_of([] { parse_log(std::string(kHeader) + "\n"); }),
            ErrorCode::kEmptyLog);
}

TEST(ParseLogTest, MalformedRecordsCarryLineNumbers) {
  const std::vector<std::string> bad = {
      R"({"t":0,"kind":"insert","pos":0})",                        // no payload
      R"({"t":0,"kind":"backspace","payload":"a","pos":1})",       // payload on delete
      R"({"t":0,"kind":"insert","payload":"ab","pos":0})",         // two characters
      R"({"t":-1,"kind":"insert","payload":"a","pos":0})",         // negative time
      R"({"t":0.5,"kind":"insert","payload":"a","pos":0})",        // fractional time
      R"({"t":0,"kind":"paste","payload":"a","pos":0})",           // unknown kind
      R"({"t":0,"kind":"insert","payload":"a","pos":-2})",         // negative pos
      R"({"t":0,"kind":"insert","payload":"a","pos":0,"cbin":3})",  // cbin outside privacy
      R"({"t":0,"kind":"insert","payload":"a","pos":0,"x":1})",     // unknown field
      R"(not json)",
  };
  for (const std::string& line : bad) {
    try {
      parse_log(std::string(kHeader) + "\n" + line);
      ADD_FAILURE() << line;
    } catch (const RecordError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedRecord) << line;
      EXPECT_EQ(e.line(), 2u) << line;
    }
  }
}

TEST(ParseLogTest, PrivacyModeRules) {
  const std::string header =
      R"({"schema":"cogsig-v1","session":"s","writer":"w","r":5,"privacy":true})";
  const Session s = parse_log(header + "\n" +
                              R"({"t":0,"kind":"insert","pos":0,"cbin":7})");
  EXPECT_EQ(*s.events[0].cbin, 7);
  EXPECT_EQ(code_of([&] {
              parse_log(header + "\n" + R"({"t":0,"kind":"insert","payload":"a","pos":0})");
            }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([&] {
              parse_log(header + "\n" + R"({"t":0,"kind":"insert","pos":0,"cbin":8})");
            }),
            ErrorCode::kMalformedRecord);
}

TEST(ParseLogTest, BadHeader) {
  EXPECT_EQ(code_of([] {
              parse_log(R"({"schema":"cogsig-v2","session":"s","writer":"w","r":5,"privacy":false})"
                        "\n{\"t\":0,\"kind\":\"enter\",\"pos\":0}");
            }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] {
              parse_log(R"({"schema":"cogsig-v1","session":"s","writer":"w","r":0,"privacy":false})"
                        "\n{\"t\":0,\"kind\":\"enter\",\"pos\":0}");
            }),
            ErrorCode::kMalformedRecord);
}

TEST(SerializeLogTest, RoundTripOnRandomSessions) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Session s;
    s.session_id = "sess-" + std::to_string(trial);
    s.writer_id = "w\"" + std::to_string(trial % 7);
    s.resolution_ms = 1 + static_cast<int>(rng() % 50);
    s.privacy_mode = rng() % 2 == 0;
    Millis t = 0;
    const std::size_t n = 1 + rng() % 60;
    for (std::size_t i = 0; i < n; ++i) {
      KeystrokeEvent e;
      t += static_cast<Millis>(rng() % 400);
      e.t = t;
      e.kind = static_cast<EventKind>(rng() % 5);
      e.pos = rng() % 100;
      if (e.kind == EventKind::kInsert && !s.privacy_mode) {
        static const char32_t kChars[] = {U'a', U'Z', U' ', U'"', U'\\', U'é',
                                          U'中', U'\U0001F600'};
        e.payload = kChars[rng() % 8];
      }
      if (s.privacy_mode && rng() % 4 == 0) e.cbin = static_cast<int>(rng() % 8);
      s.events.push_back(e);
    }
    EXPECT_EQ(parse_log(serialize_log(s)), s);
  }
}

TEST(ComputeIkisTest, Examples) {
  const Session s = session_of({insert(0, U'a', 0), insert(150, U'b', 1), insert(400, U'c', 2)});
  const IkiSeries ikis = compute_ikis(s);
  EXPECT_EQ(ikis.values, (std::vector<Millis>{150, 250}));
  EXPECT_EQ(ikis.index_map, (std::vector<std::size_t>{1, 2}));

  EXPECT_EQ(compute_ikis(session_of({insert(0, U'a', 0), insert(0, U'b', 1)})).values,
            std::vector<Millis>{0});
  EXPECT_EQ(code_of([] { compute_ikis(session_of({insert(0, U'a', 0)})); }),
            ErrorCode::kEmptyLog);
}

TEST(QuantizeTest, Examples) {
  EXPECT_EQ(quantize(123, 5), 120);
  EXPECT_EQ(quantize(120, 5), 120);
  EXPECT_EQ(quantize(4, 5), 0);
  EXPECT_EQ(quantize(0, 1), 0);
  EXPECT_EQ(code_of([] { quantize(10, 0); }), ErrorCode::kInvalidResolution);
}

TEST(QuantizeTest, IdempotentAndBounded) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100000; ++i) {
    const auto x = static_cast<Millis>(rng() % 10'000'000);
    const int r = 1 + static_cast<int>(rng() % 1000);
    const Millis q = quantize(x, r);
    EXPECT_EQ(quantize(q, r), q);
    EXPECT_LE(q, x);
    EXPECT_LT(x - q, r);
    EXPECT_EQ(q % r, 0);
  }
}

TEST(QuantizeTest, CognitivePausesLoseUnderHalfPercentAtFiveMs) {
  for (Millis p = 1000; p <= 20000; ++p) {
    EXPECT_LT(static_cast<double>(p - quantize(p, 5)) / static_cast<double>(p), 0.005);
  }
}

TEST(QuantizeSessionTest, IntervalsAreQuantized) {
  const Session s = session_of({insert(3, U'a', 0), insert(157, U'b', 1), insert(1161, U'c', 2)});
  const Session q = quantize_session(s, 5);
  EXPECT_EQ(q.resolution_ms, 5);
  for (Millis v : compute_ikis(q).values) EXPECT_EQ(v % 5, 0);
  EXPECT_EQ(compute_ikis(q).values, (std::vector<Millis>{150, 1000}));
}

TEST(ReconstructTextTest, Examples) {
  EXPECT_EQ(reconstruct_text(session_of({insert(0, U'a', 0), insert(1, U'b', 1),
                                         edit(2, EventKind::kBackspace, 2)}))
                .text,
            U"a");
  const ReconstructedText doc = reconstruct_text(
      session_of({insert(0, U'a', 0), insert(1, U'c', 1), insert(2, U'b', 1)}));
  EXPECT_EQ(doc.text, U"abc");
  EXPECT_EQ(doc.origin_event, (std::vector<std::size_t>{0, 2, 1}));

  Session privacy = session_of({insert(0, U'a', 0)});
  privacy.privacy_mode = true;
  EXPECT_EQ(code_of([&] { reconstruct_text(privacy); }), ErrorCode::kPrivacyModeActive);
}

TEST(ReconstructTextTest, PositionOutOfRange) {
  EXPECT_EQ(code_of([] { reconstruct_text(session_of({insert(0, U'a', 1)})); }),
            ErrorCode::kPositionOutOfRange);
  EXPECT_EQ(code_of([] {
              reconstruct_text(session_of({insert(0, U'a', 0), edit(1, EventKind::kDelete, 1)}));
            }),
            ErrorCode::kPositionOutOfRange);
  EXPECT_EQ(code_of([] { reconstruct_text(session_of({edit(0, EventKind::kBackspace, 0)})); }),
            ErrorCode::kPositionOutOfRange);
}

TEST(ReconstructTextTest, MatchesStringEditOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<KeystrokeEvent> events;
    std::size_t len = 0;
    const std::size_t n = 1 + rng() % 100;
    for (std::size_t i = 0; i < n; ++i) {
      const auto t = static_cast<Millis>(i * 10);
      switch (rng() % 5) {
        case 0:
        case 1:
          events.push_back(insert(t, static_cast<char32_t>(U'a' + rng() % 26), rng() % (len + 1)));
          ++len;
          break;
        case 2:
          if (len == 0) continue;
          events.push_back(edit(t, EventKind::kBackspace, 1 + rng() % len));
          --len;
          break;
        case 3:
          if (len == 0) continue;
          events.push_back(edit(t, EventKind::kDelete, rng() % len));
          --len;
          break;
        default:
          events.push_back(edit(t, rng() % 2 ? EventKind::kCursorMove : EventKind::kEnter,
                                rng() % (len + 1)));
          if (events.back().kind == EventKind::kEnter) ++len;
          break;
      }
    }
    if (events.empty()) continue;
    const Session s = session_of(events);
    const ReconstructedText doc = reconstruct_text(s);
    ASSERT_EQ(doc.text, oracle::replay(s)) << "trial " << trial;
    ASSERT_EQ(doc.origin_event.size(), doc.text.size());
    for (std::size_t i = 0; i < doc.text.size(); ++i) {
      const KeystrokeEvent& origin = s.events[doc.origin_event[i]];
      ASSERT_TRUE(is_insertion(origin.kind));
      ASSERT_EQ(origin.kind == EventKind::kEnter ? U'\n' : *origin.payload, doc.text[i]);
    }
  }
}

TEST(Utf8Test, RoundTrip) {
  const std::u32string text = U"café 中文 \U0001F600";
  EXPECT_EQ(from_utf8(to_utf8(text)), text);
}

}  // namespace
}  // namespace cogsig
