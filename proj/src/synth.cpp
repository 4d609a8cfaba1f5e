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

#include "cogsig/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "cogsig/error.hpp"
#include "cogsig/rng.hpp"
#include "json.hpp"

namespace cogsig {
namespace {

// ---------------------------------------------------------------------------
// Vocabulary and text

constexpr std::size_t kVocabSize = 2500;
constexpr std::size_t kSuccessors = 6;
constexpr double kZipfExponent = 1.05;
constexpr double kSuccessorProbability = 0.55;
constexpr std::uint64_t kVocabularySeed = 0xC0C0'51'6ull;

struct Vocabulary {
  std::vector<std::string> words;
  std::vector<double> cdf;
  std::vector<std::array<std::uint32_t, kSuccessors>> successors;

  std::uint32_t sample(Rng& rng) const {
    const double u = rng.uniform() * cdf.back();
    return static_cast<std::uint32_t>(
        std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
  }
};

const Vocabulary& vocabulary() {
  static const Vocabulary vocab = [] {
    static constexpr std::array<std::string_view, 26> kOnsets = {
        "b", "c", "d", "f", "g", "h", "j", "k", "l", "m", "n", "p", "r",
        "s", "t", "v", "w", "z", "br", "cr", "dr", "pl", "st", "tr", "ch", "th"};
    static constexpr std::array<std::string_view, 8> kVowels = {
        "a", "e", "i", "o", "u", "ai", "ea", "ou"};
    static constexpr std::array<std::string_view, 7> kCodas = {
        "", "n", "r", "s", "t", "l", "m"};
    Rng rng(kVocabularySeed);
    Vocabulary v;
    std::set<std::string> seen;
    while (v.words.size() < kVocabSize) {
      // Frequent (low-rank) words are shorter.
      const std::size_t rank = v.words.size();
      const std::int64_t max_syllables = rank < 60 ? 1 : rank < 600 ? 2 : 3;
      const std::int64_t syllables = rng.uniform_int(1, max_syllables);
      std::string w;
      for (std::int64_t s = 0; s < syllables; ++s) {
        w += kOnsets[static_cast<std::size_t>(rng.uniform_int(0, kOnsets.size() - 1))];
        w += kVowels[static_cast<std::size_t>(rng.uniform_int(0, kVowels.size() - 1))];
        w += kCodas[static_cast<std::size_t>(rng.uniform_int(0, kCodas.size() - 1))];
      }
      if (seen.insert(w).second) v.words.push_back(std::move(w));
    }
    double acc = 0.0;
    for (std::size_t r = 0; r < kVocabSize; ++r) {
      acc += 1.0 / std::pow(static_cast<double>(r + 1), kZipfExponent);
      v.cdf.push_back(acc);
    }
    v.successors.resize(kVocabSize);
    for (auto& list : v.successors) {
      for (auto& next : list) next = v.sample(rng);
    }
    return v;
  }();
  return vocab;
}

// ---------------------------------------------------------------------------
// Typing engine

struct Layout {
  std::u32string text;
  ComplexityProfile profile;
  std::vector<std::size_t> token_end;  // raw token extent [begin, end)
  std::vector<bool> sentence_start;
  std::vector<bool> paragraph_start;
  std::vector<double> z;  // standardized surprisal
  std::vector<std::ptrdiff_t> token_at;  // per char: token starting here or -1
};

Layout layout_text(std::string_view utf8, const NgramModel& model) {
  Layout l;
  l.text = from_utf8(utf8);
  l.profile = profile_document(model, std::u32string_view(l.text));
  const auto& tokens = l.profile.tokens;
  const std::size_t n = tokens.size();
  l.token_at.assign(l.text.size(), -1);
  l.token_end.resize(n);
  l.sentence_start.resize(n);
  l.paragraph_start.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t e = tokens[i].begin;
    while (e < l.text.size() && l.text[e] != U' ' && l.text[e] != U'\n') ++e;
    l.token_end[i] = e;
    l.token_at[tokens[i].begin] = static_cast<std::ptrdiff_t>(i);
    l.sentence_start[i] = i == 0 || l.text[l.token_end[i - 1] - 1] == U'.';
    l.paragraph_start[i] = i > 0 && l.text[tokens[i].begin - 1] == U'\n';
  }
  double mean = 0.0;
  for (const auto& w : l.profile.per_word) mean += w.surprisal_bits;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (const auto& w : l.profile.per_word) {
    var += (w.surprisal_bits - mean) * (w.surprisal_bits - mean);
  }
  const double sd = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
  for (const auto& w : l.profile.per_word) {
    l.z.push_back(sd > 0.0 ? (w.surprisal_bits - mean) / sd : 0.0);
  }
  return l;
}

class Typist {
 public:
  Typist(const SynthConfig& config, std::uint64_t stream)
      : config_(config), rng_(derive_seed(config.seed, stream)) {
    out_.session.writer_id = config.writer_id;
    out_.session.session_id = config.session_id;
    out_.session.resolution_ms = config.resolution_ms;
    out_.session.privacy_mode = false;
  }

  Rng& rng() { return rng_; }

  double motor() {
    const double m = config_.motor_median_ms;
    return motor_scale_ * std::clamp(rng_.loglogistic(m, config_.motor_shape),
                                     m / kMotorBand, m * kMotorBand);
  }

  void set_motor_scale(double scale) { motor_scale_ = scale; }

  double planning_pause() {
    for (;;) {
      const double p = rng_.lognormal(1800.0, 0.45);
      if (p >= 1000.0 && p <= 5000.0) return p;
    }
  }

  void type(char32_t c, double iki, Phase phase) {
    KeystrokeEvent e;
    e.kind = c == U'\n' ? EventKind::kEnter : EventKind::kInsert;
    if (c != U'\n') e.payload = c;
    e.pos = length_++;
    push(e, iki, phase);
  }

  void backspace(double iki, Phase phase) {
    KeystrokeEvent e;
    e.kind = EventKind::kBackspace;
    e.pos = length_--;
    push(e, iki, phase);
  }

  char32_t wrong_letter(char32_t correct) {
    for (;;) {
      const auto c = static_cast<char32_t>(U'a' + rng_.uniform_int(0, 25));
      if (c != correct) return c;
    }
  }

  std::size_t next_event() const { return out_.session.events.size(); }
  void mark_planning() { out_.truth.planning_events.push_back(next_event()); }

  SynthSession finish() { return std::move(out_); }

  static constexpr double kMotorBand = 1.7;

 private:
  void push(KeystrokeEvent e, double iki, Phase phase) {
    if (!out_.session.events.empty()) {
      t_ += std::max<Millis>(1, static_cast<Millis>(std::llround(iki)));
    }
    e.t = t_;
    out_.session.events.push_back(e);
    out_.truth.phases.push_back(phase);
  }

  const SynthConfig& config_;
  Rng rng_;
  SynthSession out_;
  Millis t_ = 0;
  std::size_t length_ = 0;
  double motor_scale_ = 1.0;
};

// Per-token edit plan: offset inside the token at which a typo fix or a
// revision episode happens (0 = none; offset 0 is never edited so the word
// onset event survives).
struct EditPlan {
  std::vector<std::size_t> typo_at;
  std::vector<std::size_t> revision_at;
};

EditPlan plan_edits(const Layout& l, Rng& rng, double typo_rate,
                    double revision_rate) {
  const std::size_t n = l.profile.tokens.size();
  EditPlan plan{std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0)};
  auto split_point = [&](std::size_t i) -> std::size_t {
    const std::size_t len = l.token_end[i] - l.profile.tokens[i].begin;
    return len >= 2 ? static_cast<std::size_t>(
                          rng.uniform_int(1, static_cast<std::int64_t>(len) - 1))
                    : 0;
  };
  std::size_t sentence_begin = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == n || (i > 0 && l.sentence_start[i])) {
      if (i > sentence_begin && rng.bernoulli(revision_rate)) {
        const auto pick = static_cast<std::size_t>(rng.uniform_int(
            static_cast<std::int64_t>(sentence_begin), static_cast<std::int64_t>(i) - 1));
        plan.revision_at[pick] = split_point(pick);
      }
      sentence_begin = i;
    }
    if (i < n && rng.bernoulli(typo_rate) && plan.revision_at[i] == 0) {
      plan.typo_at[i] = split_point(i);
    }
  }
  return plan;
}

void validate(const SynthConfig& config) {
  if (config.words < 1 || !(config.motor_median_ms > 0.0) ||
      !(config.motor_shape > 0.0) || config.resolution_ms < 1 ||
      config.planning_rate < 0.0 || config.planning_rate > 1.0 ||
      config.revision_rate < 0.0 || config.revision_rate > 1.0 ||
      config.typo_rate < 0.0 || config.typo_rate > 1.0 ||
      !(config.clc_gain >= 0.0) || !std::isfinite(config.clc_gain)) {
    throw Error(ErrorCode::kInvalidConfig, "invalid synthesizer configuration");
  }
}

constexpr double kMidSentencePlanningRate = 0.02;

// Types token characters from `offset` on, applying a planned typo fix or
// revision episode. `onset_iki` is the interval before the first character
// when offset == 0.
void type_token(Typist& typist, const Layout& l, std::size_t i, double onset_iki,
                Phase onset_phase, std::size_t typo_at, std::size_t revision_at) {
  const std::size_t begin = l.profile.tokens[i].begin;
  const std::size_t end = l.token_end[i];
  Phase phase = Phase::kTranslating;
  for (std::size_t p = begin; p < end; ++p) {
    const std::size_t offset = p - begin;
    const char32_t c = l.text[p];
    double iki = offset == 0 ? onset_iki : typist.motor();
    if (offset != 0 && offset == typo_at) {
      typist.type(typist.wrong_letter(c), iki, Phase::kTranslating);
      typist.backspace(typist.motor(), Phase::kTranslating);
      iki = typist.motor();
    }
    if (offset != 0 && offset == revision_at) {
      const auto m = static_cast<std::size_t>(typist.rng().uniform_int(2, 6));
      for (std::size_t k = 0; k < m; ++k) {
        typist.type(typist.wrong_letter(c), k == 0 ? iki : typist.motor(),
                    Phase::kTranslating);
      }
      const double evaluate = std::min(900.0, typist.rng().lognormal(450.0, 0.3));
      typist.backspace(evaluate, Phase::kRevising);
      for (std::size_t k = 1; k < m; ++k) {
        typist.backspace(typist.motor() * 0.6, Phase::kRevising);
      }
      iki = typist.motor() * 1.5;
      phase = Phase::kRevising;
    }
    typist.type(c, iki, offset == 0 ? onset_phase : phase);
  }
}

// Types the whitespace that follows token i, if any.
void type_separator(Typist& typist, const Layout& l, std::size_t i) {
  for (std::size_t p = l.token_end[i]; p < l.text.size(); ++p) {
    if (l.token_at[p] >= 0) break;
    typist.type(l.text[p], typist.motor(), Phase::kTranslating);
  }
}

double decile_cutoff(const Layout& l, double q) {
  std::vector<double> s;
  for (const auto& w : l.profile.per_word) s.push_back(w.surprisal_bits);
  std::sort(s.begin(), s.end());
  const auto idx = static_cast<std::size_t>(q * static_cast<double>(s.size() - 1));
  return s[idx];
}

}  // namespace

std::string generate_text(std::uint64_t seed, std::size_t words) {
  const Vocabulary& vocab = vocabulary();
  Rng rng(derive_seed(seed, 0x7E47));
  std::string out;
  std::int64_t sentence_target = rng.uniform_int(6, 20);
  std::int64_t paragraph_target = rng.uniform_int(3, 6);
  std::int64_t in_sentence = 0;
  std::int64_t in_paragraph = 0;
  bool new_paragraph = false;
  std::optional<std::uint32_t> prev;
  for (std::size_t i = 0; i < words; ++i) {
    std::uint32_t id = prev && rng.bernoulli(kSuccessorProbability)
                           ? vocab.successors[*prev][static_cast<std::size_t>(
                                 rng.uniform_int(0, kSuccessors - 1))]
                           : vocab.sample(rng);
    prev = id;
    std::string word = vocab.words[id];
    if (in_sentence == 0) word[0] = static_cast<char>(word[0] - 'a' + 'A');
    if (i > 0) out += new_paragraph ? '\n' : ' ';
    new_paragraph = false;
    out += word;
    ++in_sentence;
    if (in_sentence == sentence_target || i + 1 == words) {
      out += '.';
      in_sentence = 0;
      sentence_target = rng.uniform_int(6, 20);
      if (++in_paragraph == paragraph_target) {
        new_paragraph = true;
        in_paragraph = 0;
        paragraph_target = rng.uniform_int(3, 6);
      }
    } else if (rng.bernoulli(0.08)) {
      out += ',';
    }
  }
  return out;
}

const std::string& reference_corpus() {
  static const std::string corpus =
      generate_text(kReferenceCorpusSeed, kReferenceCorpusWords);
  return corpus;
}

const NgramModel& reference_model() {
  static const NgramModel model = NgramModel::train(reference_corpus());
  return model;
}

std::string_view attack_name(Attack attack) {
  switch (attack) {
    case Attack::kNone: return "none";
    case Attack::kNaiveSlowdown: return "naive_slowdown";
    case Attack::kPauseMap: return "pause_map";
    case Attack::kRehearsedProfile: return "rehearsed_profile";
  }
  return "none";
}

std::optional<Attack> parse_attack(std::string_view name) {
  for (Attack a : {Attack::kNone, Attack::kNaiveSlowdown, Attack::kPauseMap,
                   Attack::kRehearsedProfile}) {
    if (attack_name(a) == name) return a;
  }
  return std::nullopt;
}

SynthSession synth_composition(const SynthConfig& config, std::string_view text,
                               const NgramModel& model) {
  validate(config);
  const Layout l = layout_text(text, model);
  Typist typist(config, 0xC0);
  const EditPlan plan =
      plan_edits(l, typist.rng(), config.typo_rate, config.revision_rate);
  for (std::size_t i = 0; i < l.profile.tokens.size(); ++i) {
    double onset = 0.0;
    Phase phase = Phase::kTranslating;
    if (i > 0) {
      const bool planning = l.paragraph_start[i] ||
                            (l.sentence_start[i] && typist.rng().bernoulli(config.planning_rate)) ||
                            typist.rng().bernoulli(kMidSentencePlanningRate);
      const double base = planning ? typist.planning_pause() : typist.motor();
      onset = base * std::exp(config.clc_gain * l.z[i]);
      if (planning) {
        phase = Phase::kPlanning;
        typist.mark_planning();
      }
    }
    type_token(typist, l, i, onset, phase, plan.typo_at[i], plan.revision_at[i]);
    type_separator(typist, l, i);
  }
  return typist.finish();
}

SynthSession synth_transcription(const SynthConfig& config, std::string_view text,
                                 const NgramModel& model) {
  validate(config);
  const Layout l = layout_text(text, model);
  Typist typist(config, 0x7A);
  const EditPlan plan = plan_edits(l, typist.rng(), config.typo_rate, 0.0);
  const double m = config.motor_median_ms;
  for (std::size_t i = 0; i < l.profile.tokens.size(); ++i) {
    const double onset =
        std::clamp(typist.motor() * std::exp(config.clc_gain * l.z[i]),
                   m / Typist::kMotorBand, m * Typist::kMotorBand);
    type_token(typist, l, i, onset, Phase::kTranslating, plan.typo_at[i], 0);
    type_separator(typist, l, i);
  }
  return typist.finish();
}

SynthSession synth_forgery(const SynthConfig& config, std::string_view text,
                           const NgramModel& model) {
  validate(config);
  if (config.attack == Attack::kNone) {
    throw Error(ErrorCode::kInvalidConfig, "forgery needs an attack");
  }
  const Layout l = layout_text(text, model);
  Typist typist(config, 0xF0 + static_cast<std::uint64_t>(config.attack));
  const bool rehearsed = config.attack == Attack::kRehearsedProfile;
  const EditPlan plan = plan_edits(l, typist.rng(), config.typo_rate,
                                   rehearsed ? 0.1 * config.revision_rate : 0.0);
  const double cutoff = decile_cutoff(l, 0.9);
  const double m = config.motor_median_ms;
  constexpr double kSlowdown = 2.0;
  if (config.attack == Attack::kNaiveSlowdown) typist.set_motor_scale(kSlowdown);

  const double scale = config.attack == Attack::kNaiveSlowdown ? kSlowdown : 1.0;
  for (std::size_t i = 0; i < l.profile.tokens.size(); ++i) {
    double onset = std::clamp(typist.motor() * std::exp(config.clc_gain * l.z[i]),
                              scale * m / Typist::kMotorBand,
                              scale * m * Typist::kMotorBand);
    Phase phase = Phase::kTranslating;
    switch (config.attack) {
      case Attack::kNaiveSlowdown:
        if (typist.rng().bernoulli(0.3)) onset += typist.rng().lognormal(600.0, 0.5);
        break;
      case Attack::kPauseMap:
      case Attack::kRehearsedProfile:
        if (i > 0 && l.profile.per_word[i].surprisal_bits >= cutoff) {
          onset = rehearsed ? 1600.0 * typist.rng().uniform(0.97, 1.03)
                            : std::clamp(typist.rng().lognormal(1600.0, 0.35),
                                         1000.0, 5000.0);
          phase = Phase::kPlanning;
          typist.mark_planning();
        }
        break;
      case Attack::kNone:
        break;
    }
    type_token(typist, l, i, onset, phase, plan.typo_at[i], plan.revision_at[i]);
    type_separator(typist, l, i);
  }
  return typist.finish();
}

std::string serialize_ground_truth(const SynthSession& synth) {
  nlohmann::ordered_json j;
  j["session"] = synth.session.session_id;
  std::vector<std::string> phases;
  phases.reserve(synth.truth.phases.size());
  for (Phase p : synth.truth.phases) phases.emplace_back(phase_name(p));
  j["phases"] = phases;
  j["planning_events"] = synth.truth.planning_events;
  return j.dump() + "\n";
}

WriterProfile draw_writer(std::uint64_t writer_seed, const PopulationParams& params) {
  Rng rng(derive_seed(writer_seed, 0xA11CE));
  WriterProfile w;
  w.seed = writer_seed;
  w.writer_id = "writer-" + std::to_string(writer_seed);
  w.motor_median_ms = rng.uniform(params.motor_median_lo_ms, params.motor_median_hi_ms);
  w.motor_shape = params.motor_shape;
  w.composition_gain =
      rng.normal(params.composition_gain_mean, params.composition_gain_writer_sd);
  w.transcription_gain =
      rng.normal(params.transcription_gain_mean, params.transcription_gain_writer_sd);
  w.planning_rate = rng.uniform(params.planning_rate_lo, params.planning_rate_hi);
  w.revision_rate = rng.uniform(params.revision_rate_lo, params.revision_rate_hi);
  return w;
}

SynthConfig session_config(const WriterProfile& writer, SessionKind kind,
                           std::uint64_t session_seed, std::size_t words,
                           Attack attack, const PopulationParams& params) {
  SynthConfig c;
  c.seed = derive_seed(writer.seed, session_seed);
  Rng rng(derive_seed(c.seed, 0x5E55));
  c.words = words;
  c.motor_median_ms = writer.motor_median_ms;
  c.motor_shape = writer.motor_shape;
  c.planning_rate = writer.planning_rate;
  c.revision_rate = writer.revision_rate;
  c.writer_id = writer.writer_id;
  std::string kind_tag;
  switch (kind) {
    case SessionKind::kComposition:
      c.clc_gain = std::max(
          1e-4, rng.normal(writer.composition_gain, params.composition_gain_session_sd));
      c.typo_rate = params.typo_rate;
      kind_tag = "composition";
      break;
    case SessionKind::kTranscription:
    case SessionKind::kForgery:
      c.clc_gain = std::max(
          0.0, rng.normal(writer.transcription_gain, params.transcription_gain_session_sd));
      c.typo_rate = params.transcription_typo_rate;
      c.attack = kind == SessionKind::kForgery ? attack : Attack::kNone;
      kind_tag = kind == SessionKind::kForgery ? std::string(attack_name(attack))
                                               : "transcription";
      break;
  }
  c.session_id = writer.writer_id + "-" + kind_tag + "-" + std::to_string(session_seed);
  return c;
}

SynthSession synthesize(SessionKind kind, const SynthConfig& config,
                        const NgramModel& model) {
  const std::string text = generate_text(config.seed, config.words);
  switch (kind) {
    case SessionKind::kComposition: return synth_composition(config, text, model);
    case SessionKind::kTranscription: return synth_transcription(config, text, model);
    case SessionKind::kForgery: return synth_forgery(config, text, model);
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown session kind");
}

}  // namespace cogsig
