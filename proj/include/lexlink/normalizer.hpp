// Copyright 2026 The lexlink Authors
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

#ifndef LEXLINK_NORMALIZER_HPP
#define LEXLINK_NORMALIZER_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexlink/common.hpp"

namespace lexlink {

// Answers "is this string a known lemma?" for one side of the dictionary:
// taxonomy lemmas for the target language, headwords for the source.
using PresenceOracle = std::function<bool(std::string_view)>;
using Lemmatizer = std::function<std::optional<std::string>(std::string_view)>;

namespace detail {

struct SuffixRule {
  std::string_view strip;
  std::string_view append;
};

inline std::optional<std::string> apply_rules(
    std::string_view form, const PresenceOracle& lookup,
    std::initializer_list<SuffixRule> rules) {
  if (form.empty()) return std::nullopt;
  if (lookup(form)) return std::string(form);
  for (const auto& rule : rules) {
    if (form.size() <= rule.strip.size() || !text::ends_with(form, rule.strip)) {
      continue;
    }
    std::string candidate(form.substr(0, form.size() - rule.strip.size()));
    candidate += rule.append;
    if (lookup(candidate)) return candidate;
  }
  return std::nullopt;
}

}  // namespace detail

// Plural stripping for the taxonomy language. Rules are tried in order:
// -s, -es, -ies -> -y, -ves -> -f, -ves -> -fe.
inline std::optional<std::string> lemmatize_target(std::string_view form,
                                                   const PresenceOracle& lookup) {
  return detail::apply_rules(form, lookup,
                             {{"s", ""},
                              {"es", ""},
                              {"ies", "y"},
                              {"ves", "f"},
                              {"ves", "fe"}});
}

// Naive noun plural stripping for the source language, validated against the
// dictionary's own headwords: -s, -x, -aux -> -al.
inline std::optional<std::string> lemmatize_source(std::string_view form,
                                                   const PresenceOracle& lookup) {
  return detail::apply_rules(form, lookup,
                             {{"s", ""}, {"x", ""}, {"aux", "al"}});
}

enum class ResolutionKind {
  kDirect,
  kMorphological,
  kCompound,
  kComponents,
  kUnresolved,
};

inline std::string_view to_string(ResolutionKind k) {
  switch (k) {
    case ResolutionKind::kDirect: return "direct";
    case ResolutionKind::kMorphological: return "morphological";
    case ResolutionKind::kCompound: return "compound";
    case ResolutionKind::kComponents: return "components";
    case ResolutionKind::kUnresolved: return "unresolved";
  }
  return "unresolved";
}

struct ResolvedPhrase {
  std::string original;
  std::vector<std::string> resolved;
  ResolutionKind kind = ResolutionKind::kUnresolved;

  friend bool operator==(const ResolvedPhrase&, const ResolvedPhrase&) = default;
};

struct PhraseToken {
  std::string text;
  // Inside (...) or [...]: usable only as part of a compound.
  bool bracketed = false;

  friend bool operator==(const PhraseToken&, const PhraseToken&) = default;
};

inline bool is_stopword(std::string_view token) {
  static constexpr std::array<std::string_view, 9> kStopwords = {
      "the", "of", "a", "de", "d", "du", "des", "la", "le"};
  return std::find(kStopwords.begin(), kStopwords.end(), token) !=
         kStopwords.end();
}

// Lowercased tokens split on whitespace, commas, semicolons and apostrophes
// (ASCII ' and U+2019). Bracket characters are separators too and mark the
// tokens they enclose.
inline std::vector<PhraseToken> tokenize(std::string_view phrase) {
  std::vector<PhraseToken> tokens;
  std::string current;
  int depth = 0;
  bool current_bracketed = false;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back({text::to_lower(current), current_bracketed});
      current.clear();
    }
  };
  for (std::size_t i = 0; i < phrase.size(); ++i) {
    char c = phrase[i];
    if (phrase.substr(i, 3) == "\xE2\x80\x99") {
      flush();
      i += 2;
      continue;
    }
    if (c == '(' || c == '[') {
      flush();
      ++depth;
      continue;
    }
    if (c == ')' || c == ']') {
      flush();
      if (depth > 0) --depth;
      continue;
    }
    if (text::is_space(c) || c == ',' || c == ';' || c == '\'') {
      flush();
      continue;
    }
    if (current.empty()) current_bracketed = depth > 0;
    current += c;
  }
  flush();
  return tokens;
}

// Maps a raw translation or cue to lookupable lemmas:
//  1. the whole phrase, or its single token after lemmatization;
//  2. the longest contiguous token window present as a multiword lemma
//     (leftmost on ties);
//  3. otherwise every non-stopword, non-bracketed token that lemmatizes to a
//     present lemma.
// Returned lemmas always satisfy `lookup`.
inline ResolvedPhrase resolve_complex(std::string_view phrase,
                                      const PresenceOracle& lookup,
                                      const Lemmatizer& lemmatize) {
  ResolvedPhrase out;
  out.original = std::string(phrase);

  std::string whole = normalize_lemma(phrase);
  if (!whole.empty() && lookup(whole)) {
    out.kind = ResolutionKind::kDirect;
    out.resolved = {whole};
    return out;
  }

  std::vector<PhraseToken> tokens = tokenize(phrase);
  if (tokens.size() == 1 && !tokens[0].bracketed) {
    const std::string& tok = tokens[0].text;
    if (lookup(tok)) {
      out.kind = ResolutionKind::kDirect;
      out.resolved = {tok};
      return out;
    }
    if (auto lemma = lemmatize(tok); lemma && lookup(*lemma)) {
      out.kind = ResolutionKind::kMorphological;
      out.resolved = {*lemma};
      return out;
    }
    return out;
  }

  for (std::size_t width = tokens.size(); width >= 2; --width) {
    for (std::size_t start = 0; start + width <= tokens.size(); ++start) {
      std::string key;
      for (std::size_t i = start; i < start + width; ++i) {
        if (i > start) key += '_';
        key += tokens[i].text;
      }
      if (lookup(key)) {
        out.kind = ResolutionKind::kCompound;
        out.resolved = {key};
        return out;
      }
    }
  }

  for (const auto& tok : tokens) {
    if (tok.bracketed || is_stopword(tok.text)) continue;
    auto lemma = lemmatize(tok.text);
    if (!lemma || !lookup(*lemma)) continue;
    if (std::find(out.resolved.begin(), out.resolved.end(), *lemma) ==
        out.resolved.end()) {
      out.resolved.push_back(*lemma);
    }
  }
  out.kind = out.resolved.empty() ? ResolutionKind::kUnresolved
                                  : ResolutionKind::kComponents;
  return out;
}

// Phrase resolution bound to both lexicons: the taxonomy for translations
// and the bilingual dictionary's headwords for cues.
class Normalizer {
 public:
  Normalizer(PresenceOracle target_lookup, PresenceOracle source_lookup)
      : target_lookup_(std::move(target_lookup)),
        source_lookup_(std::move(source_lookup)) {}

  ResolvedPhrase resolve_target(std::string_view phrase) const {
    return resolve_complex(phrase, target_lookup_, [this](std::string_view w) {
      return lemmatize_target(w, target_lookup_);
    });
  }

  ResolvedPhrase resolve_source(std::string_view phrase) const {
    return resolve_complex(phrase, source_lookup_, [this](std::string_view w) {
      return lemmatize_source(w, source_lookup_);
    });
  }

 private:
  PresenceOracle target_lookup_;
  PresenceOracle source_lookup_;
};

}  // namespace lexlink

#endif  // LEXLINK_NORMALIZER_HPP
