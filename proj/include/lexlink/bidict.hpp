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

#ifndef LEXLINK_BIDICT_HPP
#define LEXLINK_BIDICT_HPP

#include <charconv>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexlink/common.hpp"
#include "lexlink/normalizer.hpp"
#include "lexlink/taxonomy.hpp"

namespace lexlink {

// One numbered sense block of a bilingual dictionary entry.
struct Subentry {
  std::string headword;
  int index = 1;
  std::string pos;
  std::optional<std::string> cue;
  std::optional<std::string> semfield;
  // Raw phrases, duplicates removed, in dictionary order.
  std::vector<std::string> translations;
  // Set when pos does not match the parse filter. Filtered subentries are
  // kept so that counts over the whole file remain possible.
  bool filtered = false;
  std::size_t line = 0;

  friend bool operator==(const Subentry& a, const Subentry& b) {
    return a.headword == b.headword && a.index == b.index && a.pos == b.pos &&
           a.cue == b.cue && a.semfield == b.semfield &&
           a.translations == b.translations && a.filtered == b.filtered;
  }
};

// "n" matches "n", "n.m." and "n.f."; an empty filter matches everything.
inline bool pos_matches(std::string_view pos, std::string_view filter) {
  if (filter.empty() || pos == filter) return true;
  return pos.size() > filter.size() && pos.substr(0, filter.size()) == filter &&
         pos[filter.size()] == '.';
}

namespace detail {

inline void add_translation(Subentry& s, std::string_view raw,
                            std::size_t lineno) {
  std::string t(text::trim(raw));
  if (t.empty()) throw ParseError(lineno, "empty translation");
  if (std::find(s.translations.begin(), s.translations.end(), t) ==
      s.translations.end()) {
    s.translations.push_back(std::move(t));
  }
}

inline std::optional<std::string> optional_field(std::string_view f) {
  f = text::trim(f);
  if (f.empty() || f == "-") return std::nullopt;
  return std::string(f);
}

}  // namespace detail

// Parses the bilingual TSV format:
//   <headword> TAB <index> TAB <pos> TAB <cue|-> TAB <semfield|-> TAB
//   <translation(;translation)*>
inline std::vector<Subentry> parse_bidict(std::string_view content,
                                          std::string_view pos_filter = "n") {
  std::vector<Subentry> out;
  std::size_t lineno = 0;
  for (std::string_view line : text::lines(content)) {
    ++lineno;
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto fields = text::split(line, '\t');
    if (fields.size() != 6) {
      throw ParseError(lineno, "expected 6 tab-separated fields, got " +
                                   std::to_string(fields.size()));
    }
    Subentry s;
    s.line = lineno;
    s.headword = normalize_lemma(fields[0]);
    if (s.headword.empty()) throw ParseError(lineno, "empty headword");

    auto idx = text::trim(fields[1]);
    auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), s.index);
    if (ec != std::errc() || ptr != idx.data() + idx.size() || s.index < 1) {
      throw ParseError(lineno, "subentry index must be a positive integer, got '" +
                                   std::string(idx) + "'");
    }
    s.pos = std::string(text::trim(fields[2]));
    if (s.pos.empty()) throw ParseError(lineno, "empty part of speech");
    s.cue = detail::optional_field(fields[3]);
    s.semfield = detail::optional_field(fields[4]);
    if (text::trim(fields[5]).empty()) {
      throw ParseError(lineno, "empty translation field");
    }
    for (auto t : text::split(fields[5], ';')) {
      detail::add_translation(s, t, lineno);
    }
    s.filtered = !pos_matches(s.pos, pos_filter);
    out.push_back(std::move(s));
  }
  return out;
}

// Reads one subentry in typeset dictionary style, used to build fixtures:
//   "tresor 2: n.m. (ressources) (comm.) finances"
// Parenthesized groups after the part of speech are cues, except a single
// abbreviation ending in '.', which is the semantic field. Translations are
// separated by commas outside brackets.
inline Subentry parse_inline_entry(std::string_view line) {
  Subentry s;
  auto colon = line.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(0, "inline entry lacks ':' separator");
  }
  auto head = text::trim(line.substr(0, colon));
  auto space = head.find_last_of(" \t");
  if (space == std::string_view::npos) {
    throw ParseError(0, "inline entry lacks a subentry number");
  }
  auto num = text::trim(head.substr(space + 1));
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), s.index);
  if (ec != std::errc() || ptr != num.data() + num.size() || s.index < 1) {
    throw ParseError(0, "bad subentry number '" + std::string(num) + "'");
  }
  s.headword = normalize_lemma(head.substr(0, space));

  std::string_view rest = text::trim(line.substr(colon + 1));
  auto pos_end = rest.find_first_of(" \t");
  s.pos = std::string(rest.substr(0, pos_end));
  rest = pos_end == std::string_view::npos ? std::string_view{}
                                           : text::trim(rest.substr(pos_end));

  while (!rest.empty() && rest.front() == '(') {
    auto close = rest.find(')');
    if (close == std::string_view::npos) {
      throw ParseError(0, "unbalanced '(' in inline entry");
    }
    auto group = text::trim(rest.substr(1, close - 1));
    bool is_field = !group.empty() && group.back() == '.' &&
                    group.find_first_of(" \t,") == std::string_view::npos;
    if (is_field) {
      s.semfield = std::string(group.substr(0, group.size() - 1));
    } else if (!s.cue) {
      s.cue = std::string(group);
    } else {
      throw ParseError(0, "inline entry has more than one cue");
    }
    rest = text::trim(rest.substr(close + 1));
  }
  if (!rest.empty() && rest.back() == '.') rest.remove_suffix(1);
  if (text::trim(rest).empty()) throw ParseError(0, "empty translation field");

  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= rest.size(); ++i) {
    char c = i < rest.size() ? rest[i] : ',';
    if (c == '(' || c == '[') ++depth;
    if ((c == ')' || c == ']') && depth > 0) --depth;
    if (c == ',' && depth == 0) {
      detail::add_translation(s, rest.substr(start, i - start), 0);
      start = i + 1;
    }
  }
  return s;
}

// Renders a subentry as one bilingual TSV line (without newline).
inline std::string to_tsv(const Subentry& s) {
  return s.headword + '\t' + std::to_string(s.index) + '\t' + s.pos + '\t' +
         s.cue.value_or("-") + '\t' + s.semfield.value_or("-") + '\t' +
         text::join(s.translations, ";");
}

// Source headword -> translation phrases, over unfiltered subentries.
class SourceDictionary {
 public:
  SourceDictionary() = default;
  explicit SourceDictionary(const std::vector<Subentry>& subentries) {
    for (const auto& s : subentries) {
      if (s.filtered) continue;
      auto& list = entries_[s.headword];
      for (const auto& t : s.translations) {
        if (std::find(list.begin(), list.end(), t) == list.end()) {
          list.push_back(t);
        }
      }
    }
  }

  bool has_headword(std::string_view w) const {
    return entries_.find(w) != entries_.end();
  }

  const std::vector<std::string>& translations_of(std::string_view w) const {
    static const std::vector<std::string> kNone;
    auto it = entries_.find(w);
    return it == entries_.end() ? kNone : it->second;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
};

inline Normalizer make_normalizer(const TaxonomyIndex& tax,
                                  const SourceDictionary& dict) {
  return Normalizer(
      [&tax](std::string_view w) { return tax.has_lemma(w); },
      [&dict](std::string_view w) { return dict.has_headword(w); });
}

// Distinct taxonomy lemmas obtained by normalizing every translation of `s`.
inline std::vector<std::string> translation_lemmas(const Subentry& s,
                                                   const Normalizer& norm) {
  std::vector<std::string> out;
  for (const auto& t : s.translations) {
    for (auto& l : norm.resolve_target(t).resolved) {
      if (std::find(out.begin(), out.end(), l) == out.end()) {
        out.push_back(std::move(l));
      }
    }
  }
  return out;
}

struct CaseSet {
  bool case1_monosemous = false;
  bool case2_multi_translation = false;
  bool case3_cue = false;
  bool case4_semfield = false;
  bool not_in_taxonomy = false;
  bool unclassifiable = false;

  bool any_case() const {
    return case1_monosemous || case2_multi_translation || case3_cue ||
           case4_semfield;
  }

  friend bool operator==(const CaseSet&, const CaseSet&) = default;
};

// Decides which disambiguation sources a subentry offers. The four case
// flags are independent of each other; a subentry none of whose translations
// reaches the taxonomy is only marked not_in_taxonomy.
inline CaseSet classify_subentry(const Subentry& s, const TaxonomyIndex& tax,
                                 const Normalizer& norm) {
  CaseSet c;
  auto lemmas = translation_lemmas(s, norm);
  if (lemmas.empty()) {
    c.not_in_taxonomy = true;
    return c;
  }
  c.case1_monosemous =
      std::any_of(lemmas.begin(), lemmas.end(),
                  [&](const std::string& l) { return tax.is_monosemous(l); });
  c.case2_multi_translation = s.translations.size() > 1;
  c.case3_cue = s.cue.has_value();
  c.case4_semfield = s.semfield.has_value();
  c.unclassifiable = !c.any_case();
  return c;
}

struct EquivalencePair {
  // Taxonomy-language noun.
  std::string target_noun;
  // Other-language noun.
  std::string source_noun;

  friend auto operator<=>(const EquivalencePair&,
                          const EquivalencePair&) = default;
  friend bool operator==(const EquivalencePair&,
                         const EquivalencePair&) = default;
};

// Which language the headwords of a dictionary file are in.
enum class Direction {
  kTargetToSource,  // headwords are taxonomy-language nouns
  kSourceToTarget,  // headwords are other-language nouns
};

// Flattens unfiltered subentries into taxonomy-oriented pairs. Both sides
// are normalized with normalize_lemma() ("crowd of people" ->
// "crowd_of_people").
inline std::vector<EquivalencePair> extract_pairs(
    const std::vector<Subentry>& subentries, Direction dir) {
  std::vector<EquivalencePair> out;
  for (const auto& s : subentries) {
    if (s.filtered) continue;
    for (const auto& t : s.translations) {
      std::string other = normalize_lemma(t);
      if (dir == Direction::kTargetToSource) {
        out.push_back({s.headword, std::move(other)});
      } else {
        out.push_back({std::move(other), s.headword});
      }
    }
  }
  return out;
}

class MergedDictionary {
 public:
  MergedDictionary() = default;

  template <class Range>
  static MergedDictionary from_pairs(const Range& pairs) {
    MergedDictionary md;
    for (const auto& p : pairs) md.add(p);
    return md;
  }

  void add(const EquivalencePair& p) {
    if (p.target_noun.empty() || p.source_noun.empty()) {
      throw Error("equivalence pair with an empty side");
    }
    if (!pairs_.insert(p).second) return;
    by_target_[p.target_noun].insert(p.source_noun);
    by_source_[p.source_noun].insert(p.target_noun);
  }

  const std::set<EquivalencePair>& pairs() const { return pairs_; }
  const std::map<std::string, std::set<std::string>>& by_target() const {
    return by_target_;
  }
  const std::map<std::string, std::set<std::string>>& by_source() const {
    return by_source_;
  }

  bool contains(std::string_view target, std::string_view source) const {
    return pairs_.contains(EquivalencePair{std::string(target), std::string(source)});
  }

  friend bool operator==(const MergedDictionary& a, const MergedDictionary& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  std::set<EquivalencePair> pairs_;
  std::map<std::string, std::set<std::string>> by_target_;
  std::map<std::string, std::set<std::string>> by_source_;
};

// Union of two same-oriented pair lists. Order-independent and idempotent.
inline MergedDictionary merge_directions(
    const std::vector<EquivalencePair>& ab,
    const std::vector<EquivalencePair>& ba) {
  MergedDictionary md;
  for (const auto& p : ab) md.add(p);
  for (const auto& p : ba) md.add(p);
  return md;
}

// Upper bounds on what any merge heuristic can link.
struct DictionaryCoverage {
  std::size_t target_nouns = 0;
  std::size_t source_nouns = 0;
  std::size_t pairs = 0;
  std::size_t target_nouns_in_taxonomy = 0;
  // Source nouns with at least one in-taxonomy translation.
  std::size_t source_nouns_covered = 0;
  // Union of senses over in-taxonomy target nouns.
  std::size_t reachable_synsets = 0;
  std::size_t pairs_in_taxonomy = 0;
  // Distinct (source noun, synset) links obtainable from in-taxonomy pairs.
  std::size_t max_connections = 0;

  friend bool operator==(const DictionaryCoverage&,
                         const DictionaryCoverage&) = default;
};

inline DictionaryCoverage coverage_report(const MergedDictionary& md,
                                          const TaxonomyIndex& tax) {
  DictionaryCoverage c;
  c.target_nouns = md.by_target().size();
  c.source_nouns = md.by_source().size();
  c.pairs = md.pairs().size();
  std::set<SynsetId> synsets;
  std::set<std::string> sources;
  std::set<std::pair<std::string, SynsetId>> links;
  for (const auto& [target, srcs] : md.by_target()) {
    const auto& senses = tax.senses_of(target);
    if (senses.empty()) continue;
    ++c.target_nouns_in_taxonomy;
    c.pairs_in_taxonomy += srcs.size();
    synsets.insert(senses.begin(), senses.end());
    for (const auto& s : srcs) {
      sources.insert(s);
      for (const auto& sense : senses) links.emplace(s, sense);
    }
  }
  c.source_nouns_covered = sources.size();
  c.reachable_synsets = synsets.size();
  c.max_connections = links.size();
  return c;
}

}  // namespace lexlink

#endif  // LEXLINK_BIDICT_HPP
