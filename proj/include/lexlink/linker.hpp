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

#ifndef LEXLINK_LINKER_HPP
#define LEXLINK_LINKER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "lexlink/bidict.hpp"
#include "lexlink/density.hpp"
#include "lexlink/normalizer.hpp"
#include "lexlink/rational.hpp"
#include "lexlink/taxonomy.hpp"

namespace lexlink {

enum class Method : std::uint8_t {
  kMono,
  kMulti,
  kCue,
  kCase1,
  kCase2,
  kCase3,
  kCase4,
};

inline constexpr std::array<Method, 7> kAllMethods = {
    Method::kMono,  Method::kMulti, Method::kCue,  Method::kCase1,
    Method::kCase2, Method::kCase3, Method::kCase4};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::kMono: return "mono";
    case Method::kMulti: return "multi";
    case Method::kCue: return "cue";
    case Method::kCase1: return "case1";
    case Method::kCase2: return "case2";
    case Method::kCase3: return "case3";
    case Method::kCase4: return "case4";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : kAllMethods) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

inline Method merge_case_method(int case_id) {
  switch (case_id) {
    case 1: return Method::kCase1;
    case 2: return Method::kCase2;
    case 3: return Method::kCase3;
    case 4: return Method::kCase4;
    default: throw Error("unknown merge case " + std::to_string(case_id));
  }
}

// The set of procedures that produced a link. Pipeline links carry exactly
// one; links in a merged union keep every contributing case.
class MethodSet {
 public:
  MethodSet() = default;
  MethodSet(Method m) : bits_(bit(m)) {}  // NOLINT

  void add(Method m) { bits_ |= bit(m); }
  void add(MethodSet other) { bits_ |= other.bits_; }
  bool contains(Method m) const { return (bits_ & bit(m)) != 0; }
  bool empty() const { return bits_ == 0; }

  std::vector<Method> methods() const {
    std::vector<Method> out;
    for (Method m : kAllMethods) {
      if (contains(m)) out.push_back(m);
    }
    return out;
  }

  // "case1,case2"
  std::string str() const {
    std::string out;
    for (Method m : methods()) {
      if (!out.empty()) out += ',';
      out += to_string(m);
    }
    return out;
  }

  static std::optional<MethodSet> parse(std::string_view s) {
    MethodSet set;
    for (auto part : text::split(s, ',')) {
      auto m = parse_method(text::trim(part));
      if (!m) return std::nullopt;
      set.add(*m);
    }
    return set;
  }

  friend bool operator==(const MethodSet&, const MethodSet&) = default;

 private:
  static std::uint8_t bit(Method m) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(m));
  }
  std::uint8_t bits_ = 0;
};

// One attachment of an other-language word to a taxonomy synset.
struct SenseLink {
  std::string source_lemma;
  SynsetId synset;
  MethodSet methods;
  // Density of the winning subtree for multi/cue links, 1 otherwise.
  Rational score{1};
  // Taxonomy-language lemmas that justified the link. Not serialized.
  std::set<std::string> witnesses;

  friend bool operator==(const SenseLink&, const SenseLink&) = default;
};

inline bool link_less(const SenseLink& a, const SenseLink& b) {
  return std::tie(a.source_lemma, a.synset) <
             std::tie(b.source_lemma, b.synset) ||
         (std::tie(a.source_lemma, a.synset) ==
              std::tie(b.source_lemma, b.synset) &&
          a.methods.str() < b.methods.str());
}

// Collapses links sharing (source_lemma, synset): method tags and witnesses
// are united and the highest score kept. Output is sorted.
inline std::vector<SenseLink> union_links(std::vector<SenseLink> links) {
  std::map<std::pair<std::string, SynsetId>, SenseLink> merged;
  for (auto& l : links) {
    auto key = std::make_pair(l.source_lemma, l.synset);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(std::move(key), std::move(l));
      continue;
    }
    it->second.methods.add(l.methods);
    it->second.witnesses.insert(l.witnesses.begin(), l.witnesses.end());
    if (l.score > it->second.score) it->second.score = l.score;
  }
  std::vector<SenseLink> out;
  out.reserve(merged.size());
  for (auto& [k, l] : merged) out.push_back(std::move(l));
  std::sort(out.begin(), out.end(), link_less);
  return out;
}

struct LinkerConfig {
  // Cue-path translations with more senses than this are not disambiguated.
  int max_cue_senses = 5;
  // Apply the same sense cap to the multi-translation stage.
  bool apply_heuristic_to_multi = false;
  std::set<int> enabled_merge_cases{1, 2, 3, 4};

  void validate() const {
    if (max_cue_senses < 1) throw Error("max_cue_senses must be >= 1");
    for (int c : enabled_merge_cases) {
      if (c < 1 || c > 4) throw Error("unknown merge case " + std::to_string(c));
    }
  }
};

struct SkippedLemma {
  std::string lemma;
  std::string reason;

  friend bool operator==(const SkippedLemma&, const SkippedLemma&) = default;
};

// Outcome of one linking stage on one subentry. An empty `links` is a valid
// result; `reason` says why the stage could not run at all.
struct StageResult {
  std::vector<SenseLink> links;
  std::optional<std::string> reason;
  std::vector<SkippedLemma> skipped;
};

namespace detail {

inline void append_disambiguation(StageResult& out, const TaxonomyIndex& tax,
                                  const std::string& source,
                                  const std::string& target,
                                  const std::vector<std::string>& context,
                                  Method method) {
  Disambiguation d = disambiguate(tax, target, context);
  for (const auto& sense : d.chosen_senses) {
    out.links.push_back(
        SenseLink{source, sense, method, d.score.density, {target}});
  }
}

}  // namespace detail

// One link per monosemous translation lemma.
inline StageResult link_monosemous(const Subentry& s, const TaxonomyIndex& tax,
                                   const Normalizer& norm) {
  StageResult out;
  for (const auto& lemma : translation_lemmas(s, norm)) {
    const auto& senses = tax.senses_of(lemma);
    if (senses.size() == 1) {
      out.links.push_back(
          SenseLink{s.headword, *senses.begin(), Method::kMono, Rational(1), {lemma}});
    }
  }
  return out;
}

// Each translation lemma is disambiguated with the remaining translation
// lemmas as context.
inline StageResult link_by_translations(const Subentry& s,
                                        const TaxonomyIndex& tax,
                                        const Normalizer& norm,
                                        const LinkerConfig& cfg = {}) {
  StageResult out;
  auto lemmas = translation_lemmas(s, norm);
  if (lemmas.size() < 2) {
    out.reason = "single translation";
    return out;
  }
  for (const auto& t : lemmas) {
    if (cfg.apply_heuristic_to_multi &&
        tax.senses_of(t).size() > static_cast<std::size_t>(cfg.max_cue_senses)) {
      out.skipped.push_back({t, "heuristic"});
      continue;
    }
    std::vector<std::string> context;
    for (const auto& other : lemmas) {
      if (other != t) context.push_back(other);
    }
    detail::append_disambiguation(out, tax, s.headword, t, context,
                                  Method::kMulti);
  }
  return out;
}

// The cue is looked up among the dictionary headwords; the taxonomy lemmas of
// its translations become the context for each translation of `s`.
inline StageResult link_by_cue(const Subentry& s, const SourceDictionary& dict,
                               const TaxonomyIndex& tax, const Normalizer& norm,
                               const LinkerConfig& cfg = {}) {
  StageResult out;
  if (!s.cue) {
    out.reason = "no cue";
    return out;
  }
  auto cue_lemmas = norm.resolve_source(*s.cue).resolved;
  if (cue_lemmas.empty()) {
    out.reason = "cue not found";
    return out;
  }
  std::vector<std::string> cue_context;
  for (const auto& c : cue_lemmas) {
    for (const auto& phrase : dict.translations_of(c)) {
      for (auto& l : norm.resolve_target(phrase).resolved) {
        if (std::find(cue_context.begin(), cue_context.end(), l) ==
            cue_context.end()) {
          cue_context.push_back(std::move(l));
        }
      }
    }
  }
  if (cue_context.empty()) {
    out.reason = "cue translations not in taxonomy";
    return out;
  }
  for (const auto& t : translation_lemmas(s, norm)) {
    if (tax.senses_of(t).size() > static_cast<std::size_t>(cfg.max_cue_senses)) {
      out.skipped.push_back({t, "heuristic"});
      continue;
    }
    std::vector<std::string> context;
    for (const auto& c : cue_context) {
      if (c != t) context.push_back(c);
    }
    detail::append_disambiguation(out, tax, s.headword, t, context,
                                  Method::kCue);
  }
  return out;
}

// Tallies of the entry pipeline, one bucket per processed subentry.
struct CoverageReport {
  std::int64_t mono = 0;
  std::int64_t multi = 0;
  std::int64_t cue = 0;
  std::int64_t no_result = 0;

  std::int64_t result_obtained() const { return mono + multi + cue; }
  std::int64_t total() const { return result_obtained() + no_result; }

  // Exact percentage of the total; nullopt when nothing was processed.
  std::optional<Rational> percent(std::int64_t count) const {
    if (total() == 0) return std::nullopt;
    return Rational(100 * count, total());
  }

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

struct SubentryTrace {
  std::string headword;
  int index = 0;
  // Stage that produced the links, if any.
  std::optional<Method> stage;
  std::vector<std::string> notes;
};

struct EntryRun {
  std::vector<SenseLink> links;
  CoverageReport report;
  std::vector<SubentryTrace> trace;
};

// Runs mono -> multi -> cue on each unfiltered subentry; the first stage that
// yields a link decides the subentry. Subentries offering no source besides
// a semantic field are counted as no_result without any attempt.
inline EntryRun run_entry_pipeline(const std::vector<Subentry>& subentries,
                                   const SourceDictionary& dict,
                                   const TaxonomyIndex& tax,
                                   const Normalizer& norm,
                                   const LinkerConfig& cfg = {}) {
  cfg.validate();
  struct Keyed {
    std::string headword;
    int index;
    SenseLink link;
  };
  std::vector<Keyed> keyed;
  EntryRun run;

  for (const auto& s : subentries) {
    if (s.filtered) continue;
    SubentryTrace trace{s.headword, s.index, std::nullopt, {}};
    CaseSet cases = classify_subentry(s, tax, norm);
    auto note = [&](std::string_view stage, const StageResult& r) {
      if (r.reason) trace.notes.push_back(std::string(stage) + ": " + *r.reason);
      for (const auto& sk : r.skipped) {
        trace.notes.push_back(std::string(stage) + ": skipped " + sk.lemma +
                              " (" + sk.reason + ")");
      }
    };

    std::vector<SenseLink> links;
    if (cases.not_in_taxonomy) {
      trace.notes.push_back("translation not in taxonomy");
    } else if (cases.unclassifiable) {
      trace.notes.push_back("unclassifiable");
    } else if (!cases.case1_monosemous && !cases.case2_multi_translation &&
               !cases.case3_cue) {
      trace.notes.push_back("semantic field only");
    } else {
      StageResult mono = link_monosemous(s, tax, norm);
      if (!mono.links.empty()) {
        trace.stage = Method::kMono;
        links = std::move(mono.links);
      } else {
        StageResult multi = link_by_translations(s, tax, norm, cfg);
        note("multi", multi);
        if (!multi.links.empty()) {
          trace.stage = Method::kMulti;
          links = std::move(multi.links);
        } else if (s.cue) {
          StageResult cue = link_by_cue(s, dict, tax, norm, cfg);
          note("cue", cue);
          if (!cue.links.empty()) {
            trace.stage = Method::kCue;
            links = std::move(cue.links);
          }
        }
      }
    }

    if (!trace.stage) {
      ++run.report.no_result;
    } else if (*trace.stage == Method::kMono) {
      ++run.report.mono;
    } else if (*trace.stage == Method::kMulti) {
      ++run.report.multi;
    } else {
      ++run.report.cue;
    }
    for (auto& l : links) keyed.push_back({s.headword, s.index, std::move(l)});
    run.trace.push_back(std::move(trace));
  }

  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.headword, a.index, a.link.synset) <
           std::tie(b.headword, b.index, b.link.synset);
  });
  for (auto& k : keyed) run.links.push_back(std::move(k.link));
  return run;
}

// Case 1: other-language translations of monosemous taxonomy nouns.
inline std::vector<SenseLink> merge_case1(const MergedDictionary& md,
                                          const TaxonomyIndex& tax) {
  std::vector<SenseLink> out;
  for (const auto& p : md.pairs()) {
    const auto& senses = tax.senses_of(p.target_noun);
    if (senses.size() != 1) continue;
    out.push_back(SenseLink{p.source_noun, *senses.begin(), Method::kCase1,
                            Rational(1), {p.target_noun}});
  }
  return union_links(std::move(out));
}

// Case 2: other-language nouns with a single translation, linked to every
// sense of that translation.
inline std::vector<SenseLink> merge_case2(const MergedDictionary& md,
                                          const TaxonomyIndex& tax) {
  std::vector<SenseLink> out;
  for (const auto& [source, targets] : md.by_source()) {
    if (targets.size() != 1) continue;
    const std::string& t = *targets.begin();
    for (const auto& sense : tax.senses_of(t)) {
      out.push_back(SenseLink{source, sense, Method::kCase2, Rational(1), {t}});
    }
  }
  return union_links(std::move(out));
}

// Case 3: taxonomy nouns with a single translation; that translation is
// linked to every sense of the noun.
inline std::vector<SenseLink> merge_case3(const MergedDictionary& md,
                                          const TaxonomyIndex& tax) {
  std::vector<SenseLink> out;
  for (const auto& [target, sources] : md.by_target()) {
    if (sources.size() != 1) continue;
    const std::string& s = *sources.begin();
    for (const auto& sense : tax.senses_of(target)) {
      out.push_back(SenseLink{s, sense, Method::kCase3, Rational(1), {target}});
    }
  }
  return union_links(std::move(out));
}

// Case 4: a synset is linked to an other-language noun when at least two of
// its lemmas translate to that noun.
inline std::vector<SenseLink> merge_case4(const MergedDictionary& md,
                                          const TaxonomyIndex& tax) {
  std::vector<SenseLink> out;
  for (const auto& [source, targets] : md.by_source()) {
    std::map<SynsetId, std::set<std::string>> witnesses;
    for (const auto& t : targets) {
      for (const auto& sense : tax.senses_of(t)) witnesses[sense].insert(t);
    }
    for (auto& [sense, w] : witnesses) {
      if (w.size() >= 2) {
        out.push_back(
            SenseLink{source, sense, Method::kCase4, Rational(1), std::move(w)});
      }
    }
  }
  return union_links(std::move(out));
}

inline std::vector<SenseLink> merge_case(int case_id, const MergedDictionary& md,
                                         const TaxonomyIndex& tax) {
  switch (case_id) {
    case 1: return merge_case1(md, tax);
    case 2: return merge_case2(md, tax);
    case 3: return merge_case3(md, tax);
    case 4: return merge_case4(md, tax);
    default: throw Error("unknown merge case " + std::to_string(case_id));
  }
}

// Counts over a link list. Ratios are absent when their denominator is 0.
struct MergeStats {
  // Distinct witness lemmas; absent when the links carry none (e.g. read
  // back from a link file).
  std::optional<std::int64_t> target_nouns;
  std::int64_t source_nouns = 0;
  std::int64_t synsets = 0;
  std::int64_t connections = 0;

  // Synsets per source noun.
  std::optional<Rational> polysemy() const {
    if (source_nouns == 0) return std::nullopt;
    return Rational(connections, source_nouns);
  }
  // Source nouns per synset.
  std::optional<Rational> synonymy() const {
    if (synsets == 0) return std::nullopt;
    return Rational(connections, synsets);
  }

  friend bool operator==(const MergeStats&, const MergeStats&) = default;
};

inline MergeStats compute_stats(const std::vector<SenseLink>& links) {
  std::set<std::string> sources;
  std::set<SynsetId> synsets;
  std::set<std::pair<std::string, SynsetId>> connections;
  std::set<std::string> witnesses;
  bool any_witness = false;
  for (const auto& l : links) {
    sources.insert(l.source_lemma);
    synsets.insert(l.synset);
    connections.emplace(l.source_lemma, l.synset);
    if (!l.witnesses.empty()) any_witness = true;
    witnesses.insert(l.witnesses.begin(), l.witnesses.end());
  }
  MergeStats st;
  if (any_witness || links.empty()) {
    st.target_nouns = static_cast<std::int64_t>(witnesses.size());
  }
  st.source_nouns = static_cast<std::int64_t>(sources.size());
  st.synsets = static_cast<std::int64_t>(synsets.size());
  st.connections = static_cast<std::int64_t>(connections.size());
  return st;
}

struct MergeResult {
  // Union over enabled cases, sorted, one entry per (source, synset).
  std::vector<SenseLink> links;
  std::map<int, std::vector<SenseLink>> per_case_links;
  std::map<int, MergeStats> per_case;
  MergeStats total;
};

// Per-case stats are taken on each case's own links before the union.
inline MergeResult merge_all(const MergedDictionary& md,
                             const TaxonomyIndex& tax,
                             const LinkerConfig& cfg = {}) {
  cfg.validate();
  MergeResult r;
  std::vector<SenseLink> all;
  for (int c : cfg.enabled_merge_cases) {
    auto links = merge_case(c, md, tax);
    r.per_case[c] = compute_stats(links);
    all.insert(all.end(), links.begin(), links.end());
    r.per_case_links[c] = std::move(links);
  }
  r.links = union_links(std::move(all));
  r.total = compute_stats(r.links);
  return r;
}

// Link file: <source_lemma> TAB <synset_id> TAB <method(,method)*> TAB
// <score>, sorted by (source_lemma, synset_id, method), LF line ends.
inline std::string write_links(const std::vector<SenseLink>& links) {
  std::vector<const SenseLink*> order;
  order.reserve(links.size());
  for (const auto& l : links) order.push_back(&l);
  std::stable_sort(order.begin(), order.end(),
                   [](const SenseLink* a, const SenseLink* b) {
                     return link_less(*a, *b);
                   });
  std::string out;
  for (const SenseLink* l : order) {
    out += l->source_lemma;
    out += '\t';
    out += l->synset.str();
    out += '\t';
    out += l->methods.str();
    out += '\t';
    out += l->score.to_fixed(4);
    out += '\n';
  }
  return out;
}

namespace detail {

inline Rational parse_decimal(std::string_view s, std::size_t lineno) {
  s = text::trim(s);
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_point = false;
  bool any_digit = false;
  for (char c : s) {
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') {
      throw ParseError(lineno, "bad score '" + std::string(s) + "'");
    }
    any_digit = true;
    num = num * 10 + (c - '0');
    if (seen_point) den *= 10;
  }
  if (!any_digit) throw ParseError(lineno, "bad score '" + std::string(s) + "'");
  return Rational(num, den);
}

}  // namespace detail

inline std::vector<SenseLink> read_links(std::string_view content) {
  std::vector<SenseLink> out;
  std::size_t lineno = 0;
  for (std::string_view line : text::lines(content)) {
    ++lineno;
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto f = text::split(line, '\t');
    if (f.size() != 4) {
      throw ParseError(lineno, "expected 4 tab-separated fields, got " +
                                   std::to_string(f.size()));
    }
    SenseLink l;
    l.source_lemma = std::string(text::trim(f[0]));
    l.synset = SynsetId(std::string(text::trim(f[1])));
    if (l.source_lemma.empty() || l.synset.empty()) {
      throw ParseError(lineno, "empty lemma or synset id");
    }
    auto methods = MethodSet::parse(f[2]);
    if (!methods || methods->empty()) {
      throw ParseError(lineno, "unknown method '" + std::string(f[2]) + "'");
    }
    l.methods = *methods;
    l.score = detail::parse_decimal(f[3], lineno);
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace lexlink

#endif  // LEXLINK_LINKER_HPP
