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

#ifndef LEXLINK_CLI_HPP
#define LEXLINK_CLI_HPP

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexlink/bidict.hpp"
#include "lexlink/density.hpp"
#include "lexlink/linker.hpp"
#include "lexlink/manifest.hpp"
#include "lexlink/normalizer.hpp"
#include "lexlink/report.hpp"
#include "lexlink/taxonomy.hpp"

namespace lexlink::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,  // bad arguments or unreadable/unwritable files
  kData = 3,   // input parsed but malformed or inconsistent
};

// Raised for argument problems CLI11 cannot detect by itself.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline bool decorate_tables() {
  const char* v = std::getenv("LEXLINK_NO_COLOR");
  return v == nullptr;
}

inline std::set<int> parse_cases(const std::string& spec) {
  std::set<int> cases;
  if (text::trim(spec).empty()) return cases;
  for (auto part : text::split(spec, ',')) {
    auto p = text::trim(part);
    if (p.size() != 1 || p[0] < '1' || p[0] > '4') {
      throw UsageError("unknown merge case '" + std::string(p) + "'");
    }
    cases.insert(p[0] - '0');
  }
  return cases;
}

namespace detail {

struct Session {
  std::ostream& out;
  std::ostream& err;
  RunManifest manifest;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::string read_input(const std::string& role, const std::string& path) {
    std::string content = read_file(path);
    manifest.inputs.push_back({role, path, sha256_hex(content)});
    return content;
  }

  // Writes to `path`, or to `fallback` when path is empty.
  void emit(const std::string& path, const std::string& content,
            std::ostream& fallback) {
    if (path.empty()) {
      fallback << content;
      return;
    }
    write_file(path, content);
    manifest.outputs.push_back(path);
  }

  void finish(const std::string& manifest_path) {
    if (manifest_path.empty()) return;
    manifest.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    write_file(manifest_path, manifest.to_json().dump(2) + "\n");
  }
};

struct LinkOptions {
  std::string taxonomy, dict, out, report, manifest, pos = "n";
  int max_cue_senses = 5;
  bool multi_heuristic = false;
};

inline int cmd_link(const LinkOptions& o, Session& s) {
  s.manifest.command = "link";
  TaxonomyIndex tax = load_taxonomy(s.read_input("taxonomy", o.taxonomy));
  auto subentries = parse_bidict(s.read_input("dict", o.dict), o.pos);
  SourceDictionary dict(subentries);
  Normalizer norm = make_normalizer(tax, dict);
  LinkerConfig cfg;
  cfg.max_cue_senses = o.max_cue_senses;
  cfg.apply_heuristic_to_multi = o.multi_heuristic;
  s.manifest.config = {{"max_cue_senses", cfg.max_cue_senses},
                       {"multi_heuristic", cfg.apply_heuristic_to_multi},
                       {"pos", o.pos}};

  EntryRun run = run_entry_pipeline(subentries, dict, tax, norm, cfg);
  s.emit(o.out, write_links(union_links(run.links)), s.out);
  if (!o.report.empty()) s.emit(o.report, write_coverage_tsv(run.report), s.out);
  std::ostream& table_out = o.out.empty() ? s.err : s.out;
  table_out << render_coverage_table(run.report, decorate_tables());
  return kOk;
}

struct MergeOptions {
  std::string taxonomy, dict_ab, dict_ba, out, stats, manifest, pos = "n";
  std::string cases = "1,2,3,4";
};

inline int cmd_merge(const MergeOptions& o, Session& s) {
  s.manifest.command = "merge";
  LinkerConfig cfg;
  cfg.enabled_merge_cases = parse_cases(o.cases);
  TaxonomyIndex tax = load_taxonomy(s.read_input("taxonomy", o.taxonomy));
  auto ab = parse_bidict(s.read_input("dict-ab", o.dict_ab), o.pos);
  auto ba = parse_bidict(s.read_input("dict-ba", o.dict_ba), o.pos);
  MergedDictionary md =
      merge_directions(extract_pairs(ab, Direction::kTargetToSource),
                       extract_pairs(ba, Direction::kSourceToTarget));
  s.manifest.config = {{"cases", std::vector<int>(cfg.enabled_merge_cases.begin(),
                                                  cfg.enabled_merge_cases.end())},
                       {"pos", o.pos}};

  MergeResult r = merge_all(md, tax, cfg);
  std::vector<StatsRow> rows;
  for (const auto& [c, st] : r.per_case) {
    rows.push_back({"case" + std::to_string(c), st});
  }
  rows.push_back({"total", r.total});

  s.emit(o.out, write_links(r.links), s.out);
  if (!o.stats.empty()) s.emit(o.stats, write_stats_tsv(rows), s.out);
  std::ostream& table_out = o.out.empty() ? s.err : s.out;
  table_out << render_stats_table(
      rows, make_denominators(tax, coverage_report(md, tax)), decorate_tables());
  return kOk;
}

struct WsdOptions {
  std::string taxonomy, word, context;
};

inline int cmd_wsd(const WsdOptions& o, Session& s) {
  s.manifest.command = "wsd";
  TaxonomyIndex tax = load_taxonomy(s.read_input("taxonomy", o.taxonomy));
  std::vector<std::string> context;
  if (!text::trim(o.context).empty()) {
    for (auto w : text::split(o.context, ',')) {
      std::string lemma = normalize_lemma(w);
      if (!lemma.empty()) context.push_back(std::move(lemma));
    }
  }
  Disambiguation d = disambiguate(tax, normalize_lemma(o.word), context);
  std::vector<std::string> senses;
  for (const auto& id : d.chosen_senses) senses.push_back(id.str());
  s.out << text::join(senses, ",") << '\t' << d.winning_root.str() << '\t'
        << d.score.marks << '/' << d.score.subtree_size << '\n';
  return kOk;
}

struct NormalizeOptions {
  std::string phrase, taxonomy, dict, side = "target", pos = "n";
};

inline int cmd_normalize(const NormalizeOptions& o, Session& s) {
  s.manifest.command = "normalize";
  ResolvedPhrase r;
  if (o.side == "target") {
    if (o.taxonomy.empty()) throw UsageError("--side target needs --taxonomy");
    TaxonomyIndex tax = load_taxonomy(s.read_input("taxonomy", o.taxonomy));
    PresenceOracle lookup = [&tax](std::string_view w) { return tax.has_lemma(w); };
    r = resolve_complex(o.phrase, lookup, [&](std::string_view w) {
      return lemmatize_target(w, lookup);
    });
  } else {
    if (o.dict.empty()) throw UsageError("--side source needs --dict");
    SourceDictionary dict(parse_bidict(s.read_input("dict", o.dict), o.pos));
    PresenceOracle lookup = [&dict](std::string_view w) {
      return dict.has_headword(w);
    };
    r = resolve_complex(o.phrase, lookup, [&](std::string_view w) {
      return lemmatize_source(w, lookup);
    });
  }
  s.out << to_string(r.kind) << '\t' << text::join(r.resolved, ",") << '\n';
  return kOk;
}

struct StatsOptions {
  std::string links, out;
};

inline int cmd_stats(const StatsOptions& o, Session& s) {
  s.manifest.command = "stats";
  auto links = read_links(s.read_input("links", o.links));
  std::vector<StatsRow> rows;
  for (Method m : kAllMethods) {
    std::vector<SenseLink> subset;
    for (const auto& l : links) {
      if (l.methods.contains(m)) subset.push_back(l);
    }
    if (!subset.empty()) rows.push_back({std::string(to_string(m)), compute_stats(subset)});
  }
  rows.push_back({"total", compute_stats(links)});
  if (!o.out.empty()) s.emit(o.out, write_stats_tsv(rows), s.out);
  s.out << render_stats_table(rows, std::nullopt, decorate_tables());
  return kOk;
}

}  // namespace detail

// Entry point shared by the lexlink binary and the tests. `args` excludes
// the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Link bilingual dictionary nouns to taxonomy synsets", "lexlink"};
  app.require_subcommand(1);
  std::string manifest_path;

  detail::LinkOptions link;
  auto* link_cmd = app.add_subcommand("link", "Disambiguate subentries one by one");
  link_cmd->add_option("--taxonomy", link.taxonomy, "Taxonomy TSV")->required();
  link_cmd->add_option("--dict", link.dict, "Bilingual dictionary TSV")->required();
  link_cmd->add_option("--max-cue-senses", link.max_cue_senses,
                       "Skip cue-path translations with more senses")
      ->check(CLI::PositiveNumber);
  link_cmd->add_flag("--multi-heuristic", link.multi_heuristic,
                     "Apply the sense cap to multi-translation subentries too");
  link_cmd->add_option("--out", link.out, "Link file (default: stdout)");
  link_cmd->add_option("--report", link.report, "Coverage report TSV");
  link_cmd->add_option("--pos", link.pos, "Part-of-speech filter");
  link_cmd->add_option("--manifest", manifest_path, "Run manifest JSON");

  detail::MergeOptions merge;
  auto* merge_cmd = app.add_subcommand("merge", "Merge both dictionary directions");
  merge_cmd->add_option("--taxonomy", merge.taxonomy, "Taxonomy TSV")->required();
  merge_cmd->add_option("--dict-ab", merge.dict_ab,
                        "Dictionary with taxonomy-language headwords")
      ->required();
  merge_cmd->add_option("--dict-ba", merge.dict_ba,
                        "Dictionary with other-language headwords")
      ->required();
  merge_cmd->add_option("--cases", merge.cases, "Merge cases to run, e.g. 1,2,3,4");
  merge_cmd->add_option("--out", merge.out, "Link file (default: stdout)");
  merge_cmd->add_option("--stats", merge.stats, "Stats TSV");
  merge_cmd->add_option("--pos", merge.pos, "Part-of-speech filter");
  merge_cmd->add_option("--manifest", manifest_path, "Run manifest JSON");

  detail::WsdOptions wsd;
  auto* wsd_cmd = app.add_subcommand("wsd", "Disambiguate one word against a context");
  wsd_cmd->add_option("--taxonomy", wsd.taxonomy, "Taxonomy TSV")->required();
  wsd_cmd->add_option("--word", wsd.word, "Word to disambiguate")->required();
  wsd_cmd->add_option("--context", wsd.context, "Comma-separated context words");

  detail::NormalizeOptions norm;
  auto* norm_cmd = app.add_subcommand("normalize", "Resolve a complex phrase");
  norm_cmd->add_option("--phrase", norm.phrase, "Phrase to resolve")->required();
  norm_cmd->add_option("--taxonomy", norm.taxonomy, "Taxonomy TSV (target side)");
  norm_cmd->add_option("--dict", norm.dict, "Bilingual dictionary TSV (source side)");
  norm_cmd->add_option("--side", norm.side, "target or source")
      ->check(CLI::IsMember({"target", "source"}));
  norm_cmd->add_option("--pos", norm.pos, "Part-of-speech filter");

  detail::StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Summarize a link file");
  stats_cmd->add_option("--links", stats.links, "Link file")->required();
  stats_cmd->add_option("--out", stats.out, "Stats TSV");

  std::vector<const char*> argv{"lexlink"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lexlink: " << e.what() << '\n';
    return kUsage;
  }

  detail::Session session{out, err, {}};
  try {
    int rc = kOk;
    if (*link_cmd) {
      rc = detail::cmd_link(link, session);
    } else if (*merge_cmd) {
      rc = detail::cmd_merge(merge, session);
    } else if (*wsd_cmd) {
      rc = detail::cmd_wsd(wsd, session);
    } else if (*norm_cmd) {
      rc = detail::cmd_normalize(norm, session);
    } else if (*stats_cmd) {
      rc = detail::cmd_stats(stats, session);
    }
    session.finish(manifest_path);
    return rc;
  } catch (const UsageError& e) {
    err << "lexlink: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "lexlink: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "lexlink: " << e.what() << '\n';
    return kData;
  }
}

}  // namespace lexlink::cli

#endif  // LEXLINK_CLI_HPP
