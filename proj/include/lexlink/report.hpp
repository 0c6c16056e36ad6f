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

#ifndef LEXLINK_REPORT_HPP
#define LEXLINK_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexlink/bidict.hpp"
#include "lexlink/linker.hpp"
#include "lexlink/rational.hpp"

namespace lexlink {

// 24535 -> "24,535"
inline std::string group_thousands(std::int64_t v) {
  std::string digits = std::to_string(v < 0 ? -v : v);
  std::string out;
  int n = static_cast<int>(digits.size());
  for (int i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out += ',';
    out += digits[static_cast<std::size_t>(i)];
  }
  return v < 0 ? "-" + out : out;
}

inline std::string ratio_cell(const std::optional<Rational>& r) {
  return r ? r->to_fixed(2) : "-";
}

inline std::string percent_cell(std::int64_t part, std::int64_t whole) {
  if (whole == 0) return "-";
  return Rational(100 * part, whole).to_fixed(1) + "%";
}

// Plain fixed-width text table. Column 0 is left-aligned, the rest right.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header)
      : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row) {
    row.resize(header_.size());
    rows_.push_back(std::move(row));
  }

  // With `decorate`, the header is bold and framed by horizontal rules.
  std::string render(bool decorate) const {
    std::vector<std::size_t> width(header_.size(), 0);
    auto measure = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        width[i] = std::max(width[i], r[i].size());
      }
    };
    measure(header_);
    for (const auto& r : rows_) measure(r);

    auto line = [&](const std::vector<std::string>& r) {
      std::string out;
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::string pad(width[i] - r[i].size(), ' ');
        if (i > 0) out += "  ";
        out += i == 0 ? r[i] + pad : pad + r[i];
      }
      while (!out.empty() && out.back() == ' ') out.pop_back();
      return out + '\n';
    };
    std::size_t total = 0;
    for (auto w : width) total += w;
    total += 2 * (width.size() - 1);
    std::string rule(total, '-');

    std::string out;
    if (decorate) out += rule + '\n' + "\x1b[1m";
    std::string head = line(header_);
    if (decorate) {
      head.pop_back();
      head += "\x1b[0m\n";
    }
    out += head;
    if (decorate) out += rule + '\n';
    for (const auto& r : rows_) out += line(r);
    if (decorate) out += rule + '\n';
    return out;
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Entry-pipeline summary in the shape: no result / result obtained / one row
// per stage / total.
inline std::string render_coverage_table(const CoverageReport& r,
                                         bool decorate) {
  TextTable t({"", "subentries", "%"});
  auto row = [&](std::string label, std::int64_t n) {
    t.add_row({std::move(label), group_thousands(n), percent_cell(n, r.total())});
  };
  row("no result", r.no_result);
  row("result obtained", r.result_obtained());
  row("  monosemous; 1 sense", r.mono);
  row("  >1 translation", r.multi);
  row("  cue", r.cue);
  row("total", r.total());
  return t.render(decorate);
}

inline std::string write_coverage_tsv(const CoverageReport& r) {
  std::string out = "category\tcount\tpercent\n";
  auto row = [&](std::string_view label, std::int64_t n) {
    auto p = r.percent(n);
    out += std::string(label) + '\t' + std::to_string(n) + '\t' +
           (p ? p->to_fixed(2) : "-") + '\n';
  };
  row("no_result", r.no_result);
  row("result_obtained", r.result_obtained());
  row("mono", r.mono);
  row("multi", r.multi);
  row("cue", r.cue);
  row("total", r.total());
  return out;
}

struct StatsRow {
  std::string scope;
  MergeStats stats;
};

// Stats file: tab-separated, one row per scope, ratios to 2 decimals.
inline std::string write_stats_tsv(const std::vector<StatsRow>& rows) {
  std::string out =
      "scope\ttarget_nouns\tsource_nouns\tsynsets\tconnections\tpoly\tsyn\n";
  for (const auto& r : rows) {
    const MergeStats& s = r.stats;
    out += r.scope + '\t' +
           (s.target_nouns ? std::to_string(*s.target_nouns) : "-") + '\t' +
           std::to_string(s.source_nouns) + '\t' + std::to_string(s.synsets) +
           '\t' + std::to_string(s.connections) + '\t' +
           ratio_cell(s.polysemy()) + '\t' + ratio_cell(s.synonymy()) + '\n';
  }
  return out;
}

// Denominators for the percentage rows under each stats row.
struct StatsDenominators {
  std::int64_t taxonomy_lemmas = 0;
  std::int64_t taxonomy_synsets = 0;
  DictionaryCoverage dictionary;
};

inline StatsDenominators make_denominators(const TaxonomyIndex& tax,
                                           const DictionaryCoverage& cov) {
  return {static_cast<std::int64_t>(tax.lemma_index().size()),
          static_cast<std::int64_t>(tax.size()), cov};
}

inline std::string render_stats_table(
    const std::vector<StatsRow>& rows,
    const std::optional<StatsDenominators>& denom, bool decorate) {
  TextTable t({"", "target nouns", "source nouns", "synsets", "connec.",
               "Poly.", "Syn."});
  auto count = [](std::int64_t v) { return group_thousands(v); };
  for (const auto& r : rows) {
    const MergeStats& s = r.stats;
    t.add_row({r.scope, s.target_nouns ? count(*s.target_nouns) : "-",
               count(s.source_nouns), count(s.synsets), count(s.connections),
               ratio_cell(s.polysemy()), ratio_cell(s.synonymy())});
    if (!denom) continue;
    const auto& d = denom->dictionary;
    auto n = [](std::size_t v) { return static_cast<std::int64_t>(v); };
    auto target_pct = [&](std::int64_t whole) {
      return s.target_nouns ? percent_cell(*s.target_nouns, whole)
                            : std::string("-");
    };
    t.add_row({"  of taxonomy", target_pct(denom->taxonomy_lemmas), "-",
               percent_cell(s.synsets, denom->taxonomy_synsets), "-", "", ""});
    t.add_row({"  of dictionary", target_pct(n(d.target_nouns)),
               percent_cell(s.source_nouns, n(d.source_nouns)), "-",
               percent_cell(s.connections, n(d.pairs)), "", ""});
    t.add_row({"  of maximum", target_pct(n(d.target_nouns_in_taxonomy)),
               percent_cell(s.source_nouns, n(d.source_nouns_covered)),
               percent_cell(s.synsets, n(d.reachable_synsets)),
               percent_cell(s.connections, n(d.max_connections)), "", ""});
  }
  return t.render(decorate);
}

}  // namespace lexlink

#endif  // LEXLINK_REPORT_HPP
