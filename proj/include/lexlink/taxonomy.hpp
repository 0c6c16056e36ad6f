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

#ifndef LEXLINK_TAXONOMY_HPP
#define LEXLINK_TAXONOMY_HPP

#include <compare>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexlink/common.hpp"

namespace lexlink {

// Opaque synset identifier, ordered lexicographically.
class SynsetId {
 public:
  SynsetId() = default;
  explicit SynsetId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;
  friend bool operator==(const SynsetId&, const SynsetId&) = default;

 private:
  std::string value_;
};

struct Synset {
  SynsetId id;
  // Display order is preserved: <mistake, error, fault>.
  std::vector<std::string> lemmas;
  // Sorted, unique. Empty iff the synset is a root.
  std::vector<SynsetId> hypernyms;

  friend bool operator==(const Synset&, const Synset&) = default;
};

// Immutable noun taxonomy: synsets, the hypernym DAG and its inverse, and a
// lemma -> synsets index. All queries are const and thread-safe.
class TaxonomyIndex {
 public:
  TaxonomyIndex() = default;

  // Validates and indexes `synsets`. `lines[i]`, when present, is the source
  // line of synsets[i] and is used in error messages.
  static TaxonomyIndex build(std::vector<Synset> synsets,
                             const std::vector<std::size_t>& lines = {}) {
    auto line_of = [&](std::size_t i) {
      return i < lines.size() ? lines[i] : std::size_t{0};
    };
    TaxonomyIndex tax;
    std::map<SynsetId, std::size_t> line_by_id;
    for (std::size_t i = 0; i < synsets.size(); ++i) {
      Synset& s = synsets[i];
      if (s.id.empty()) throw ParseError(line_of(i), "empty synset id");
      if (s.lemmas.empty()) {
        throw ParseError(line_of(i),
                         "synset " + s.id.str() + " has an empty lemma list");
      }
      std::vector<std::string> unique_lemmas;
      for (auto& l : s.lemmas) {
        if (l.empty()) {
          throw ParseError(line_of(i),
                           "synset " + s.id.str() + " has an empty lemma");
        }
        if (std::find(unique_lemmas.begin(), unique_lemmas.end(), l) ==
            unique_lemmas.end()) {
          unique_lemmas.push_back(l);
        }
      }
      s.lemmas = std::move(unique_lemmas);
      std::sort(s.hypernyms.begin(), s.hypernyms.end());
      s.hypernyms.erase(std::unique(s.hypernyms.begin(), s.hypernyms.end()),
                        s.hypernyms.end());
      if (tax.synsets_.contains(s.id)) {
        throw ParseError(line_of(i), "duplicate synset id " + s.id.str());
      }
      line_by_id.emplace(s.id, line_of(i));
      tax.synsets_.emplace(s.id, s);
    }

    for (const auto& [id, s] : tax.synsets_) {
      for (const auto& h : s.hypernyms) {
        if (h == id) {
          throw ParseError(line_by_id[id],
                           "hypernym cycle: " + id.str() + " -> " + id.str());
        }
        if (!tax.synsets_.contains(h)) {
          throw ParseError(line_by_id[id], "synset " + id.str() +
                                               " references unknown hypernym " +
                                               h.str());
        }
        tax.hyponyms_[h].insert(id);
      }
      if (s.hypernyms.empty()) tax.roots_.insert(id);
      for (const auto& l : s.lemmas) tax.lemma_index_[l].insert(id);
    }
    tax.check_acyclic(line_by_id);
    return tax;
  }

  const std::map<SynsetId, Synset>& synsets() const { return synsets_; }
  const std::set<SynsetId>& roots() const { return roots_; }
  const std::map<std::string, std::set<SynsetId>, std::less<>>& lemma_index()
      const {
    return lemma_index_;
  }
  std::size_t size() const { return synsets_.size(); }
  bool contains(const SynsetId& id) const { return synsets_.contains(id); }
  bool has_lemma(std::string_view lemma) const {
    return lemma_index_.find(lemma) != lemma_index_.end();
  }

  const Synset& synset(const SynsetId& id) const {
    auto it = synsets_.find(id);
    if (it == synsets_.end()) throw LookupError("unknown synset " + id.str());
    return it->second;
  }

  // Exact lookup; absent lemmas yield the empty set.
  const std::set<SynsetId>& senses_of(std::string_view lemma) const {
    static const std::set<SynsetId> kNone;
    auto it = lemma_index_.find(lemma);
    return it == lemma_index_.end() ? kNone : it->second;
  }

  bool is_monosemous(std::string_view lemma) const {
    return senses_of(lemma).size() == 1;
  }

  const std::set<SynsetId>& hyponyms(const SynsetId& id) const {
    static const std::set<SynsetId> kNone;
    auto it = hyponyms_.find(id);
    return it == hyponyms_.end() ? kNone : it->second;
  }

  // Hyponym closure of `root`, including `root`.
  std::set<SynsetId> descendants(const SynsetId& root) const {
    synset(root);
    std::set<SynsetId> seen{root};
    std::vector<SynsetId> stack{root};
    while (!stack.empty()) {
      SynsetId cur = std::move(stack.back());
      stack.pop_back();
      for (const auto& child : hyponyms(cur)) {
        if (seen.insert(child).second) stack.push_back(child);
      }
    }
    return seen;
  }

  // Hypernym closure of `id` (excluding it), ordered by shortest distance
  // and then by id. Shared ancestors in a diamond appear once.
  std::vector<SynsetId> ancestors(const SynsetId& id) const {
    synset(id);
    std::map<SynsetId, std::size_t> dist{{id, 0}};
    std::deque<SynsetId> queue{id};
    while (!queue.empty()) {
      SynsetId cur = std::move(queue.front());
      queue.pop_front();
      std::size_t d = dist[cur];
      for (const auto& h : synsets_.at(cur).hypernyms) {
        if (dist.emplace(h, d + 1).second) queue.push_back(h);
      }
    }
    std::vector<std::pair<std::size_t, SynsetId>> order;
    for (auto& [sid, d] : dist) {
      if (d > 0) order.emplace_back(d, sid);
    }
    std::sort(order.begin(), order.end());
    std::vector<SynsetId> out;
    out.reserve(order.size());
    for (auto& [d, sid] : order) out.push_back(std::move(sid));
    return out;
  }

  friend bool operator==(const TaxonomyIndex& a, const TaxonomyIndex& b) {
    return a.synsets_ == b.synsets_;
  }

 private:
  void check_acyclic(std::map<SynsetId, std::size_t>& line_by_id) const {
    enum class Mark { kWhite, kGray, kBlack };
    std::map<SynsetId, Mark> mark;
    for (const auto& [id, s] : synsets_) mark[id] = Mark::kWhite;

    struct Frame {
      SynsetId id;
      std::size_t next;
    };
    for (const auto& [start, unused] : synsets_) {
      if (mark[start] != Mark::kWhite) continue;
      std::vector<Frame> path{{start, 0}};
      mark[start] = Mark::kGray;
      while (!path.empty()) {
        Frame& top = path.back();
        const auto& parents = synsets_.at(top.id).hypernyms;
        if (top.next == parents.size()) {
          mark[top.id] = Mark::kBlack;
          path.pop_back();
          continue;
        }
        const SynsetId& parent = parents[top.next++];
        if (mark[parent] == Mark::kGray) {
          std::string cycle;
          bool in_cycle = false;
          for (const auto& f : path) {
            if (f.id == parent) in_cycle = true;
            if (in_cycle) cycle += f.id.str() + " -> ";
          }
          cycle += parent.str();
          throw ParseError(line_by_id[top.id], "hypernym cycle: " + cycle);
        }
        if (mark[parent] == Mark::kWhite) {
          mark[parent] = Mark::kGray;
          path.push_back({parent, 0});
        }
      }
    }
  }

  std::map<SynsetId, Synset> synsets_;
  std::map<SynsetId, std::set<SynsetId>> hyponyms_;
  std::map<std::string, std::set<SynsetId>, std::less<>> lemma_index_;
  std::set<SynsetId> roots_;
};

// Parses the tab-separated taxonomy format:
//   <id> TAB <lemma(,lemma)*> TAB <hypernym-id(,hypernym-id)*|empty>
// Blank lines and lines starting with '#' are skipped. Lemmas are
// normalized with normalize_lemma().
inline TaxonomyIndex load_taxonomy(std::string_view content) {
  std::vector<Synset> synsets;
  std::vector<std::size_t> lines;
  std::size_t lineno = 0;
  for (std::string_view line : text::lines(content)) {
    ++lineno;
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto fields = text::split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(lineno, "expected 3 tab-separated fields, got " +
                                   std::to_string(fields.size()));
    }
    Synset s;
    s.id = SynsetId(std::string(text::trim(fields[0])));
    if (s.id.empty()) throw ParseError(lineno, "empty synset id");
    if (!text::trim(fields[1]).empty()) {
      for (auto l : text::split(fields[1], ',')) {
        std::string lemma = normalize_lemma(l);
        if (lemma.empty()) {
          throw ParseError(lineno,
                           "synset " + s.id.str() + " has an empty lemma");
        }
        s.lemmas.push_back(std::move(lemma));
      }
    }
    if (fields.size() == 3 && !text::trim(fields[2]).empty()) {
      for (auto h : text::split(fields[2], ',')) {
        auto hid = text::trim(h);
        if (hid.empty()) {
          throw ParseError(lineno, "empty hypernym id in " + s.id.str());
        }
        s.hypernyms.emplace_back(std::string(hid));
      }
    }
    synsets.push_back(std::move(s));
    lines.push_back(lineno);
  }
  return TaxonomyIndex::build(std::move(synsets), lines);
}

// Inverse of load_taxonomy(): one line per synset in id order.
inline std::string serialize_taxonomy(const TaxonomyIndex& tax) {
  std::string out;
  for (const auto& [id, s] : tax.synsets()) {
    out += id.str();
    out += '\t';
    out += text::join(s.lemmas, ",");
    out += '\t';
    bool first = true;
    for (const auto& h : s.hypernyms) {
      if (!first) out += ',';
      out += h.str();
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace lexlink

#endif  // LEXLINK_TAXONOMY_HPP
