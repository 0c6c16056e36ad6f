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

#ifndef LEXLINK_DENSITY_HPP
#define LEXLINK_DENSITY_HPP

#include <concepts>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexlink/rational.hpp"
#include "lexlink/taxonomy.hpp"

namespace lexlink {

// Sense marks for one disambiguation problem. marks[s] counts the distinct
// words among {target} and the context that have s as a sense.
struct MarkSet {
  std::string target;
  // Distinct context lemmas, sorted, never containing the target.
  std::set<std::string> context;
  std::map<SynsetId, std::int64_t> marks;
};

inline MarkSet mark_senses(const TaxonomyIndex& tax, std::string_view target,
                           std::span<const std::string> context) {
  const auto& target_senses = tax.senses_of(target);
  if (target_senses.empty()) {
    throw LookupError("'" + std::string(target) + "' is not in the taxonomy");
  }
  MarkSet ms;
  ms.target = std::string(target);
  for (const auto& w : context) {
    if (w != target) ms.context.insert(w);
  }
  for (const auto& s : target_senses) ms.marks[s] += 1;
  for (const auto& w : ms.context) {
    for (const auto& s : tax.senses_of(w)) ms.marks[s] += 1;
  }
  return ms;
}

// Size of a candidate subtree. The measure is a policy so that another
// normalization can replace the plain synset count.
template <class M>
concept SubtreeSizeMeasure =
    requires(const M& m, const TaxonomyIndex& tax, const SynsetId& root,
             const std::set<SynsetId>& subtree) {
      { m(tax, root, subtree) } -> std::convertible_to<std::int64_t>;
    };

struct SynsetCount {
  std::int64_t operator()(const TaxonomyIndex&, const SynsetId&,
                          const std::set<SynsetId>& subtree) const {
    return static_cast<std::int64_t>(subtree.size());
  }
};

struct DensityScore {
  SynsetId root;
  std::int64_t marks = 0;
  std::int64_t subtree_size = 1;
  Rational density;

  friend bool operator==(const DensityScore&, const DensityScore&) = default;
};

// Total order used to rank candidate roots: density desc, marks desc,
// subtree size asc, root id asc.
inline bool ranks_before(const DensityScore& a, const DensityScore& b) {
  if (a.density != b.density) return a.density > b.density;
  if (a.marks != b.marks) return a.marks > b.marks;
  if (a.subtree_size != b.subtree_size) return a.subtree_size < b.subtree_size;
  return a.root < b.root;
}

// Every sense of the target and every ancestor of those senses competes as
// a subtree root. Returned best first.
template <SubtreeSizeMeasure Measure = SynsetCount>
std::vector<DensityScore> score_subtrees(const TaxonomyIndex& tax,
                                         const MarkSet& ms,
                                         const Measure& measure = {}) {
  std::set<SynsetId> candidates;
  for (const auto& sense : tax.senses_of(ms.target)) {
    candidates.insert(sense);
    for (auto& a : tax.ancestors(sense)) candidates.insert(std::move(a));
  }

  std::vector<DensityScore> scores;
  scores.reserve(candidates.size());
  for (const auto& root : candidates) {
    auto subtree = tax.descendants(root);
    DensityScore d;
    d.root = root;
    for (const auto& s : subtree) {
      if (auto it = ms.marks.find(s); it != ms.marks.end()) d.marks += it->second;
    }
    d.subtree_size = measure(tax, root, subtree);
    d.density = Rational(d.marks, d.subtree_size);
    scores.push_back(std::move(d));
  }
  std::sort(scores.begin(), scores.end(), ranks_before);
  return scores;
}

struct Disambiguation {
  // Target senses inside the winning subtree, ordered by id.
  std::vector<SynsetId> chosen_senses;
  SynsetId winning_root;
  DensityScore score;
};

// Picks the target sense(s) in the densest candidate subtree. Several senses
// are returned when they share that subtree.
template <SubtreeSizeMeasure Measure = SynsetCount>
Disambiguation disambiguate(const TaxonomyIndex& tax, std::string_view target,
                            std::span<const std::string> context,
                            const Measure& measure = {}) {
  MarkSet ms = mark_senses(tax, target, context);
  auto scores = score_subtrees(tax, ms, measure);
  Disambiguation out;
  out.score = scores.front();
  out.winning_root = out.score.root;
  auto subtree = tax.descendants(out.winning_root);
  for (const auto& sense : tax.senses_of(target)) {
    if (subtree.contains(sense)) out.chosen_senses.push_back(sense);
  }
  return out;
}

}  // namespace lexlink

#endif  // LEXLINK_DENSITY_HPP
