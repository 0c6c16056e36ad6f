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

// Brute-force reference implementations and random generators used by the
// property and acceptance suites. Nothing here calls into lexlink: the
// oracles work on a plain adjacency list and recompute everything by
// fixpoint iteration and exhaustive enumeration.

#ifndef LEXLINK_TESTS_ORACLE_HPP
#define LEXLINK_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct RawTaxonomy {
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> lemmas;
  std::vector<std::vector<int>> parents;

  int size() const { return static_cast<int>(ids.size()); }

  std::string to_tsv() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
      out += ids[i] + '\t';
      for (std::size_t k = 0; k < lemmas[i].size(); ++k) {
        if (k) out += ',';
        out += lemmas[i][k];
      }
      out += '\t';
      for (std::size_t k = 0; k < parents[i].size(); ++k) {
        if (k) out += ',';
        out += ids[parents[i][k]];
      }
      out += '\n';
    }
    return out;
  }

  bool has_lemma(int node, const std::string& w) const {
    return std::find(lemmas[node].begin(), lemmas[node].end(), w) !=
           lemmas[node].end();
  }

  std::set<int> senses(const std::string& w) const {
    std::set<int> out;
    for (int i = 0; i < size(); ++i) {
      if (has_lemma(i, w)) out.insert(i);
    }
    return out;
  }
};

// Random DAG on `n` nodes. Edges only point to lower indices, so the graph
// is acyclic by construction; about one node in ten is an extra root.
// Lemmas are drawn from "l0".."l{vocab-1}".
inline RawTaxonomy random_taxonomy(std::mt19937& rng, int n, int vocab) {
  RawTaxonomy t;
  std::uniform_int_distribution<int> lemma_count(1, 3);
  std::uniform_int_distribution<int> word(0, vocab - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "s%04d", i);
    t.ids.emplace_back(buf);
    std::vector<std::string> ls;
    int k = lemma_count(rng);
    for (int j = 0; j < k; ++j) {
      std::string l = "l" + std::to_string(word(rng));
      if (std::find(ls.begin(), ls.end(), l) == ls.end()) ls.push_back(l);
    }
    t.lemmas.push_back(ls);
    std::vector<int> ps;
    if (i > 0 && coin(rng) > 0.1) {
      std::uniform_int_distribution<int> parent(0, i - 1);
      ps.push_back(parent(rng));
      if (coin(rng) < 0.25) {
        int p2 = parent(rng);
        if (p2 != ps[0]) ps.push_back(p2);
      }
    }
    t.parents.push_back(ps);
  }
  return t;
}

// Nodes whose hypernym closure contains `root`, plus root: grow the set
// until no node with a parent inside it remains outside.
inline std::set<int> descendants(const RawTaxonomy& t, int root) {
  std::set<int> d{root};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < t.size(); ++i) {
      if (d.contains(i)) continue;
      for (int p : t.parents[i]) {
        if (d.contains(p)) {
          d.insert(i);
          changed = true;
          break;
        }
      }
    }
  }
  return d;
}

inline std::set<int> ancestors(const RawTaxonomy& t, int node) {
  std::set<int> a;
  for (int r = 0; r < t.size(); ++r) {
    if (r != node && descendants(t, r).contains(node)) a.insert(r);
  }
  return a;
}

struct Candidate {
  int root;
  std::int64_t marks;
  std::int64_t size;
};

// True when a ranks strictly ahead of b: density desc, marks desc, size asc,
// id asc. Densities compare by cross-multiplication.
inline bool ahead(const RawTaxonomy& t, const Candidate& a, const Candidate& b) {
  std::int64_t lhs = a.marks * b.size;
  std::int64_t rhs = b.marks * a.size;
  if (lhs != rhs) return lhs > rhs;
  if (a.marks != b.marks) return a.marks > b.marks;
  if (a.size != b.size) return a.size < b.size;
  return t.ids[a.root] < t.ids[b.root];
}

struct BruteResult {
  std::vector<std::string> chosen;
  std::string root;
  std::int64_t marks = 0;
  std::int64_t size = 0;
};

// Exhaustive subtree-density disambiguation. Each distinct word (target
// plus context, duplicates and the target itself dropped from context)
// contributes one mark to every synset listing it.
inline BruteResult disambiguate(const RawTaxonomy& t, const std::string& target,
                                const std::vector<std::string>& context) {
  std::set<std::string> words{target};
  words.insert(context.begin(), context.end());

  std::set<int> roots;
  for (int s : t.senses(target)) {
    roots.insert(s);
    for (int a : ancestors(t, s)) roots.insert(a);
  }

  std::vector<Candidate> cands;
  for (int r : roots) {
    auto d = descendants(t, r);
    Candidate c{r, 0, static_cast<std::int64_t>(d.size())};
    for (int node : d) {
      for (const auto& w : words) {
        if (t.has_lemma(node, w)) ++c.marks;
      }
    }
    cands.push_back(c);
  }
  Candidate best = cands.front();
  for (const auto& c : cands) {
    if (ahead(t, c, best)) best = c;
  }
  BruteResult out;
  out.root = t.ids[best.root];
  out.marks = best.marks;
  out.size = best.size;
  auto d = descendants(t, best.root);
  std::vector<std::string> chosen;
  for (int s : t.senses(target)) {
    if (d.contains(s)) chosen.push_back(t.ids[s]);
  }
  std::sort(chosen.begin(), chosen.end());
  out.chosen = chosen;
  return out;
}

}  // namespace oracle

#endif  // LEXLINK_TESTS_ORACLE_HPP
