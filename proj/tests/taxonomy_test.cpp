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

#include "lexlink/taxonomy.hpp"

#include <random>

#include "gtest/gtest.h"
#include "lexlink/manifest.hpp"
#include "oracle.hpp"

namespace lexlink {
namespace {

TaxonomyIndex MergeFixture() {
  return load_taxonomy(read_file(LEXLINK_DATA_DIR "/merge/taxonomy.tsv"));
}

std::vector<std::string> Ids(const std::vector<SynsetId>& v) {
  std::vector<std::string> out;
  for (const auto& id : v) out.push_back(id.str());
  return out;
}

TEST(LoadTaxonomy, SingleRootLine) {
  auto tax = load_taxonomy("n001\tact,human_action,human_activity\t\n");
  ASSERT_EQ(tax.size(), 1u);
  EXPECT_EQ(tax.roots(), std::set<SynsetId>{SynsetId("n001")});
  const Synset& s = tax.synset(SynsetId("n001"));
  EXPECT_EQ(s.lemmas,
            (std::vector<std::string>{"act", "human_action", "human_activity"}));
  EXPECT_TRUE(s.hypernyms.empty());
}

TEST(LoadTaxonomy, EmptyInput) {
  auto tax = load_taxonomy("");
  EXPECT_EQ(tax.size(), 0u);
  EXPECT_TRUE(tax.roots().empty());
  EXPECT_EQ(load_taxonomy("# only a comment\n\n").size(), 0u);
}

TEST(LoadTaxonomy, TwoNodeCycleNamesBothIds) {
  try {
    load_taxonomy("a\tx\tb\nb\ty\ta\n");
    FAIL() << "expected a cycle error";
  } catch (const ParseError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("cycle"), std::string::npos) << msg;
    EXPECT_NE(msg.find("a"), std::string::npos) << msg;
    EXPECT_NE(msg.find("b"), std::string::npos) << msg;
    EXPECT_GT(e.line(), 0u);
  }
}

TEST(LoadTaxonomy, SelfHypernymIsACycle) {
  EXPECT_THROW(load_taxonomy("a\tx\ta\n"), ParseError);
}

TEST(LoadTaxonomy, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      load_taxonomy(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("# c\na\tx\t\na\ty\t\n"), 3u);        // duplicate id
  EXPECT_EQ(line_of("a\tx\t\nb\ty\tzz\n"), 2u);           // dangling hypernym
  EXPECT_EQ(line_of("a\tx\t\nb\t\t\n"), 2u);              // empty lemma list
  EXPECT_EQ(line_of("a\tx\t\nb\n"), 2u);                  // field count
  EXPECT_EQ(line_of("a\tx\t\nb\ty\t\tq\n"), 2u);          // field count
}

TEST(SensesOf, MergeFixture) {
  auto tax = MergeFixture();
  EXPECT_EQ(tax.senses_of("abduction"), std::set<SynsetId>{SynsetId("n008")});
  EXPECT_EQ(tax.senses_of("amphibian").size(), 3u);
  EXPECT_TRUE(tax.senses_of("zzzz").empty());
  // Multiword lemmas are stored with underscores.
  EXPECT_EQ(tax.senses_of("human_action"), std::set<SynsetId>{SynsetId("n001")});
}

TEST(IsMonosemous, MergeFixture) {
  auto tax = MergeFixture();
  EXPECT_TRUE(tax.is_monosemous("abduction"));
  EXPECT_FALSE(tax.is_monosemous("banishment"));
  EXPECT_FALSE(tax.is_monosemous("zzzz"));
}

TEST(Descendants, LeafAndRoot) {
  auto tax = MergeFixture();
  EXPECT_EQ(tax.descendants(SynsetId("n008")), std::set<SynsetId>{SynsetId("n008")});

  // Reachability worked out by hand on the fixture file: the abduction chain
  // plus rejection/banishment and the failure/mistake branch.
  std::set<SynsetId> expected;
  for (const char* id : {"n001", "n002", "n003", "n004", "n005", "n006", "n007",
                         "n008", "n017", "n018", "n019", "n020", "n021"}) {
    expected.insert(SynsetId(id));
  }
  EXPECT_EQ(tax.descendants(SynsetId("n001")), expected);
  EXPECT_THROW(tax.descendants(SynsetId("nope")), LookupError);
}

TEST(Ancestors, AbductionChain) {
  auto tax = MergeFixture();
  auto a = Ids(tax.ancestors(SynsetId("n008")));
  EXPECT_EQ(a, (std::vector<std::string>{"n007", "n006", "n005", "n004", "n003",
                                         "n002", "n001"}));
  EXPECT_TRUE(tax.ancestors(SynsetId("n001")).empty());
  EXPECT_THROW(tax.ancestors(SynsetId("nope")), LookupError);
}

TEST(Ancestors, DiamondListsSharedGrandparentOnce) {
  auto tax = load_taxonomy("g\tgp\t\nl\tleft\tg\nr\tright\tg\nc\tchild\tl,r\n");
  EXPECT_EQ(Ids(tax.ancestors(SynsetId("c"))),
            (std::vector<std::string>{"l", "r", "g"}));
  EXPECT_EQ(tax.descendants(SynsetId("g")).size(), 4u);
}

TEST(TaxonomyProperties, LemmaIndexIsInverseOfLemmaLists) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto raw = oracle::random_taxonomy(rng, 60, 30);
    auto tax = load_taxonomy(raw.to_tsv());
    for (const auto& [lemma, ids] : tax.lemma_index()) {
      for (const auto& id : ids) {
        const auto& ls = tax.synset(id).lemmas;
        EXPECT_NE(std::find(ls.begin(), ls.end(), lemma), ls.end());
      }
    }
    for (const auto& [id, s] : tax.synsets()) {
      for (const auto& l : s.lemmas) EXPECT_TRUE(tax.senses_of(l).contains(id));
    }
  }
}

TEST(TaxonomyProperties, DescendantsMatchBruteForceReachability) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> size(1, 200);
  for (int trial = 0; trial < 100; ++trial) {
    auto raw = oracle::random_taxonomy(rng, size(rng), 40);
    auto tax = load_taxonomy(raw.to_tsv());
    std::uniform_int_distribution<int> pick(0, raw.size() - 1);
    for (int k = 0; k < 5; ++k) {
      int r = pick(rng);
      std::set<SynsetId> expected;
      for (int i : oracle::descendants(raw, r)) expected.insert(SynsetId(raw.ids[i]));
      ASSERT_EQ(tax.descendants(SynsetId(raw.ids[r])), expected)
          << "trial " << trial << " root " << raw.ids[r];
    }
  }
}

TEST(TaxonomyProperties, AncestorDescendantDuality) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto raw = oracle::random_taxonomy(rng, 40, 20);
    auto tax = load_taxonomy(raw.to_tsv());
    for (const auto& [r, unused] : tax.synsets()) {
      auto down = tax.descendants(r);
      for (const auto& [s, unused2] : tax.synsets()) {
        auto up = tax.ancestors(s);
        bool r_above_s = std::find(up.begin(), up.end(), r) != up.end();
        EXPECT_EQ(down.contains(s) && s != r, r_above_s);
      }
    }
  }
}

TEST(TaxonomyProperties, AncestorsOrderedByDistance) {
  std::mt19937 rng(14);
  auto raw = oracle::random_taxonomy(rng, 150, 40);
  auto tax = load_taxonomy(raw.to_tsv());
  for (const auto& [s, unused] : tax.synsets()) {
    auto up = tax.ancestors(s);
    std::set<SynsetId> unique(up.begin(), up.end());
    EXPECT_EQ(unique.size(), up.size());
    // Each ancestor's distance is one more than some earlier entry (or 1).
    std::map<SynsetId, int> dist{{s, 0}};
    int last = 0;
    for (const auto& a : up) {
      int best = 1 << 20;
      for (const auto& child : tax.hyponyms(a)) {
        if (dist.contains(child)) best = std::min(best, dist[child] + 1);
      }
      ASSERT_LT(best, 1 << 20);
      EXPECT_GE(best, last);
      dist[a] = best;
      last = best;
    }
  }
}

TEST(TaxonomyProperties, SerializeRoundTrip) {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    auto raw = oracle::random_taxonomy(rng, 80, 30);
    auto tax = load_taxonomy(raw.to_tsv());
    auto text = serialize_taxonomy(tax);
    auto again = load_taxonomy(text);
    EXPECT_EQ(again, tax);
    EXPECT_EQ(serialize_taxonomy(again), text);
  }
  auto fixture = MergeFixture();
  EXPECT_EQ(load_taxonomy(serialize_taxonomy(fixture)), fixture);
}

}  // namespace
}  // namespace lexlink
