// Copyright 2026 The metasylv Authors. All Rights Reserved.
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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "metasylv/errors.hpp"
#include "metasylv/tamari.hpp"
#include "metasylv/weak_order.hpp"
#include "oracles.hpp"

namespace metasylv {
namespace {

TEST(Sylvester, RewritingMatchesOracle) {
  for (auto [n, m] : {std::pair{3, 2}, {4, 1}, {2, 3}}) {
    for (const auto& w : oracle::all_words(n, m)) {
      std::set<std::string> got;
      for (const auto& x : sylv_class(MPermutation::parse(w))) {
        got.insert(x.to_string());
      }
      ASSERT_EQ(got, oracle::sylv_class(w)) << w;
    }
  }
}

TEST(Sylvester, KeyIdentifiesClasses) {
  for (auto [n, m] : {std::pair{3, 2}, {4, 1}, {2, 3}, {5, 1}}) {
    std::map<std::string, std::set<std::string>> by_key;
    for (const auto& w : oracle::all_words(n, m)) {
      by_key[sylvester_key(MPermutation::parse(w))].insert(w);
    }
    for (const auto& [key, members] : by_key) {
      EXPECT_EQ(members, oracle::sylv_class(*members.begin())) << key;
    }
    EXPECT_EQ(by_key.size(), oracle::fuss_catalan(n, m));
  }
}

TEST(Sylvester, RefinedByMetasylvester) {
  for (const auto& w : oracle::all_words(4, 2)) {
    const auto sigma = MPermutation::parse(w);
    EXPECT_EQ(sylvester_key(sigma), sylvester_key(maxclass(sigma)));
  }
}

TEST(BinaryTree, InsertionShapes) {
  EXPECT_TRUE(bst_insert(Permutation::parse("1")).left().empty());
  EXPECT_EQ(bst_insert(Permutation::parse("123")).size(), 3);
  EXPECT_EQ(bst_insert(Permutation::parse("132")).to_string(),
            bst_insert(Permutation::parse("312")).to_string());
  EXPECT_NE(bst_insert(Permutation::parse("213")).to_string(),
            bst_insert(Permutation::parse("231")).to_string());
  EXPECT_NE(bst_insert(Permutation::parse("123")).to_string(),
            bst_insert(Permutation::parse("321")).to_string());
}

TEST(Dyck, ParseRejectsInvalid) {
  EXPECT_THROW(DyckPath::parse("du"), InvalidPath);
  EXPECT_THROW(DyckPath::parse("uud"), InvalidPath);
  EXPECT_THROW(DyckPath::parse("uxd"), InvalidPath);
  EXPECT_EQ(DyckPath::parse("uudd").semilength(), 2);
}

TEST(Dyck, CatalanCounts) {
  const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(all_dyck_paths(n).size(), catalan[n]);
  }
}

TEST(Dyck, RotationClosureIsTamariOrder) {
  for (int n = 1; n <= 6; ++n) {
    const auto paths = all_dyck_paths(n);
    std::map<DyckPath, std::set<DyckPath>> reach;
    for (const auto& p : paths) {
      std::set<DyckPath> seen{p};
      std::vector<DyckPath> stack{p};
      while (!stack.empty()) {
        const auto cur = stack.back();
        stack.pop_back();
        for (const auto& next : tamari_covers(cur)) {
          if (seen.insert(next).second) stack.push_back(next);
        }
      }
      reach[p] = seen;
    }
    for (const auto& a : paths) {
      for (const auto& b : paths) {
        ASSERT_EQ(reach[a].count(b) == 1, tamari_leq(a, b))
            << a.steps() << " " << b.steps();
      }
    }
  }
}

TEST(Ballot, CountsMatchFussCatalanAndOracle) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 0; n <= 5; ++n) {
      if (n == 0) continue;
      auto expected = oracle::ballot_paths(n, m);
      std::sort(expected.begin(), expected.end());
      std::vector<std::string> got;
      for (const auto& p : enumerate_ballot_paths(n, m)) got.push_back(p.steps());
      EXPECT_EQ(got, expected);
      EXPECT_EQ(count_ballot_paths(n, m), oracle::fuss_catalan(n, m));
    }
  }
  EXPECT_EQ(count_ballot_paths(3, 2), 12u);
}

TEST(Ballot, ParseRejectsPathsBelowTheLine) {
  EXPECT_THROW(BallotPath::parse("ENN", 1), InvalidPath);
  EXPECT_THROW(BallotPath::parse("NNEEX", 1), InvalidPath);
  EXPECT_NO_THROW(BallotPath::parse("NEENEE", 2));
}

TEST(Ballot, RotationOnAStandardExample) {
  const auto before = BallotPath::parse("NENEEENNENEEEEENEE", 2);
  const auto after = BallotPath::parse("NENEENNENEEEEEENEE", 2);
  const auto covers = rotation_covers(before);
  EXPECT_NE(std::find(covers.begin(), covers.end(), after), covers.end());
}

TEST(Ballot, SplitWorkedExample) {
  const auto chain = split_ballot_path(BallotPath::parse("NNEEENEEE", 2));
  ASSERT_EQ(chain.paths.size(), 2u);
  EXPECT_EQ(chain.paths[0].steps(), "uududd");
  EXPECT_EQ(chain.paths[1].steps(), "uuddud");
  EXPECT_EQ(chain.to_string(), "uududd/uuddud");
}

TEST(Ballot, SplitIsInjective) {
  for (auto [n, m] : {std::pair{3, 2}, {4, 2}, {3, 3}, {2, 4}}) {
    std::set<DyckChain> seen;
    for (const auto& p : enumerate_ballot_paths(n, m)) {
      const auto chain = split_ballot_path(p);
      EXPECT_EQ(static_cast<int>(chain.paths.size()), m);
      EXPECT_TRUE(seen.insert(chain).second) << p.steps();
    }
  }
}

TEST(MTamari, ThreeRealizationsAgree) {
  for (auto [n, m] : {std::pair{2, 2}, {3, 2}, {4, 2}, {3, 3}}) {
    const auto real = mtamari_lattice(n, m);
    EXPECT_TRUE(real.certified()) << n << "," << m;
    EXPECT_TRUE(verify_diagram(real.ballot).ok);
    EXPECT_TRUE(verify_diagram(real.sylvester).ok);
    EXPECT_TRUE(verify_diagram(real.quotient).ok);
    EXPECT_TRUE(is_isomorphism(real.ballot, real.sylvester,
                               real.ballot_to_sylvester));
    EXPECT_TRUE(is_isomorphism(real.quotient, real.sylvester,
                               real.quotient_to_sylvester));
    EXPECT_EQ(static_cast<std::uint64_t>(real.ballot.size()),
              oracle::fuss_catalan(n, m));
  }
}

TEST(MTamari, ClassicalTamariWhenMIsOne) {
  const std::uint64_t catalan[] = {1, 2, 5, 14, 42};
  for (int n = 1; n <= 5; ++n) {
    const auto real = mtamari_lattice(n, 1);
    EXPECT_EQ(static_cast<std::uint64_t>(real.ballot.size()), catalan[n - 1]);
    EXPECT_TRUE(real.certified());
    // Ballot paths with m = 1 are Dyck paths; rotation is the Tamari order.
    const auto dyck = all_dyck_paths(n);
    const auto tamari = diagram_from_order(
        LatticeKind::kMTamari, n, 1,
        [&] {
          std::vector<std::string> labels;
          for (const auto& p : dyck) labels.push_back(p.steps());
          return labels;
        }(),
        [&](int a, int b) { return tamari_leq(dyck[a], dyck[b]); });
    EXPECT_EQ(tamari.covers.size(), real.ballot.covers.size());
  }
}

TEST(MTamari, SylvesterGroupsOfThreeByTwo) {
  const auto real = mtamari_lattice(3, 2);
  EXPECT_EQ(real.quotient.size(), 12);
  std::set<std::set<std::string>> groups;
  std::map<std::string, std::set<std::string>> by_key;
  for (const auto& cls : enumerate_classes(3, 2)) {
    by_key[sylvester_key(cls.canonical())].insert(cls.canonical().to_string());
  }
  for (const auto& [key, members] : by_key) {
    if (members.size() > 1) groups.insert(members);
  }
  EXPECT_EQ(groups, (std::set<std::set<std::string>>{
                        {"113223", "311223"},
                        {"113322", "311322", "331122"}}));
}

TEST(MTamari, SylvesterRealizationOfThreeByTwo) {
  const auto diagram = mtamari_diagram(3, 2);
  const std::vector<std::string> expected_elements = {
      "112233", "211233", "221133", "223113", "223311", "311223",
      "321123", "322113", "322311", "331122", "332112", "332211"};
  auto elements = diagram.elements;
  std::sort(elements.begin(), elements.end());
  EXPECT_EQ(elements, expected_elements);
  // Edges drawn top (weak-smaller) to bottom.
  const std::set<std::pair<std::string, std::string>> drawn = {
      {"112233", "211233"}, {"112233", "311223"}, {"211233", "221133"},
      {"211233", "321123"}, {"221133", "223113"}, {"311223", "321123"},
      {"311223", "331122"}, {"223113", "223311"}, {"223113", "322113"},
      {"321123", "322113"}, {"321123", "332112"}, {"223311", "322311"},
      {"322113", "322311"}, {"331122", "332112"}, {"322311", "332211"},
      {"332112", "332211"}};
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& [lo, hi] : diagram.covers) {
    // m-Tamari orientation reverses the weak order.
    got.insert({diagram.elements[hi], diagram.elements[lo]});
  }
  EXPECT_EQ(got, drawn);
  ASSERT_TRUE(diagram.annotations.count("ballot_path"));
  ASSERT_TRUE(diagram.annotations.count("dyck_chain"));
}

TEST(MTamari, SizeLimit) {
  MTamariOptions options;
  options.max_classes = 10;
  EXPECT_THROW(mtamari_lattice(3, 2, options), SizeLimit);
}

}  // namespace
}  // namespace metasylv
