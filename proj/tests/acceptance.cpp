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

// Acceptance report: one PASS/FAIL line per criterion. Every check is an
// exact comparison; the only tolerances are the wall-clock budgets printed
// on each line. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reference_diagrams.hpp"
#include "metasylv/chain.hpp"
#include "metasylv/decreasing_tree.hpp"
#include "metasylv/lattice.hpp"
#include "metasylv/metasylvester.hpp"
#include "metasylv/mpermutation.hpp"
#include "metasylv/tamari.hpp"
#include "metasylv/verify.hpp"
#include "metasylv/weak_order.hpp"

namespace {

using namespace metasylv;
using Clock = std::chrono::steady_clock;
using EdgeSet = std::set<std::pair<std::string, std::string>>;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  bool ok = true;
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      failures.push_back(what);
    }
  }
};

int failures_total = 0;

void report(int id, const std::string& title, Criterion c) {
  std::cout << (c.ok ? "PASS" : "FAIL") << "  [" << id << "] " << title;
  if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
  std::cout << "\n";
  for (const auto& f : c.failures) std::cout << "      - " << f << "\n";
  if (!c.ok) ++failures_total;
  std::cout.flush();
}

template <class Fn>
void run(int id, const std::string& title, Fn&& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  report(id, title, std::move(c));
}

EdgeSet labelled(const LatticeDiagram& d) {
  EdgeSet out;
  for (const auto& [lo, hi] : d.covers) {
    out.insert({d.elements[lo], d.elements[hi]});
  }
  return out;
}

// Number of connected components of the rewriting graph on all
// m-permutations of shape (n, m).
std::uint64_t brute_force_class_count(int n, int m) {
  const auto all = all_mpermutations(n, m);
  std::unordered_map<std::string, int> index;
  for (int k = 0; k < static_cast<int>(all.size()); ++k) {
    index.emplace(all[k].to_string(), k);
  }
  std::vector<int> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::uint64_t components = all.size();
  for (int k = 0; k < static_cast<int>(all.size()); ++k) {
    for (const auto& nb : rewrite_neighbors(all[k])) {
      const int a = root(k);
      const int b = root(index.at(nb.to_string()));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

std::string tree_label(const DecreasingTree& t, int label) {
  if (label == 0) return ".";
  std::string out = std::to_string(label) + "(";
  for (int c : t.children(label)) out += tree_label(t, c);
  return out + ")";
}

std::string chain_label(const MetaChain& chain) {
  std::string out;
  for (const auto& p : chain.perms()) {
    if (!out.empty()) out += "_";
    out += p.to_string();
  }
  return out;
}

// True when relabelling `base` through `relabel` gives exactly `other`.
bool same_under_relabel(const LatticeDiagram& base, const LatticeDiagram& other,
                        const std::map<std::string, std::string>& relabel) {
  if (base.size() != other.size()) return false;
  std::vector<int> map(base.size(), -1);
  for (int k = 0; k < base.size(); ++k) {
    const auto it = relabel.find(base.elements[k]);
    if (it == relabel.end()) return false;
    map[k] = other.index_of(it->second);
    if (map[k] < 0) return false;
  }
  return is_isomorphism(base, other, map);
}

void criterion_1(Criterion& c) {
  const std::uint64_t table[5][5] = {{1, 2, 6, 24, 120},
                                     {1, 3, 15, 105, 945},
                                     {1, 4, 28, 280, 3640},
                                     {1, 5, 45, 585, 9945},
                                     {1, 6, 66, 1056, 22176}};
  const auto start = Clock::now();
  double slowest = 0;
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      const auto t = Clock::now();
      const std::uint64_t got = count_classes(n, m);
      slowest = std::max(slowest, since(t));
      c.expect(got == table[m - 1][n - 1],
               "count_classes(" + std::to_string(n) + "," + std::to_string(m) +
                   ") = " + std::to_string(got));
    }
  }
  c.expect(slowest < 1e-3, "formula mode slower than 1 ms");
  int shapes = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; n * m <= 8; ++m) {
      const std::uint64_t brute = brute_force_class_count(n, m);
      c.expect(brute == count_classes(n, m),
               "partition of (" + std::to_string(n) + "," + std::to_string(m) +
                   ") has " + std::to_string(brute) + " classes");
      ++shapes;
    }
  }
  const double total = since(start);
  c.expect(total < 120.0, "runtime over 120 s");
  std::ostringstream d;
  d << "25 table entries, slowest formula " << slowest * 1e6 << " us < 1000 us; "
    << shapes << " shapes partitioned by rewriting; " << total << " s < 120 s";
  c.detail = d.str();
}

void criterion_2(Criterion& c) {
  const auto weak = weak_diagram(2, 2);
  c.expect(weak.size() == 6, "weak(2,2) size " + std::to_string(weak.size()));
  c.expect(weak.covers.size() == 6, "weak(2,2) covers");
  const EdgeSet edges = labelled(weak);
  c.expect(edges == EdgeSet(reference::kWeakTwoTwo.begin(),
                            reference::kWeakTwoTwo.end()),
           "weak(2,2) edges differ from the listed diagram");
  // Ideal below 3412 in the weak order on S4, with its own covers.
  const auto top = Permutation::parse("3412");
  std::vector<Permutation> ideal;
  for (const auto& p : all_permutations(4)) {
    if (weak_leq(p, top)) ideal.push_back(p);
  }
  std::vector<std::string> labels;
  for (const auto& p : ideal) labels.push_back(p.to_string());
  const auto ideal_diagram = diagram_from_order(
      LatticeKind::kWeak, 4, 1, labels,
      [&](int a, int b) { return weak_leq(ideal[a], ideal[b]); });
  EdgeSet mapped;
  for (const auto& [lo, hi] : edges) {
    mapped.insert({standardize(MPermutation::parse(lo)).to_string(),
                   standardize(MPermutation::parse(hi)).to_string()});
  }
  c.expect(ideal.size() == 6, "ideal below 3412 has " +
                                  std::to_string(ideal.size()) + " elements");
  c.expect(mapped == labelled(ideal_diagram),
           "standardization is not edge-for-edge onto the ideal");
  c.detail = "6 elements, 6 covers, std onto [1234, 3412] edge-for-edge";
}

void criterion_3(Criterion& c) {
  const auto meta = metasylvester_diagram(3, 2);
  std::set<std::string> expected_elements;
  for (const auto& [word, label] : reference::kChainLabels) {
    expected_elements.insert(word);
  }
  c.expect(std::set<std::string>(meta.elements.begin(), meta.elements.end()) ==
               expected_elements,
           "elements differ from the 15 listed");
  c.expect(meta.covers.size() == 20,
           "cover count " + std::to_string(meta.covers.size()));
  c.expect(labelled(meta) == EdgeSet(reference::kMetaThreeTwo.begin(),
                                     reference::kMetaThreeTwo.end()),
           "cover edges differ from the listed 20");

  // Tree-labelled poset ordered by tree-inversion inclusion.
  std::vector<DecreasingTree> trees;
  std::vector<MetaChain> chains;
  std::vector<std::string> tree_labels, chain_labels;
  std::map<std::string, std::string> to_tree, to_chain;
  for (const auto& word : meta.elements) {
    const auto sigma = MPermutation::parse(word);
    trees.push_back(dt(sigma));
    chains.push_back(psi_inverse(MetasylvesterClass::of(sigma)));
    tree_labels.push_back(tree_label(trees.back(), trees.back().root()));
    chain_labels.push_back(chain_label(chains.back()));
    to_tree[word] = tree_labels.back();
    to_chain[word] = chain_labels.back();
    const auto it = std::find_if(
        reference::kChainLabels.begin(), reference::kChainLabels.end(),
        [&](const auto& entry) { return entry.first == word; });
    c.expect(it != reference::kChainLabels.end() &&
                 it->second == chain_labels.back(),
             "chain label of " + word + " is " + chain_labels.back());
  }
  const auto tree_diagram = diagram_from_order(
      LatticeKind::kMetasylvester, 3, 2, tree_labels, [&](int a, int b) {
        return tree_inversions_of_tree(trees[a]).is_subset_of(
            tree_inversions_of_tree(trees[b]));
      });
  const auto chain_diagram = diagram_from_order(
      LatticeKind::kMetasylvester, 3, 2, chain_labels,
      [&](int a, int b) { return chain_leq(chains[a], chains[b]); });
  c.expect(same_under_relabel(meta, tree_diagram, to_tree),
           "dt relabelling is not an isomorphism");
  c.expect(same_under_relabel(meta, chain_diagram, to_chain),
           "psi^-1 relabelling is not an isomorphism");
  c.expect(verify_diagram(meta).ok, "not a lattice");
  c.detail = "15 elements, 20 covers; dt and psi^-1 relabellings isomorphic";
}

void criterion_4(Criterion& c) {
  c.expect(standardize(MPermutation::parse("122313")).to_string() == "134526",
           "std(122313)");

  std::set<std::string> coinv;
  for (const auto& ci : coinversions(MPermutation::parse("2121")).to_vector()) {
    coinv.insert(std::to_string(ci.smaller.letter) + "_" +
                 std::to_string(ci.smaller.index) + "," +
                 std::to_string(ci.larger.letter) + "_" +
                 std::to_string(ci.larger.index));
  }
  c.expect(coinv == std::set<std::string>{"1_1,2_1", "1_2,2_1", "1_2,2_2"},
           "coinv(2121)");

  std::string code;
  for (int v : cocode(Permutation::parse("23154")).entries) {
    code += std::to_string(v);
  }
  c.expect(code == "20010", "cocode(23154) = " + code);

  std::set<std::tuple<int, int, int>> ti;
  for (const auto& t :
       tree_inversions(MPermutation::parse("12132434")).to_vector()) {
    ti.insert({t.a, t.b, t.i});
  }
  c.expect(ti == std::set<std::tuple<int, int, int>>{{1, 2, 1}, {1, 3, 1},
                                                     {2, 3, 1}, {1, 4, 1},
                                                     {2, 4, 1}, {3, 4, 1}},
           "TI(12132434)");

  const auto cls = MetasylvesterClass::of(MPermutation::parse("331162265445"));
  c.expect(tree_code(cls).entries == std::vector<int>{2, 3, 0, 3, 2, 0},
           "tree-code of 331162265445");

  const auto tree = dt(MPermutation::parse("133126245465"));
  const auto expected_tree = DecreasingTree::from_children(
      3, {{}, {0, 0, 0}, {0, 0, 0}, {0, 0, 1}, {0, 0, 0}, {0, 4, 0}, {3, 2, 5}});
  c.expect(tree == expected_tree, "dt(133126245465)");

  std::set<std::string> succ;
  for (const auto& up :
       meta_covers(MetasylvesterClass::of(MPermutation::parse("22311344")))) {
    succ.insert(up.canonical().to_string());
  }
  c.expect(succ == std::set<std::string>{"32211344", "22331144", "22431134"},
           "successors of 22311344");

  const MetaChain chain(
      {Permutation::parse("213"), Permutation::parse("231")});
  std::set<std::tuple<int, int, int>> cv;
  for (const auto& t : cinv(chain).to_vector()) cv.insert({t.a, t.b, t.i});
  c.expect(cv == std::set<std::tuple<int, int, int>>{{1, 2, 1}, {1, 3, 1},
                                                     {1, 2, 2}},
           "Cinv((213,231))");
  c.expect(psi(chain).canonical().to_string() == "223113",
           "class of (213,231)");
  c.detail = "8 worked examples, exact";
}

void criterion_5(Criterion& c) {
  VerifyOptions options;
  options.max_nm = 8;
  const auto start = Clock::now();
  VerifyReport all;
  for (Suite s : {Suite::kWeakLattice, Suite::kIntervals, Suite::kSemiQuotient,
                  Suite::kBijections}) {
    auto part = run_verification(s, options);
    all.results.insert(all.results.end(), part.results.begin(),
                       part.results.end());
  }
  const double seconds = since(start);
  for (const auto& r : all.results) {
    c.expect(r.passed, r.suite + "/" + r.name + " " + r.counterexample);
  }
  for (const char* name :
       {"class-interval", "max-stability", "join-semi-quotient",
        "meet-counterexample", "psi-roundtrip", "psi-order-isomorphism",
        "tree-inversion-monotonicity", "interval-closure"}) {
    const auto* r = all.find(name);
    c.expect(r != nullptr && r->instances > 0,
             std::string(name) + " not exercised");
  }
  if (const auto* r = all.find("meet-counterexample")) {
    c.expect(r->expected_negative &&
                 r->counterexample.find("121332 ^ 131223") !=
                     std::string::npos &&
                 r->counterexample.find("113223") != std::string::npos &&
                 r->counterexample.find("311223") != std::string::npos,
             "meet counterexample witness: " + r->counterexample);
  }
  c.expect(seconds < 600.0, "runtime over 600 s");
  std::ostringstream d;
  d << all.results.size() << " properties, every (n,m) with n*m <= 8; "
    << seconds << " s < 600 s";
  c.detail = d.str();
}

void criterion_6(Criterion& c) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& sigma : all_mpermutations(n, 1)) {
      c.expect(meta_class(sigma).size() == 1,
               "class of " + sigma.to_string() + " is not a singleton");
    }
    const auto meta = metasylvester_diagram(n, 1);
    const auto weak = weak_diagram(n, 1);
    c.expect(meta.elements == weak.elements && meta.covers == weak.covers,
             "metasylvester(" + std::to_string(n) + ",1) differs from weak");
  }
  const int catalan[] = {1, 2, 5, 14, 42};
  std::string counts;
  for (int n = 1; n <= 5; ++n) {
    const auto real = mtamari_lattice(n, 1);
    counts += (counts.empty() ? "" : ",") + std::to_string(real.ballot.size());
    c.expect(real.ballot.size() == catalan[n - 1],
             "m-Tamari(" + std::to_string(n) + ",1) size");
    c.expect(real.certified(), "realizations not certified at m = 1");
    c.expect(enumerate_ballot_paths(n, 1).size() ==
                     static_cast<std::size_t>(catalan[n - 1]) &&
                 all_dyck_paths(n).size() ==
                     static_cast<std::size_t>(catalan[n - 1]),
             "path enumerators disagree with Catalan at n = " +
                 std::to_string(n));
    // Classical Tamari on Dyck paths; N -> u, E -> d.
    const auto dyck = all_dyck_paths(n);
    std::vector<std::string> labels;
    std::map<std::string, std::string> relabel;
    for (const auto& p : dyck) labels.push_back(p.steps());
    for (const auto& label : real.ballot.elements) {
      std::string steps = label;
      std::replace(steps.begin(), steps.end(), 'N', 'u');
      std::replace(steps.begin(), steps.end(), 'E', 'd');
      relabel[label] = steps;
    }
    const auto tamari = diagram_from_order(
        LatticeKind::kMTamari, n, 1, labels,
        [&](int a, int b) { return tamari_leq(dyck[a], dyck[b]); });
    c.expect(same_under_relabel(real.ballot, tamari, relabel),
             "m-Tamari(" + std::to_string(n) + ",1) is not the Tamari lattice");
  }
  c.detail = "singleton classes and weak order for n <= 5; Tamari sizes " +
             counts;
}

void criterion_7(Criterion& c) {
  const auto start = Clock::now();
  for (auto [n, m] : {std::pair{2, 2}, {3, 2}, {4, 2}, {3, 3}}) {
    const auto real = mtamari_lattice(n, m);
    const std::string at =
        "(" + std::to_string(n) + "," + std::to_string(m) + ") ";
    c.expect(real.certified(), at + "realizations not certified");
    c.expect(is_isomorphism(real.ballot, real.sylvester,
                            real.ballot_to_sylvester),
             at + "ballot vs sylvester");
    c.expect(is_isomorphism(real.quotient, real.sylvester,
                            real.quotient_to_sylvester),
             at + "quotient vs sylvester");
    for (const auto* d : {&real.ballot, &real.sylvester, &real.quotient}) {
      c.expect(verify_diagram(*d).ok, at + "not a lattice");
    }
  }
  const auto diagram = mtamari_diagram(3, 2);
  const std::set<std::string> elements = {
      "112233", "211233", "221133", "223113", "223311", "311223",
      "321123", "322113", "322311", "331122", "332112", "332211"};
  c.expect(std::set<std::string>(diagram.elements.begin(),
                                 diagram.elements.end()) == elements,
           "(3,2) elements");
  const EdgeSet drawn = {
      {"112233", "211233"}, {"112233", "311223"}, {"211233", "221133"},
      {"211233", "321123"}, {"221133", "223113"}, {"311223", "321123"},
      {"311223", "331122"}, {"223113", "223311"}, {"223113", "322113"},
      {"321123", "322113"}, {"321123", "332112"}, {"223311", "322311"},
      {"322113", "322311"}, {"331122", "332112"}, {"322311", "332211"},
      {"332112", "332211"}};
  EdgeSet got;
  for (const auto& [lo, hi] : diagram.covers) {
    got.insert({diagram.elements[hi], diagram.elements[lo]});
  }
  c.expect(got == drawn, "(3,2) diagram edges");
  const auto split = split_ballot_path(BallotPath::parse("NNEEENEEE", 2));
  c.expect(split.paths.size() == 2 && split.paths[0].steps() == "uududd" &&
               split.paths[1].steps() == "uuddud",
           "split(NNEEENEEE) = " + split.to_string());
  const double seconds = since(start);
  c.expect(seconds < 300.0, "runtime over 300 s");
  std::ostringstream d;
  d << "4 sizes pairwise isomorphic; (3,2) 12 elements, 16 covers; split "
       "black uududd red uuddud; "
    << seconds << " s < 300 s";
  c.detail = d.str();
}

}  // namespace

int main() {
  const auto start = Clock::now();
  run(1, "class counts", criterion_1);
  run(2, "weak ideal (2,2) and standardization", criterion_2);
  run(3, "metasylvester lattice (3,2)", criterion_3);
  run(4, "worked examples", criterion_4);
  run(5, "structural properties, exhaustive at n*m <= 8", criterion_5);
  run(6, "m = 1 degeneration", criterion_6);
  run(7, "m-Tamari realizations", criterion_7);
  run(8, "acceptance mode", [](Criterion& c) {
    c.detail =
        "exact reproduction plus exhaustive verification; no numeric "
        "tolerance beyond the runtime budgets";
  });
  std::cout << "total " << since(start) << " s\n";
  return failures_total == 0 ? 0 : 1;
}
