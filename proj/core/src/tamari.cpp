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

#include "metasylv/tamari.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "metasylv/errors.hpp"
#include "metasylv/weak_order.hpp"

namespace metasylv {

std::vector<MPermutation> sylv_rewrite_neighbors(const MPermutation& sigma) {
  const int len = sigma.length();
  std::vector<Letter> word(sigma.word().begin(), sigma.word().end());
  // Smallest letter strictly after each position, per lower bound: keep the
  // set of later letters as a bitmask.
  std::vector<std::uint64_t> after(len + 1, 0);
  for (int k = len - 1; k >= 0; --k) {
    after[k] = after[k + 1] | 1ULL << (word[k] - 1);
  }
  std::vector<MPermutation> out;
  for (int k = 0; k + 1 < len; ++k) {
    const int a = std::min(word[k], word[k + 1]);
    const int c = std::max(word[k], word[k + 1]);
    if (a == c) continue;
    // Some b with a <= b < c occurs to the right of the pair.
    const std::uint64_t window = ((1ULL << (c - 1)) - 1) & ~((1ULL << (a - 1)) - 1);
    if (!(after[k + 2] & window)) continue;
    std::swap(word[k], word[k + 1]);
    out.push_back(
        MPermutation::from_letters_unchecked(word, sigma.n(), sigma.m()));
    std::swap(word[k], word[k + 1]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MPermutation> sylv_class(const MPermutation& sigma) {
  std::set<MPermutation> visited{sigma};
  std::deque<MPermutation> queue{sigma};
  while (!queue.empty()) {
    const MPermutation current = std::move(queue.front());
    queue.pop_front();
    for (auto& next : sylv_rewrite_neighbors(current)) {
      if (visited.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {visited.begin(), visited.end()};
}

MPermutation sylv_maxclass(const MPermutation& sigma) {
  const auto members = sylv_class(sigma);
  const MPermutation* best = &members.front();
  for (const auto& mu : members) {
    if (inversion_count(mu) > inversion_count(*best)) best = &mu;
  }
  for (const auto& mu : members) {
    METASYLV_INVARIANT(weak_leq(mu, *best), "sylvester class has no maximum");
  }
  return *best;
}

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  std::vector<bool> bits;
  bits.reserve(1 + left.preorder_.size() + right.preorder_.size());
  bits.push_back(true);
  bits.insert(bits.end(), left.preorder_.begin(), left.preorder_.end());
  bits.insert(bits.end(), right.preorder_.begin(), right.preorder_.end());
  return BinaryTree(std::move(bits));
}

int BinaryTree::size() const {
  return static_cast<int>(std::count(preorder_.begin(), preorder_.end(), true));
}

std::size_t BinaryTree::span_at(std::size_t start) const {
  std::size_t pending = 1;
  std::size_t k = start;
  while (pending > 0) {
    pending += preorder_[k++] ? 1 : -1;
  }
  return k - start;
}

BinaryTree BinaryTree::left() const {
  if (empty()) throw std::logic_error("left() of the empty tree");
  const std::size_t len = span_at(1);
  return BinaryTree({preorder_.begin() + 1, preorder_.begin() + 1 + len});
}

BinaryTree BinaryTree::right() const {
  if (empty()) throw std::logic_error("right() of the empty tree");
  const std::size_t start = 1 + span_at(1);
  return BinaryTree({preorder_.begin() + start, preorder_.end()});
}

std::string BinaryTree::to_string() const {
  if (empty()) return "";
  return "(" + left().to_string() + "." + right().to_string() + ")";
}

namespace {

struct SearchTree {
  std::vector<int> key;
  std::vector<int> left;
  std::vector<int> right;

  int insert(int root, int value) {
    const int id = static_cast<int>(key.size());
    key.push_back(value);
    left.push_back(-1);
    right.push_back(-1);
    if (root < 0) return id;
    int at = root;
    while (true) {
      int& next = value <= key[at] ? left[at] : right[at];
      if (next < 0) {
        next = id;
        return root;
      }
      at = next;
    }
  }

  BinaryTree shape(int at) const {
    if (at < 0) return BinaryTree();
    return BinaryTree::node(shape(left[at]), shape(right[at]));
  }
};

}  // namespace

BinaryTree bst_insert(std::span<const Letter> word) {
  SearchTree tree;
  int root = -1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    root = tree.insert(root, *it);
  }
  return tree.shape(root);
}

BinaryTree bst_insert(const Permutation& p) { return bst_insert(p.word()); }
BinaryTree bst_insert(const MPermutation& sigma) {
  return bst_insert(sigma.word());
}

DyckPath DyckPath::parse(std::string_view steps) {
  int height = 0;
  for (char c : steps) {
    if (c == 'u') {
      ++height;
    } else if (c == 'd') {
      if (--height < 0) {
        throw InvalidPath("Dyck path '" + std::string(steps) +
                          "' goes below zero");
      }
    } else {
      throw InvalidPath("Dyck path '" + std::string(steps) +
                        "' has a step other than u/d");
    }
  }
  if (height != 0) {
    throw InvalidPath("Dyck path '" + std::string(steps) + "' is unbalanced");
  }
  return DyckPath(std::string(steps));
}

namespace {

std::string dyck_steps(const BinaryTree& tree, DyckConvention convention) {
  if (tree.empty()) return "";
  const std::string left = dyck_steps(tree.left(), convention);
  const std::string right = dyck_steps(tree.right(), convention);
  if (convention == DyckConvention::kSymmetric) {
    return right + "u" + left + "d";
  }
  return "u" + left + "d" + right;
}

// Index of the down step matching the up step at `i`.
std::size_t matching_down(std::string_view steps, std::size_t i) {
  int height = 0;
  for (std::size_t k = i; k < steps.size(); ++k) {
    height += steps[k] == 'u' ? 1 : -1;
    if (height == 0) return k;
  }
  throw std::logic_error("unbalanced Dyck word");
}

}  // namespace

DyckPath dyck_of_tree(const BinaryTree& tree, DyckConvention convention) {
  return DyckPath::parse(dyck_steps(tree, convention));
}

std::vector<int> excursion_lengths(const DyckPath& path) {
  const std::string& steps = path.steps();
  std::vector<int> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == 'u') {
      out.push_back(static_cast<int>(matching_down(steps, i) - i + 1) / 2);
    }
  }
  return out;
}

bool tamari_leq(const DyckPath& a, const DyckPath& b) {
  if (a.semilength() != b.semilength()) {
    throw ShapeMismatch("Dyck paths of different semilength");
  }
  const auto la = excursion_lengths(a);
  const auto lb = excursion_lengths(b);
  for (std::size_t k = 0; k < la.size(); ++k) {
    if (la[k] > lb[k]) return false;
  }
  return true;
}

std::vector<DyckPath> tamari_covers(const DyckPath& path) {
  const std::string& steps = path.steps();
  std::vector<DyckPath> out;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i] != 'd' || steps[i + 1] != 'u') continue;
    const std::size_t j = matching_down(steps, i + 1);
    std::string next = steps.substr(0, i) + steps.substr(i + 1, j - i) + "d" +
                       steps.substr(j + 1);
    out.push_back(DyckPath::parse(next));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DyckPath> all_dyck_paths(int semilength) {
  std::vector<DyckPath> out;
  std::string steps;
  auto extend = [&](auto&& self, int ups, int downs) -> void {
    if (ups == semilength && downs == semilength) {
      out.push_back(DyckPath::parse(steps));
      return;
    }
    if (downs < ups) {
      steps.push_back('d');
      self(self, ups, downs + 1);
      steps.pop_back();
    }
    if (ups < semilength) {
      steps.push_back('u');
      self(self, ups + 1, downs);
      steps.pop_back();
    }
  };
  extend(extend, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

BallotPath BallotPath::parse(std::string_view steps, int m) {
  if (m < 1) throw InvalidPath("ballot paths need m >= 1");
  int north = 0;
  int east = 0;
  for (char c : steps) {
    if (c == 'N') {
      ++north;
    } else if (c == 'E') {
      if (++east > north * m) {
        throw InvalidPath("ballot path '" + std::string(steps) +
                          "' goes below the line");
      }
    } else {
      throw InvalidPath("ballot path '" + std::string(steps) +
                        "' has a step other than N/E");
    }
  }
  if (north == 0 || east != north * m) {
    throw InvalidPath("ballot path '" + std::string(steps) + "' needs n N " +
                      "steps and n*m E steps with n >= 1");
  }
  return BallotPath(std::string(steps), north, m);
}

std::vector<BallotPath> enumerate_ballot_paths(int n, int m) {
  std::vector<BallotPath> out;
  std::string steps;
  auto extend = [&](auto&& self, int north, int east) -> void {
    if (north == n && east == n * m) {
      out.push_back(BallotPath::parse(steps, m));
      return;
    }
    if (east < north * m) {
      steps.push_back('E');
      self(self, north, east + 1);
      steps.pop_back();
    }
    if (north < n) {
      steps.push_back('N');
      self(self, north + 1, east);
      steps.pop_back();
    }
  };
  extend(extend, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_ballot_paths(int n, int m) {
  // ways[e] = paths reaching the current row with e E steps.
  std::vector<std::uint64_t> ways(n * m + 1, 0);
  ways[0] = 1;
  for (int north = 1; north <= n; ++north) {
    std::vector<std::uint64_t> next(n * m + 1, 0);
    for (int e = 0; e <= n * m; ++e) {
      if (e > north * m) break;
      // Enter the row from below at e, or move east along it.
      next[e] = (e <= (north - 1) * m ? ways[e] : 0) + (e > 0 ? next[e - 1] : 0);
    }
    ways = std::move(next);
  }
  return ways[n * m];
}

std::vector<BallotPath> rotation_covers(const BallotPath& path) {
  const std::string& steps = path.steps();
  const int m = path.m();
  std::vector<BallotPath> out;
  int height = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    height += steps[i] == 'N' ? m : -1;
    if (steps[i] != 'E' || steps[i + 1] != 'N') continue;
    const int start = height;
    int h = start;
    std::size_t j = i + 1;
    for (; j < steps.size(); ++j) {
      h += steps[j] == 'N' ? m : -1;
      if (h == start) break;
    }
    std::string next = steps.substr(0, i) + steps.substr(i + 1, j - i) + "E" +
                       steps.substr(j + 1);
    out.push_back(BallotPath::parse(next, m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string DyckChain::to_string() const {
  std::string out;
  for (const auto& p : paths) {
    if (!out.empty()) out += '/';
    out += p.steps();
  }
  return out;
}

DyckChain split_ballot_path(const BallotPath& path) {
  const int m = path.m();
  std::vector<std::string> parts(m);
  std::vector<int> open;  // copy index of each unmatched up step
  for (char c : path.steps()) {
    if (c == 'N') {
      for (int k = 0; k < m; ++k) {
        parts[k].push_back('u');
        open.push_back(k);
      }
    } else {
      const int k = open.back();
      open.pop_back();
      parts[k].push_back('d');
    }
  }
  DyckChain chain{path.n(), m, {}};
  for (const auto& p : parts) chain.paths.push_back(DyckPath::parse(p));
  return chain;
}

DyckChain dyck_chain_of_class(const MetasylvesterClass& cls,
                              DyckConvention convention) {
  const MetaChain chain = psi_inverse(cls);
  DyckChain out{cls.n(), cls.m(), {}};
  for (const auto& p : chain.perms()) {
    out.paths.push_back(dyck_of_tree(bst_insert(p), convention));
  }
  return out;
}

bool dyck_chain_leq(const DyckChain& a, const DyckChain& b) {
  if (a.n != b.n || a.m != b.m) {
    throw ShapeMismatch("Dyck chains of different shapes");
  }
  for (std::size_t k = 0; k < a.paths.size(); ++k) {
    if (!tamari_leq(a.paths[k], b.paths[k])) return false;
  }
  return true;
}

std::string sylvester_key(const MPermutation& sigma) {
  return bst_insert(sigma).to_string();
}

namespace {

struct SylvesterGroups {
  std::vector<MetasylvesterClass> classes;  // sorted by canonical word
  std::vector<int> group_of;                // class -> group
  std::vector<int> top;                     // group -> class of its maximum
};

SylvesterGroups group_classes(int n, int m) {
  SylvesterGroups g;
  for (const auto& cls : enumerate_classes(n, m)) g.classes.push_back(cls);
  std::sort(g.classes.begin(), g.classes.end());
  std::map<std::string, std::vector<int>> by_key;
  for (int c = 0; c < static_cast<int>(g.classes.size()); ++c) {
    by_key[sylvester_key(g.classes[c].canonical())].push_back(c);
  }
  std::vector<int> tops;
  std::vector<std::vector<int>> members;
  for (auto& [key, list] : by_key) {
    int best = list.front();
    for (int c : list) {
      if (inversion_count(g.classes[c].canonical()) >
          inversion_count(g.classes[best].canonical())) {
        best = c;
      }
    }
    for (int c : list) {
      METASYLV_INVARIANT(
          weak_leq(g.classes[c].canonical(), g.classes[best].canonical()),
          "sylvester class without a maximum");
    }
    tops.push_back(best);
    members.push_back(list);
  }
  // Groups ordered by the word of their maximum.
  std::vector<int> perm(tops.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    return g.classes[tops[x]].canonical() < g.classes[tops[y]].canonical();
  });
  g.group_of.assign(g.classes.size(), -1);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    g.top.push_back(tops[perm[k]]);
    for (int c : members[perm[k]]) g.group_of[c] = static_cast<int>(k);
  }
  return g;
}

LatticeDiagram sylvester_realization(const SylvesterGroups& g, int n, int m) {
  std::vector<std::string> labels;
  std::vector<MPermutation> words;
  for (int c : g.top) {
    words.push_back(g.classes[c].canonical());
    labels.push_back(words.back().to_string());
  }
  LatticeDiagram diagram = diagram_from_order(
      LatticeKind::kMTamari, n, m, std::move(labels),
      [&](int x, int y) { return weak_leq(words[y], words[x]); });
  auto& chains = diagram.annotations["dyck_chain"];
  auto& paths = diagram.annotations["ballot_path"];
  std::map<std::string, std::string> path_of_chain;
  for (const auto& p : enumerate_ballot_paths(n, m)) {
    path_of_chain[split_ballot_path(p).to_string()] = p.steps();
  }
  for (int c : g.top) {
    chains.push_back(dyck_chain_of_class(g.classes[c]).to_string());
    const auto it = path_of_chain.find(chains.back());
    paths.push_back(it == path_of_chain.end() ? "" : it->second);
  }
  return diagram;
}

}  // namespace

MTamariRealizations mtamari_lattice(int n, int m,
                                    const MTamariOptions& options) {
  if (count_classes(n, m) > options.max_classes) {
    throw SizeLimit("m-Tamari construction limited to " +
                    std::to_string(options.max_classes) + " classes");
  }
  MTamariRealizations out;
  const SylvesterGroups g = group_classes(n, m);
  out.sylvester = sylvester_realization(g, n, m);
  if (options.convention != DyckConvention::kSymmetric) {
    auto& chains = out.sylvester.annotations["dyck_chain"];
    for (std::size_t k = 0; k < g.top.size(); ++k) {
      chains[k] =
          dyck_chain_of_class(g.classes[g.top[k]], options.convention)
              .to_string();
    }
  }

  // (a) Ballot paths under rotation.
  const auto paths = enumerate_ballot_paths(n, m);
  out.ballot.kind = LatticeKind::kMTamari;
  out.ballot.n = n;
  out.ballot.m = m;
  for (const auto& p : paths) out.ballot.elements.push_back(p.steps());
  for (int a = 0; a < static_cast<int>(paths.size()); ++a) {
    for (const auto& up : rotation_covers(paths[a])) {
      const auto it = std::lower_bound(paths.begin(), paths.end(), up);
      out.ballot.covers.emplace_back(a, static_cast<int>(it - paths.begin()));
    }
  }
  std::sort(out.ballot.covers.begin(), out.ballot.covers.end());
  {
    std::map<std::string, int> by_chain;
    const auto& chains = out.sylvester.annotations["dyck_chain"];
    for (int k = 0; k < out.sylvester.size(); ++k) by_chain[chains[k]] = k;
    bool complete = true;
    for (const auto& p : paths) {
      const auto it = by_chain.find(split_ballot_path(p).to_string());
      complete = complete && it != by_chain.end();
      out.ballot_to_sylvester.push_back(it == by_chain.end() ? -1 : it->second);
    }
    out.ballot_isomorphic =
        complete && is_isomorphism(out.ballot, out.sylvester,
                                   out.ballot_to_sylvester);
  }

  // (c) Quotient: join of representatives, taken class by class.
  const int groups = static_cast<int>(g.top.size());
  const int classes = static_cast<int>(g.classes.size());
  std::vector<int> join(static_cast<std::size_t>(groups) * groups, -1);
  std::map<std::string, int> group_of_key;
  for (int c = 0; c < classes; ++c) {
    group_of_key[sylvester_key(g.classes[c].canonical())] = g.group_of[c];
  }
  bool well_defined = true;
  for (int x = 0; x < classes && well_defined; ++x) {
    for (int y = x; y < classes; ++y) {
      const auto upper = weak_join(g.classes[x].canonical(),
                                   g.classes[y].canonical());
      const int j = group_of_key.at(sylvester_key(upper));
      const int gx = g.group_of[x];
      const int gy = g.group_of[y];
      for (auto [p, q] : {std::pair{gx, gy}, std::pair{gy, gx}}) {
        int& slot = join[static_cast<std::size_t>(p) * groups + q];
        if (slot >= 0 && slot != j) well_defined = false;
        slot = j;
      }
    }
  }
  out.quotient_join_well_defined = well_defined;
  out.quotient.kind = LatticeKind::kMTamari;
  out.quotient.n = n;
  out.quotient.m = m;
  for (int c : g.top) {
    out.quotient.elements.push_back(g.classes[c].canonical().to_string());
  }
  if (well_defined) {
    try {
      // X <= Y in the quotient when X v Y = Y; m-Tamari reverses it.
      out.quotient = diagram_from_order(
          LatticeKind::kMTamari, n, m, out.quotient.elements,
          [&](int x, int y) {
            return join[static_cast<std::size_t>(x) * groups + y] == x;
          });
    } catch (const std::logic_error&) {
      well_defined = false;
    }
  }
  for (int k = 0; k < groups; ++k) {
    out.quotient_to_sylvester.push_back(
        out.sylvester.index_of(out.quotient.elements[k]));
  }
  out.quotient_isomorphic =
      well_defined && is_isomorphism(out.quotient, out.sylvester,
                                     out.quotient_to_sylvester);
  return out;
}

LatticeDiagram mtamari_diagram(int n, int m) {
  return sylvester_realization(group_classes(n, m), n, m);
}

}  // namespace metasylv
