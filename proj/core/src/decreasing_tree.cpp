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

#include "metasylv/decreasing_tree.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "metasylv/errors.hpp"

namespace metasylv {

DecreasingTree::DecreasingTree(int n, int arity)
    : n_(n),
      arity_(arity),
      children_(n + 1, std::vector<int>(arity, 0)),
      parent_(n + 1, 0),
      slot_(n + 1, 0) {
  if (n < 1) throw InvalidTree("tree needs at least one label");
  if (arity < 2) throw InvalidTree("arity must be at least 2");
  children_[0].clear();
}

void DecreasingTree::attach(int label, int parent, int slot) {
  children_[parent][slot] = label;
  parent_[label] = parent;
  slot_[label] = slot;
}

void DecreasingTree::validate() const {
  std::vector<int> seen(n_ + 1, 0);
  for (int label = 1; label <= n_; ++label) {
    if (static_cast<int>(children_[label].size()) != arity_) {
      throw InvalidTree("node " + std::to_string(label) + " has " +
                        std::to_string(children_[label].size()) +
                        " slots, expected " + std::to_string(arity_));
    }
    for (int c : children_[label]) {
      if (c == 0) continue;
      if (c < 0 || c > n_) {
        throw InvalidTree("label " + std::to_string(c) + " out of range");
      }
      if (c >= label) {
        throw InvalidTree("child " + std::to_string(c) +
                          " is not below parent " + std::to_string(label));
      }
      ++seen[c];
    }
  }
  for (int label = 1; label < n_; ++label) {
    if (seen[label] != 1) {
      throw InvalidTree("label " + std::to_string(label) + " appears " +
                        std::to_string(seen[label]) + " times");
    }
  }
  if (seen[n_] != 0) throw InvalidTree("root label appears as a child");
}

DecreasingTree DecreasingTree::from_children(
    int arity, std::vector<std::vector<int>> children) {
  if (children.size() < 2) throw InvalidTree("tree needs at least one label");
  const int n = static_cast<int>(children.size()) - 1;
  DecreasingTree tree(n, arity);
  tree.children_ = std::move(children);
  tree.children_[0].clear();
  tree.validate();
  for (int label = 1; label <= n; ++label) {
    for (int s = 0; s < arity; ++s) {
      if (const int c = tree.children_[label][s]) {
        tree.parent_[c] = label;
        tree.slot_[c] = s;
      }
    }
  }
  return tree;
}

namespace {

void build_block(const TreeInversionSet& set, std::vector<int> labels,
                 int parent, int slot, auto&& attach) {
  if (labels.empty()) return;
  const int root = labels.back();
  attach(root, parent, slot);
  labels.pop_back();
  std::vector<std::vector<int>> blocks(set.m() + 1);
  for (int a : labels) {
    int j = 0;
    while (j < set.m() && set.contains(a, root, j + 1)) ++j;
    blocks[j].push_back(a);
  }
  for (int j = 0; j <= set.m(); ++j) {
    build_block(set, std::move(blocks[j]), root, j, attach);
  }
}

void read(const DecreasingTree& tree, int label, std::vector<Letter>& out) {
  for (int s = 0; s < tree.arity(); ++s) {
    if (s > 0) out.push_back(static_cast<Letter>(label));
    if (const int c = tree.child(label, s)) read(tree, c, out);
  }
}

}  // namespace

DecreasingTree dt_from_inversions(const TreeInversionSet& set) {
  const int n = set.n();
  DecreasingTree tree(n, set.m() + 1);
  std::vector<int> below(n - 1);
  for (int a = 1; a < n; ++a) below[a - 1] = a;
  std::vector<std::vector<int>> blocks(set.m() + 1);
  for (int a : below) {
    int j = 0;
    while (j < set.m() && set.contains(a, n, j + 1)) ++j;
    blocks[j].push_back(a);
  }
  auto attach = [&tree](int label, int parent, int slot) {
    tree.attach(label, parent, slot);
  };
  for (int j = 0; j <= set.m(); ++j) {
    build_block(set, std::move(blocks[j]), n, j, attach);
  }
  return tree;
}

DecreasingTree dt(const MPermutation& sigma) {
  return dt_from_inversions(tree_inversions(sigma));
}

MPermutation reading_word(const DecreasingTree& tree) {
  std::vector<Letter> out;
  out.reserve(tree.size() * (tree.arity() - 1));
  read(tree, tree.root(), out);
  return MPermutation::from_letters_unchecked(std::move(out), tree.size(),
                                              tree.arity() - 1);
}

TreeInversionSet tree_inversions_of_tree(const DecreasingTree& tree) {
  const int n = tree.size();
  const int m = tree.arity() - 1;
  TreeInversionSet set(n, m);
  // Path from the root to each label, as (ancestor, slot) pairs.
  std::vector<std::vector<std::pair<int, int>>> path(n + 1);
  for (int label = n; label >= 1; --label) {
    const int p = tree.parent(label);
    if (p != 0) {
      path[label] = path[p];
      path[label].emplace_back(p, tree.slot_in_parent(label));
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const auto& pa = path[a];
      const auto& pb = path[b];
      std::size_t d = 0;
      while (d < pa.size() && d < pb.size() && pa[d] == pb[d]) ++d;
      int inversions = 0;
      if (d < pa.size() && pa[d].first == b) {
        inversions = pa[d].second;  // a sits in slot j+1 of b.
      } else if (d < pa.size() && d < pb.size() &&
                 pa[d].second > pb[d].second) {
        inversions = m;
      }
      for (int i = 1; i <= inversions; ++i) set.insert(a, b, i);
    }
  }
  return set;
}

namespace {

struct Block {
  std::vector<int> labels;
  int parent;
  int slot;
};

// children[n + 1] is a one-slot sentinel holding the root.
void expand(std::vector<Block>& pending, std::vector<std::vector<int>>& children,
            int arity, std::vector<DecreasingTree>& out) {
  if (pending.empty()) {
    std::vector<std::vector<int>> shape(children.begin(), children.end() - 1);
    out.push_back(DecreasingTree::from_children(arity, std::move(shape)));
    return;
  }
  Block block = std::move(pending.back());
  pending.pop_back();
  const int root = block.labels.back();
  children[block.parent][block.slot] = root;
  const std::size_t rest = block.labels.size() - 1;
  std::vector<int> choice(rest, 0);
  while (true) {
    std::vector<std::vector<int>> parts(arity);
    for (std::size_t k = 0; k < rest; ++k) {
      parts[choice[k]].push_back(block.labels[k]);
    }
    const std::size_t mark = pending.size();
    for (int s = arity - 1; s >= 0; --s) {
      if (!parts[s].empty()) pending.push_back({parts[s], root, s});
    }
    expand(pending, children, arity, out);
    pending.resize(mark);
    std::size_t k = rest;
    while (k > 0 && choice[k - 1] == arity - 1) choice[--k] = 0;
    if (k == 0) break;
    ++choice[k - 1];
  }
  children[block.parent][block.slot] = 0;
  pending.push_back(std::move(block));
}

}  // namespace

TreeStream::TreeStream(int n, int arity) {
  if (n < 1) throw InvalidTree("tree needs at least one label");
  if (arity < 2) throw InvalidTree("arity must be at least 2");
  if (n * (arity - 1) > kMaxLength) throw SizeLimit("tree too large");
  std::vector<std::vector<int>> children(n + 2, std::vector<int>(arity, 0));
  children[n + 1].assign(1, 0);
  std::vector<int> labels(n);
  for (int a = 1; a <= n; ++a) labels[a - 1] = a;
  std::vector<Block> pending{{labels, n + 1, 0}};
  expand(pending, children, arity, trees_);
}

std::optional<DecreasingTree> TreeStream::next() {
  if (cursor_ >= trees_.size()) return std::nullopt;
  return trees_[cursor_++];
}

TreeStream enumerate_trees(int n, int arity) { return TreeStream(n, arity); }

std::string to_dot(const DecreasingTree& tree) {
  std::ostringstream out;
  out << "digraph tree {\n";
  for (int label = tree.size(); label >= 1; --label) {
    out << "  n" << label << " [label=\"" << label << "\"];\n";
  }
  int leaf = 0;
  for (int label = tree.size(); label >= 1; --label) {
    for (int s = 0; s < tree.arity(); ++s) {
      if (const int c = tree.child(label, s)) {
        out << "  n" << label << " -> n" << c << ";\n";
      } else {
        out << "  l" << leaf << " [shape=point];\n";
        out << "  n" << label << " -> l" << leaf << ";\n";
        ++leaf;
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace metasylv
