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

#pragma once

#include <string>
#include <vector>

#include "metasylv/metasylvester.hpp"
#include "metasylv/mpermutation.hpp"

namespace metasylv {

/// Planar decreasing tree of fixed arity on labels 1..n. Every internal node
/// has exactly `arity` slots; an empty slot is a leaf, stored as label 0.
/// Node labels exceed every label below them, so the root is n.
class DecreasingTree {
 public:
  DecreasingTree() = default;

  /// `children[label]` lists the labels in the slots of `label` (0 = leaf);
  /// children[0] is ignored. Throws InvalidTree on a malformed tree.
  static DecreasingTree from_children(int arity,
                                      std::vector<std::vector<int>> children);

  /// Single node n with only leaves below; labels 1..n-1 must be attached
  /// with attach() before the tree is complete.
  DecreasingTree(int n, int arity);

  int size() const { return n_; }
  int arity() const { return arity_; }
  int root() const { return n_; }

  /// Label in slot `slot` (0-based) of `label`, or 0 for a leaf.
  int child(int label, int slot) const { return children_[label][slot]; }
  const std::vector<int>& children(int label) const {
    return children_[label];
  }
  /// 0 for the root.
  int parent(int label) const { return parent_[label]; }
  /// 0-based slot index of `label` below its parent.
  int slot_in_parent(int label) const { return slot_[label]; }

  friend bool operator==(const DecreasingTree&,
                         const DecreasingTree&) = default;
  friend auto operator<=>(const DecreasingTree&,
                          const DecreasingTree&) = default;

 private:
  friend DecreasingTree dt_from_inversions(const TreeInversionSet& set);
  void attach(int label, int parent, int slot);
  void validate() const;

  int n_ = 0;
  int arity_ = 0;
  std::vector<std::vector<int>> children_;
  std::vector<int> parent_;
  std::vector<int> slot_;
};

/// Decreasing tree of the class of sigma, read off its tree-inversions.
DecreasingTree dt(const MPermutation& sigma);
DecreasingTree dt_from_inversions(const TreeInversionSet& set);

/// T_1, root, T_2, root, ..., root, T_{m+1}; lands in the set of maximal
/// class elements.
MPermutation reading_word(const DecreasingTree& tree);

/// Tree-inversions read directly from the shape of the tree.
TreeInversionSet tree_inversions_of_tree(const DecreasingTree& tree);

/// Every decreasing tree on n labels, generated by distributing the labels
/// below the root among its slots.
class TreeStream : public Stream<TreeStream, DecreasingTree> {
 public:
  TreeStream(int n, int arity);
  std::optional<DecreasingTree> next();
  void reset() { cursor_ = 0; }

 private:
  std::vector<DecreasingTree> trees_;
  std::size_t cursor_ = 0;
};

TreeStream enumerate_trees(int n, int arity);

std::string to_dot(const DecreasingTree& tree);

}  // namespace metasylv
