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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metasylv/chain.hpp"
#include "metasylv/lattice.hpp"
#include "metasylv/metasylvester.hpp"
#include "metasylv/mpermutation.hpp"

namespace metasylv {

// ---------------------------------------------------------------------------
// Sylvester congruence: ac...b == ca...b for a <= b < c.

/// One sylvester rewriting step in either direction, sorted.
std::vector<MPermutation> sylv_rewrite_neighbors(const MPermutation& sigma);
/// Closure under sylv_rewrite_neighbors. Exponential; oracle use.
std::vector<MPermutation> sylv_class(const MPermutation& sigma);
/// Weak-order maximum of sylv_class(sigma).
MPermutation sylv_maxclass(const MPermutation& sigma);

// ---------------------------------------------------------------------------
// Unlabelled binary trees, stored as a canonical preorder bit string
// (1 = node, 0 = empty subtree).

class BinaryTree {
 public:
  BinaryTree() : preorder_{false} {}
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);

  bool empty() const { return !preorder_.front(); }
  int size() const;
  /// Throws std::logic_error on the empty tree.
  BinaryTree left() const;
  BinaryTree right() const;

  /// Nested form, "(L.R)" per node and "" for the empty tree.
  std::string to_string() const;
  const std::vector<bool>& preorder() const { return preorder_; }

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
  friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;

 private:
  explicit BinaryTree(std::vector<bool> preorder)
      : preorder_(std::move(preorder)) {}
  // Length of the encoded subtree starting at `start`.
  std::size_t span_at(std::size_t start) const;
  std::vector<bool> preorder_;
};

/// Binary search tree insertion reading the word right to left; a key equal
/// to a node goes to its left subtree.
BinaryTree bst_insert(std::span<const Letter> word);
BinaryTree bst_insert(const Permutation& p);
BinaryTree bst_insert(const MPermutation& sigma);

// ---------------------------------------------------------------------------
// Dyck paths over {u, d}.

class DyckPath {
 public:
  DyckPath() = default;
  /// Throws InvalidPath unless balanced with non-negative prefixes.
  static DyckPath parse(std::string_view steps);

  int semilength() const { return static_cast<int>(steps_.size() / 2); }
  const std::string& steps() const { return steps_; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  explicit DyckPath(std::string steps) : steps_(std::move(steps)) {}
  std::string steps_;
};

enum class DyckConvention {
  // D(T) = D(R) u D(L) d: the reflection of the standard encoding. Sends
  // the weak order on sylvester maxima to the reversed Tamari order.
  kSymmetric,
  // D(T) = u D(L) d D(R).
  kStandard,
};

DyckPath dyck_of_tree(const BinaryTree& tree,
                      DyckConvention convention = DyckConvention::kSymmetric);

/// For each up step, the semilength of the Dyck factor it opens.
std::vector<int> excursion_lengths(const DyckPath& path);
/// Tamari order: componentwise comparison of excursion lengths.
bool tamari_leq(const DyckPath& a, const DyckPath& b);
/// Rotation covers (a down step jumps past the primitive factor after it).
std::vector<DyckPath> tamari_covers(const DyckPath& path);
std::vector<DyckPath> all_dyck_paths(int semilength);

// ---------------------------------------------------------------------------
// m-ballot paths: n steps N and n*m steps E, with m * #N >= #E on every
// prefix.

class BallotPath {
 public:
  BallotPath() = default;
  /// Throws InvalidPath for other letters or a prefix below the line.
  static BallotPath parse(std::string_view steps, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::string& steps() const { return steps_; }

  friend bool operator==(const BallotPath&, const BallotPath&) = default;
  friend auto operator<=>(const BallotPath&, const BallotPath&) = default;

 private:
  BallotPath(std::string steps, int n, int m)
      : n_(n), m_(m), steps_(std::move(steps)) {}
  int n_ = 0;
  int m_ = 0;
  std::string steps_;
};

/// Sorted by step string.
std::vector<BallotPath> enumerate_ballot_paths(int n, int m);
/// Counts paths by dynamic programming over the prefix condition.
std::uint64_t count_ballot_paths(int n, int m);

/// Each E step followed by an N step is swapped with the shortest factor
/// starting at that N that returns to its starting line of slope 1/m.
std::vector<BallotPath> rotation_covers(const BallotPath& path);

/// m Dyck paths of semilength n, slot 1 first.
struct DyckChain {
  int n = 0;
  int m = 0;
  std::vector<DyckPath> paths;

  std::string to_string() const;
  friend bool operator==(const DyckChain&, const DyckChain&) = default;
  friend auto operator<=>(const DyckChain&, const DyckChain&) = default;
};

/// N -> u^m (copies c_1..c_m) and E -> d; copy c_k and the down steps
/// matched with it form path k.
DyckChain split_ballot_path(const BallotPath& path);

/// BST image of each permutation of psi_inverse(cls), slot 1 holding the
/// image of s^(m).
DyckChain dyck_chain_of_class(
    const MetasylvesterClass& cls,
    DyckConvention convention = DyckConvention::kSymmetric);

bool dyck_chain_leq(const DyckChain& a, const DyckChain& b);

// ---------------------------------------------------------------------------
// m-Tamari lattice in three realizations, all oriented as the m-Tamari
// order (rotation goes up).

struct MTamariOptions {
  // Upper bound on the number of metasylvester classes processed.
  std::uint64_t max_classes = 6000;
  DyckConvention convention = DyckConvention::kSymmetric;
};

struct MTamariRealizations {
  // (a) ballot paths, covers by rotation.
  LatticeDiagram ballot;
  // (b) sylvester-maximal m-permutations, weak order reversed.
  LatticeDiagram sylvester;
  // (c) sylvester classes of metasylvester classes; order from the quotient
  // join, reversed.
  LatticeDiagram quotient;

  // Certificates: index maps into `sylvester`.
  std::vector<int> ballot_to_sylvester;
  std::vector<int> quotient_to_sylvester;
  bool ballot_isomorphic = false;
  bool quotient_isomorphic = false;
  // Every pair of representatives gives the same quotient join.
  bool quotient_join_well_defined = false;

  bool certified() const {
    return ballot_isomorphic && quotient_isomorphic &&
           quotient_join_well_defined;
  }
};

/// Throws SizeLimit when the class count exceeds options.max_classes.
MTamariRealizations mtamari_lattice(int n, int m,
                                    const MTamariOptions& options = {});

/// Realization (b) alone, with "ballot_path" and "dyck_chain" annotations.
LatticeDiagram mtamari_diagram(int n, int m);

/// Sylvester class key of an m-permutation (its BST shape).
std::string sylvester_key(const MPermutation& sigma);

}  // namespace metasylv
