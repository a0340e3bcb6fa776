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

#include <optional>
#include <span>
#include <vector>

#include "metasylv/decreasing_tree.hpp"
#include "metasylv/metasylvester.hpp"
#include "metasylv/mpermutation.hpp"

namespace metasylv {

/// Weakly increasing tuple (s^(m) <= s^(m-1) <= ... <= s^(1)) of
/// permutations of size n in which every (s^(j))^{-1} s^(i), i < j, avoids
/// 231. Stored in that tuple order; use slot(i) to read s^(i).
class MetaChain {
 public:
  MetaChain() = default;

  /// `perms` listed from s^(m) down to s^(1). Throws InvalidChain when the
  /// tuple is not a metasylvester chain, ShapeMismatch on mixed sizes.
  explicit MetaChain(std::vector<Permutation> perms);

  int n() const { return perms_.empty() ? 0 : perms_.front().size(); }
  int m() const { return static_cast<int>(perms_.size()); }

  /// s^(i), 1 <= i <= m.
  const Permutation& slot(int i) const { return perms_[perms_.size() - i]; }
  /// Tuple order: s^(m) first.
  const std::vector<Permutation>& perms() const { return perms_; }

  friend bool operator==(const MetaChain&, const MetaChain&) = default;
  friend auto operator<=>(const MetaChain&, const MetaChain&) = default;

 private:
  struct Unchecked {};
  MetaChain(std::vector<Permutation> perms, Unchecked)
      : perms_(std::move(perms)) {}
  friend MetaChain psi_inverse(const MetasylvesterClass& cls);
  friend MetaChain chain_from_tree(const DecreasingTree& tree);

  std::vector<Permutation> perms_;
};

/// Both chain conditions; the tuple is given from s^(m) to s^(1).
/// Throws ShapeMismatch when sizes differ.
bool is_meta_chain(std::span<const Permutation> perms);

TreeInversionSet cinv(const MetaChain& chain);

MetasylvesterClass psi(const MetaChain& chain);
MetaChain psi_inverse(const MetasylvesterClass& cls);

/// s^(i) visits subtrees 1..i, the root, then subtrees i+1..m+1, at every
/// node.
MetaChain chain_from_tree(const DecreasingTree& tree);

/// Componentwise right weak order.
bool chain_leq(const MetaChain& a, const MetaChain& b);

enum class ChainEnumeration {
  // Map every class through psi_inverse.
  kFromClasses,
  // Filter every weakly increasing m-tuple by is_meta_chain.
  kFilterTuples,
};

std::vector<MetaChain> enumerate_chains(
    int n, int m, ChainEnumeration mode = ChainEnumeration::kFromClasses);

}  // namespace metasylv
