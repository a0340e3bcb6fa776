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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "metasylv/mpermutation.hpp"
#include "metasylv/weak_order.hpp"

namespace metasylv {

/// Tree-inversion (a, b_i), a < b: every copy of a follows the i-th b in the
/// maximal element of the class.
struct TreeInversion {
  int a = 0;
  int b = 0;
  int i = 0;
  friend auto operator<=>(const TreeInversion&, const TreeInversion&) = default;
};

class TreeInversionSet {
 public:
  TreeInversionSet() = default;
  TreeInversionSet(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }

  bool contains(int a, int b, int i) const;
  /// Throws AlphabetError unless 1 <= a < b <= n and 1 <= i <= m.
  void insert(int a, int b, int i);
  std::size_t size() const;

  /// Bitmask over b (bit b-1) of the triples (a, b, i).
  std::uint64_t row(int a, int i) const { return rows_[index(a, i)]; }
  std::uint64_t& row(int a, int i) { return rows_[index(a, i)]; }

  /// Number of triples (a, *, *).
  int count_for(int a) const;

  bool is_subset_of(const TreeInversionSet& other) const;

  /// Sorted lexicographically by (a, b, i).
  std::vector<TreeInversion> to_vector() const;

  friend bool operator==(const TreeInversionSet&,
                         const TreeInversionSet&) = default;

 private:
  std::size_t index(int a, int i) const {
    return static_cast<std::size_t>(a - 1) * m_ + (i - 1);
  }
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// The three validity conditions on tree-inversion sets.
bool validate_tree_inversions(const TreeInversionSet& set);

/// Closure under (a,b_j),(b,c_i) => (a,c_i) of the co-inversions
/// (a_m, b_i). Constant on each class.
TreeInversionSet tree_inversions(const MPermutation& sigma);

/// True when the word avoids every subword a...b...a with a < b.
bool is_max_element(const MPermutation& sigma);

class MetasylvesterClass {
 public:
  MetasylvesterClass() = default;

  static MetasylvesterClass of(const MPermutation& any_member);
  /// Throws InvalidTreeInversions when `set` fails validation.
  static MetasylvesterClass from_inversions(TreeInversionSet set);

  const MPermutation& canonical() const { return canonical_; }
  const TreeInversionSet& inversions() const { return inversions_; }
  int n() const { return canonical_.n(); }
  int m() const { return canonical_.m(); }

  friend bool operator==(const MetasylvesterClass& a,
                         const MetasylvesterClass& b) {
    return a.canonical_ == b.canonical_;
  }
  friend auto operator<=>(const MetasylvesterClass& a,
                          const MetasylvesterClass& b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  MetasylvesterClass(MPermutation canonical, TreeInversionSet inversions)
      : canonical_(std::move(canonical)), inversions_(std::move(inversions)) {}
  MPermutation canonical_;
  TreeInversionSet inversions_;
};

/// Maximal class element rebuilt from a valid tree-inversion set.
MPermutation max_element_from_inversions(const TreeInversionSet& set);

/// One rewriting step in either direction, sorted and deduplicated.
std::vector<MPermutation> rewrite_neighbors(const MPermutation& sigma);

/// Breadth-first closure under rewrite_neighbors. Exponential; oracle use.
std::vector<MPermutation> meta_class(const MPermutation& sigma);

MPermutation maxclass(const MPermutation& sigma);
/// Weak-order minimum of meta_class(sigma), by exhaustive scan.
MPermutation minclass(const MPermutation& sigma);

struct TreeCode {
  int n = 0;
  int m = 0;
  std::vector<int> entries;
  friend bool operator==(const TreeCode&, const TreeCode&) = default;
};

TreeCode tree_code(const MetasylvesterClass& cls);
/// Throws CodeRangeError unless 0 <= v_i <= (n-i)*m.
MetasylvesterClass from_tree_code(const TreeCode& code);

bool meta_leq(const MetasylvesterClass& a, const MetasylvesterClass& b);
MetasylvesterClass meta_join(const MetasylvesterClass& a,
                             const MetasylvesterClass& b);
MetasylvesterClass meta_meet(const MetasylvesterClass& a,
                             const MetasylvesterClass& b);

/// Upper covers of a class in the metasylvester lattice, sorted.
std::vector<MetasylvesterClass> meta_covers(const MetasylvesterClass& cls);

/// (1+m)(1+2m)...(1+(n-1)m). Throws SizeLimit on 64-bit overflow.
std::uint64_t count_classes(int n, int m);

/// Classes in lexicographic order of their tree-codes.
class ClassStream : public Stream<ClassStream, MetasylvesterClass> {
 public:
  ClassStream(int n, int m);
  std::optional<MetasylvesterClass> next();
  void reset();

 private:
  TreeCode code_;
  bool exhausted_ = false;
  bool started_ = false;
};

ClassStream enumerate_classes(int n, int m);

}  // namespace metasylv
