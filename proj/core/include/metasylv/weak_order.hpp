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
#include <vector>

#include "metasylv/detail/relation.hpp"
#include "metasylv/mpermutation.hpp"

namespace metasylv {

/// The i-th copy (1-based) of a letter.
struct Occurrence {
  int letter = 0;
  int index = 0;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Co-inversion (a_i, b_j) with a < b: the j-th b precedes the i-th a.
struct CoInversion {
  Occurrence smaller;
  Occurrence larger;
  friend auto operator<=>(const CoInversion&, const CoInversion&) = default;
};

/// Set of co-inversions of an m-permutation, stored over standardized
/// letters. Equality is set equality.
class CoInversionSet {
 public:
  CoInversionSet() = default;
  CoInversionSet(int n, int m);
  CoInversionSet(int n, int m, const detail::Relation& relation);

  int n() const { return n_; }
  int m() const { return m_; }

  bool contains(Occurrence smaller, Occurrence larger) const;
  void insert(Occurrence smaller, Occurrence larger);
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  bool is_subset_of(const CoInversionSet& other) const;

  /// (a,b) and (b,c) imply (a,c).
  bool is_transitive() const;
  /// (a,c) and a < b' < c imply (a,b') or (b',c).
  bool is_cotransitive() const;
  /// (a_i, b_j) implies (a_k, b_j) for k > i and (a_i, b_l) for l < j.
  bool is_occurrence_monotone() const;

  /// Sorted lexicographically by (a, i, b, j).
  std::vector<CoInversion> to_vector() const;

  const detail::Relation& relation() const { return relation_; }

  friend bool operator==(const CoInversionSet& a, const CoInversionSet& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.relation_ == b.relation_;
  }

 private:
  int standard_letter(Occurrence occ) const;
  int n_ = 0;
  int m_ = 0;
  detail::Relation relation_;
};

/// v_i = number of co-inversions (i, *).
struct CoCode {
  std::vector<int> entries;
  friend bool operator==(const CoCode&, const CoCode&) = default;
};

CoInversionSet coinversions(const MPermutation& sigma);
CoInversionSet coinversions(const Permutation& pi);

CoCode cocode(const Permutation& pi);
/// Throws CodeRangeError unless v_i <= N - i.
Permutation permutation_from_cocode(const CoCode& code);
/// Permutation with exactly the given co-inversions (m must be 1).
/// Throws InvariantViolation if the set is not a valid co-inversion set.
Permutation permutation_from_coinversions(const CoInversionSet& set);

bool weak_leq(const Permutation& a, const Permutation& b);
Permutation weak_join(const Permutation& a, const Permutation& b);
Permutation weak_meet(const Permutation& a, const Permutation& b);

/// Right weak order on m-permutations. All throw ShapeMismatch when the
/// (n, m) parameters differ.
bool weak_leq(const MPermutation& a, const MPermutation& b);
MPermutation weak_join(const MPermutation& a, const MPermutation& b);
MPermutation weak_meet(const MPermutation& a, const MPermutation& b);

/// Upper covers: swap adjacent positions holding an ascent. Sorted.
std::vector<MPermutation> weak_covers(const MPermutation& sigma);

/// Number of co-inversions; the rank function of the weak order.
int inversion_count(const MPermutation& sigma);

void require_same_shape(const MPermutation& a, const MPermutation& b);

}  // namespace metasylv
