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

#include <array>
#include <bit>
#include <cstdint>
#include <span>

#include "metasylv/mpermutation.hpp"

// Bit-matrix kernels behind the weak-order operations. Letters are 0-based
// standardized letters; rows[x] has bit y set (x < y) when y precedes x,
// i.e. (x, y) is a co-inversion.
namespace metasylv::detail {

inline constexpr int kMaxLetters = kMaxLength;

struct Relation {
  int size = 0;
  std::array<std::uint64_t, kMaxLetters> rows{};

  Relation() = default;
  explicit Relation(int n) : size(n) {
    for (int x = 0; x < n; ++x) rows[x] = 0;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    if (a.size != b.size) return false;
    for (int x = 0; x < a.size; ++x) {
      if (a.rows[x] != b.rows[x]) return false;
    }
    return true;
  }
};

/// Bits x+1 .. n-1.
inline std::uint64_t above_mask(int x, int n) {
  const std::uint64_t upto_n = n >= 64 ? ~0ULL : ((1ULL << n) - 1);
  const std::uint64_t upto_x = x >= 63 ? ~0ULL : ((1ULL << (x + 1)) - 1);
  return upto_n & ~upto_x;
}

inline bool is_subset(const Relation& a, const Relation& b) {
  for (int x = 0; x < a.size; ++x) {
    if (a.rows[x] & ~b.rows[x]) return false;
  }
  return true;
}

inline int cardinality(const Relation& r) {
  int total = 0;
  for (int x = 0; x < r.size; ++x) total += std::popcount(r.rows[x]);
  return total;
}

/// Co-inversion relation of a 0-based permutation word.
Relation relation_of_word(std::span<const Letter> word0);

/// Warshall closure: (x,y) and (y,z) imply (x,z).
void close_transitively(Relation& r);

/// For every (x,z) and x < y < z, (x,y) or (y,z) is present.
bool is_cotransitive(const Relation& r);
bool is_transitive(const Relation& r);

/// Rebuilds the unique permutation whose co-inversion set is `r`.
/// Returns false when `r` is not the co-inversion set of any permutation.
bool word_of_relation(const Relation& r, std::span<Letter> out0);

/// Inversion-set join / meet in the right weak order on S_size.
void join_relations(const Relation& a, const Relation& b, Relation& out);
void meet_relations(const Relation& a, const Relation& b, Relation& out);

}  // namespace metasylv::detail
