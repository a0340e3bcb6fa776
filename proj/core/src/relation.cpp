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

#include "metasylv/detail/relation.hpp"

namespace metasylv::detail {

Relation relation_of_word(std::span<const Letter> word0) {
  const int n = static_cast<int>(word0.size());
  Relation r(n);
  std::uint64_t seen = 0;
  for (Letter x : word0) {
    r.rows[x] = seen & above_mask(x, n);
    seen |= 1ULL << x;
  }
  return r;
}

void close_transitively(Relation& r) {
  // Rows above x are already closed when row x is processed.
  for (int x = r.size - 2; x >= 0; --x) {
    std::uint64_t direct = r.rows[x];
    std::uint64_t closed = direct;
    while (direct) {
      const int y = std::countr_zero(direct);
      direct &= direct - 1;
      closed |= r.rows[y];
    }
    r.rows[x] = closed;
  }
}

bool is_transitive(const Relation& r) {
  for (int x = 0; x < r.size; ++x) {
    std::uint64_t succ = r.rows[x];
    while (succ) {
      const int y = std::countr_zero(succ);
      succ &= succ - 1;
      if (r.rows[y] & ~r.rows[x]) return false;
    }
  }
  return true;
}

bool is_cotransitive(const Relation& r) {
  for (int x = 0; x < r.size; ++x) {
    for (int y = x + 1; y < r.size; ++y) {
      if (r.rows[x] >> y & 1) continue;
      if (r.rows[x] & above_mask(y, r.size) & ~r.rows[y]) return false;
    }
  }
  return true;
}

bool word_of_relation(const Relation& r, std::span<Letter> out0) {
  const int n = r.size;
  if (static_cast<int>(out0.size()) != n) return false;
  std::uint64_t unfilled = n >= 64 ? ~0ULL : ((1ULL << n) - 1);
  std::array<int, kMaxLetters> preceded_by_larger{};
  std::array<int, kMaxLetters> follows_smaller{};
  for (int x = 0; x < n; ++x) {
    preceded_by_larger[x] = std::popcount(r.rows[x]);
    std::uint64_t succ = r.rows[x];
    while (succ) {
      const int y = std::countr_zero(succ);
      succ &= succ - 1;
      ++follows_smaller[y];
    }
  }
  for (int x = 0; x < n; ++x) {
    const int pos = preceded_by_larger[x] + (x - follows_smaller[x]);
    if (pos < 0 || pos >= n || !(unfilled >> pos & 1)) return false;
    unfilled &= ~(1ULL << pos);
    out0[pos] = static_cast<Letter>(x);
  }
  return relation_of_word(out0) == r;
}

void join_relations(const Relation& a, const Relation& b, Relation& out) {
  out.size = a.size;
  for (int x = 0; x < a.size; ++x) out.rows[x] = a.rows[x] | b.rows[x];
  close_transitively(out);
}

void meet_relations(const Relation& a, const Relation& b, Relation& out) {
  // Complement over every pair x < y, including pairs with no word order
  // constraint in the multiset setting.
  const int n = a.size;
  out.size = n;
  for (int x = 0; x < n; ++x) {
    out.rows[x] = above_mask(x, n) & ~(a.rows[x] & b.rows[x]);
  }
  close_transitively(out);
  for (int x = 0; x < n; ++x) out.rows[x] = above_mask(x, n) & ~out.rows[x];
}

}  // namespace metasylv::detail
