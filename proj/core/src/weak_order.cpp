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

#include "metasylv/weak_order.hpp"

#include <algorithm>
#include <string>

#include "metasylv/errors.hpp"

namespace metasylv {
namespace {

// 0-based standardized letters of sigma.
std::vector<Letter> standard_letters0(const MPermutation& sigma) {
  const int m = sigma.m();
  std::array<int, kMaxLength + 1> seen{};
  std::vector<Letter> out(sigma.length());
  for (int k = 0; k < sigma.length(); ++k) {
    const int v = sigma[k];
    out[k] = static_cast<Letter>((v - 1) * m + seen[v]++);
  }
  return out;
}

std::vector<Letter> letters0(const Permutation& pi) {
  std::vector<Letter> out(pi.size());
  for (int k = 0; k < pi.size(); ++k) out[k] = static_cast<Letter>(pi[k] - 1);
  return out;
}

detail::Relation relation_of(const MPermutation& sigma) {
  return detail::relation_of_word(standard_letters0(sigma));
}

detail::Relation relation_of(const Permutation& pi) {
  return detail::relation_of_word(letters0(pi));
}

MPermutation mperm_of_relation(const detail::Relation& r, int n, int m) {
  std::vector<Letter> word(r.size);
  const bool ok = detail::word_of_relation(r, word);
  METASYLV_INVARIANT(ok, "relation is not an inversion set");
  for (Letter& x : word) x = static_cast<Letter>(x / m + 1);
  return MPermutation::from_letters_unchecked(std::move(word), n, m);
}

Permutation perm_of_relation(const detail::Relation& r) {
  std::vector<Letter> word(r.size);
  const bool ok = detail::word_of_relation(r, word);
  METASYLV_INVARIANT(ok, "relation is not an inversion set");
  std::vector<int> one_based(word.begin(), word.end());
  for (int& x : one_based) ++x;
  return Permutation::from_word(one_based);
}

}  // namespace

CoInversionSet::CoInversionSet(int n, int m)
    : n_(n), m_(m), relation_(n * m) {
  if (n < 0 || m < 1 || n * m > kMaxLength) {
    throw SizeLimit("co-inversion set shape out of range");
  }
}

CoInversionSet::CoInversionSet(int n, int m, const detail::Relation& relation)
    : n_(n), m_(m), relation_(relation) {
  if (relation.size != n * m) {
    throw ShapeMismatch("relation size does not match n*m");
  }
}

int CoInversionSet::standard_letter(Occurrence occ) const {
  if (occ.letter < 1 || occ.letter > n_ || occ.index < 1 || occ.index > m_) {
    throw AlphabetError("occurrence " + std::to_string(occ.letter) + "_" +
                        std::to_string(occ.index) + " out of range");
  }
  return (occ.letter - 1) * m_ + (occ.index - 1);
}

bool CoInversionSet::contains(Occurrence smaller, Occurrence larger) const {
  if (smaller.letter >= larger.letter) return false;
  const int x = standard_letter(smaller);
  const int y = standard_letter(larger);
  return relation_.rows[x] >> y & 1;
}

void CoInversionSet::insert(Occurrence smaller, Occurrence larger) {
  if (smaller.letter >= larger.letter) {
    throw AlphabetError("co-inversion needs a smaller and a larger letter");
  }
  const int x = standard_letter(smaller);
  const int y = standard_letter(larger);
  relation_.rows[x] |= 1ULL << y;
}

std::size_t CoInversionSet::size() const {
  return static_cast<std::size_t>(detail::cardinality(relation_));
}

bool CoInversionSet::is_subset_of(const CoInversionSet& other) const {
  return n_ == other.n_ && m_ == other.m_ &&
         detail::is_subset(relation_, other.relation_);
}

bool CoInversionSet::is_transitive() const {
  return detail::is_transitive(relation_);
}

bool CoInversionSet::is_cotransitive() const {
  return detail::is_cotransitive(relation_);
}

bool CoInversionSet::is_occurrence_monotone() const {
  for (int a = 1; a <= n_; ++a) {
    for (int i = 1; i < m_; ++i) {
      const auto row = relation_.rows[(a - 1) * m_ + (i - 1)];
      const auto next = relation_.rows[(a - 1) * m_ + i];
      if (row & ~next) return false;
    }
    for (int i = 1; i <= m_; ++i) {
      const auto row = relation_.rows[(a - 1) * m_ + (i - 1)];
      for (int b = a + 1; b <= n_; ++b) {
        for (int j = 2; j <= m_; ++j) {
          const int y = (b - 1) * m_ + (j - 1);
          if ((row >> y & 1) && !(row >> (y - 1) & 1)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<CoInversion> CoInversionSet::to_vector() const {
  std::vector<CoInversion> out;
  for (int x = 0; x < relation_.size; ++x) {
    std::uint64_t succ = relation_.rows[x];
    while (succ) {
      const int y = std::countr_zero(succ);
      succ &= succ - 1;
      out.push_back({{x / m_ + 1, x % m_ + 1}, {y / m_ + 1, y % m_ + 1}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoInversionSet coinversions(const MPermutation& sigma) {
  return CoInversionSet(sigma.n(), sigma.m(), relation_of(sigma));
}

CoInversionSet coinversions(const Permutation& pi) {
  return CoInversionSet(pi.size(), 1, relation_of(pi));
}

CoCode cocode(const Permutation& pi) {
  const auto r = relation_of(pi);
  CoCode code;
  code.entries.reserve(pi.size());
  for (int x = 0; x < pi.size(); ++x) {
    code.entries.push_back(std::popcount(r.rows[x]));
  }
  return code;
}

Permutation permutation_from_cocode(const CoCode& code) {
  const int n = static_cast<int>(code.entries.size());
  std::vector<int> word;
  word.reserve(n);
  for (int i = n; i >= 1; --i) {
    const int v = code.entries[i - 1];
    if (v < 0 || v > n - i) {
      throw CodeRangeError("code entry v_" + std::to_string(i) + " = " +
                           std::to_string(v) + " outside 0.." +
                           std::to_string(n - i));
    }
    word.insert(word.begin() + v, i);
  }
  return Permutation::from_word(word);
}

Permutation permutation_from_coinversions(const CoInversionSet& set) {
  return perm_of_relation(set.relation());
}

bool weak_leq(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ShapeMismatch("permutation sizes differ");
  return detail::is_subset(relation_of(a), relation_of(b));
}

Permutation weak_join(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ShapeMismatch("permutation sizes differ");
  detail::Relation out;
  detail::join_relations(relation_of(a), relation_of(b), out);
  return perm_of_relation(out);
}

Permutation weak_meet(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ShapeMismatch("permutation sizes differ");
  detail::Relation out;
  detail::meet_relations(relation_of(a), relation_of(b), out);
  return perm_of_relation(out);
}

void require_same_shape(const MPermutation& a, const MPermutation& b) {
  if (a.n() != b.n() || a.m() != b.m()) {
    throw ShapeMismatch("shapes (" + std::to_string(a.n()) + "," +
                        std::to_string(a.m()) + ") and (" +
                        std::to_string(b.n()) + "," + std::to_string(b.m()) +
                        ") differ");
  }
}

bool weak_leq(const MPermutation& a, const MPermutation& b) {
  require_same_shape(a, b);
  return detail::is_subset(relation_of(a), relation_of(b));
}

MPermutation weak_join(const MPermutation& a, const MPermutation& b) {
  require_same_shape(a, b);
  detail::Relation out;
  detail::join_relations(relation_of(a), relation_of(b), out);
  return mperm_of_relation(out, a.n(), a.m());
}

MPermutation weak_meet(const MPermutation& a, const MPermutation& b) {
  require_same_shape(a, b);
  detail::Relation out;
  detail::meet_relations(relation_of(a), relation_of(b), out);
  return mperm_of_relation(out, a.n(), a.m());
}

std::vector<MPermutation> weak_covers(const MPermutation& sigma) {
  std::vector<MPermutation> out;
  std::vector<Letter> word(sigma.word().begin(), sigma.word().end());
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    if (word[k] < word[k + 1]) {
      std::swap(word[k], word[k + 1]);
      out.push_back(
          MPermutation::from_letters_unchecked(word, sigma.n(), sigma.m()));
      std::swap(word[k], word[k + 1]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int inversion_count(const MPermutation& sigma) {
  int total = 0;
  for (int k = 0; k < sigma.length(); ++k) {
    for (int l = k + 1; l < sigma.length(); ++l) {
      total += sigma[k] > sigma[l];
    }
  }
  return total;
}

}  // namespace metasylv
