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

#include "metasylv/metasylvester.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <set>
#include <string>

#include "metasylv/decreasing_tree.hpp"
#include "metasylv/errors.hpp"

namespace metasylv {
namespace {

std::uint64_t letters_mask(int lo, int hi) {
  // Bits lo-1 .. hi-1 (letters lo..hi).
  if (lo > hi) return 0;
  const std::uint64_t upto = hi >= 64 ? ~0ULL : ((1ULL << hi) - 1);
  return upto & ~((1ULL << (lo - 1)) - 1);
}

}  // namespace

TreeInversionSet::TreeInversionSet(int n, int m)
    : n_(n), m_(m), rows_(static_cast<std::size_t>(n) * m, 0) {
  if (n < 1 || m < 1 || n * m > kMaxLength) {
    throw SizeLimit("tree-inversion set shape out of range");
  }
}

bool TreeInversionSet::contains(int a, int b, int i) const {
  if (a < 1 || b <= a || b > n_ || i < 1 || i > m_) return false;
  return row(a, i) >> (b - 1) & 1;
}

void TreeInversionSet::insert(int a, int b, int i) {
  if (a < 1 || b <= a || b > n_ || i < 1 || i > m_) {
    throw AlphabetError("tree-inversion (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(i) +
                        ") out of range for n=" + std::to_string(n_) +
                        ", m=" + std::to_string(m_));
  }
  row(a, i) |= 1ULL << (b - 1);
}

std::size_t TreeInversionSet::size() const {
  std::size_t total = 0;
  for (auto r : rows_) total += std::popcount(r);
  return total;
}

int TreeInversionSet::count_for(int a) const {
  int total = 0;
  for (int i = 1; i <= m_; ++i) total += std::popcount(row(a, i));
  return total;
}

bool TreeInversionSet::is_subset_of(const TreeInversionSet& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k] & ~other.rows_[k]) return false;
  }
  return true;
}

std::vector<TreeInversion> TreeInversionSet::to_vector() const {
  std::vector<TreeInversion> out;
  for (int a = 1; a <= n_; ++a) {
    for (int b = a + 1; b <= n_; ++b) {
      for (int i = 1; i <= m_; ++i) {
        if (contains(a, b, i)) out.push_back({a, b, i});
      }
    }
  }
  return out;
}

bool validate_tree_inversions(const TreeInversionSet& set) {
  const int n = set.n();
  const int m = set.m();
  for (int a = 1; a <= n; ++a) {
    std::uint64_t any = 0;
    for (int i = 1; i <= m; ++i) {
      const auto r = set.row(a, i);
      if (r & ~letters_mask(a + 1, n)) return false;
      if (i > 1 && (r & ~set.row(a, i - 1))) return false;
      any |= r;
    }
    // Condition 2.
    for (std::uint64_t bs = any; bs; bs &= bs - 1) {
      const int b = std::countr_zero(bs) + 1;
      for (int i = 1; i <= m; ++i) {
        if (set.row(b, i) & ~set.row(a, i)) return false;
      }
    }
    // Condition 3.
    const auto full = set.row(a, m);
    for (int i = 1; i <= m; ++i) {
      for (std::uint64_t cs = set.row(a, i); cs; cs &= cs - 1) {
        const int c = std::countr_zero(cs) + 1;
        for (int b = a + 1; b < c; ++b) {
          if (!(full >> (b - 1) & 1) && !set.contains(b, c, i)) return false;
        }
      }
    }
  }
  return true;
}

TreeInversionSet tree_inversions(const MPermutation& sigma) {
  const int n = sigma.n();
  const int m = sigma.m();
  TreeInversionSet set(n, m);
  // Seed: the i-th b precedes the last a.
  std::vector<int> seen(n + 1, 0);
  std::vector<int> last(n + 1, -1);
  for (int k = 0; k < sigma.length(); ++k) last[sigma[k]] = k;
  for (int k = 0; k < sigma.length(); ++k) {
    const int v = sigma[k];
    ++seen[v];
    if (k == last[v]) {
      for (int b = v + 1; b <= n; ++b) {
        for (int i = 1; i <= seen[b]; ++i) set.row(v, i) |= 1ULL << (b - 1);
      }
    }
  }
  // Closure; rows of larger letters are final when a is processed.
  for (int a = n - 1; a >= 1; --a) {
    const auto direct = set.row(a, 1);
    for (std::uint64_t bs = direct; bs; bs &= bs - 1) {
      const int b = std::countr_zero(bs) + 1;
      for (int i = 1; i <= m; ++i) set.row(a, i) |= set.row(b, i);
    }
  }
  return set;
}

bool is_max_element(const MPermutation& sigma) {
  const int n = sigma.n();
  std::vector<int> first(n + 1, -1);
  std::vector<int> last(n + 1, -1);
  for (int k = 0; k < sigma.length(); ++k) {
    if (first[sigma[k]] < 0) first[sigma[k]] = k;
    last[sigma[k]] = k;
  }
  for (int a = 1; a <= n; ++a) {
    for (int k = first[a] + 1; k < last[a]; ++k) {
      if (sigma[k] > a) return false;
    }
  }
  return true;
}

MPermutation max_element_from_inversions(const TreeInversionSet& set) {
  return reading_word(dt_from_inversions(set));
}

MetasylvesterClass MetasylvesterClass::of(const MPermutation& any_member) {
  auto inversions = tree_inversions(any_member);
  auto canonical = max_element_from_inversions(inversions);
  return MetasylvesterClass(std::move(canonical), std::move(inversions));
}

MetasylvesterClass MetasylvesterClass::from_inversions(TreeInversionSet set) {
  if (!validate_tree_inversions(set)) {
    throw InvalidTreeInversions("set violates the tree-inversion conditions");
  }
  auto canonical = max_element_from_inversions(set);
  METASYLV_INVARIANT(tree_inversions(canonical) == set,
                     "valid set does not round-trip through its tree");
  return MetasylvesterClass(std::move(canonical), std::move(set));
}

std::vector<MPermutation> rewrite_neighbors(const MPermutation& sigma) {
  const int n = sigma.n();
  const int len = sigma.length();
  std::vector<Letter> word(sigma.word().begin(), sigma.word().end());
  // before[k] / after[k]: letters occurring strictly before / after k.
  std::vector<std::uint64_t> before(len + 1, 0);
  std::vector<std::uint64_t> after(len + 1, 0);
  for (int k = 0; k < len; ++k) {
    before[k + 1] = before[k] | 1ULL << (word[k] - 1);
  }
  for (int k = len - 1; k >= 0; --k) {
    if (k + 1 < len) after[k] = after[k + 1] | 1ULL << (word[k + 1] - 1);
  }
  std::vector<MPermutation> out;
  for (int k = 0; k + 1 < len; ++k) {
    const int a = std::min(word[k], word[k + 1]);
    const int c = std::max(word[k], word[k + 1]);
    if (a == c) continue;
    const std::uint64_t later = after[k + 1];
    const bool rule1 = later >> (a - 1) & 1;
    const bool rule2 =
        (before[k] & later & letters_mask(a + 1, c - 1)) != 0;
    if (!rule1 && !rule2) continue;
    std::swap(word[k], word[k + 1]);
    out.push_back(MPermutation::from_letters_unchecked(word, n, sigma.m()));
    std::swap(word[k], word[k + 1]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MPermutation> meta_class(const MPermutation& sigma) {
  std::set<MPermutation> visited{sigma};
  std::deque<MPermutation> queue{sigma};
  while (!queue.empty()) {
    const MPermutation current = std::move(queue.front());
    queue.pop_front();
    for (auto& next : rewrite_neighbors(current)) {
      if (visited.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {visited.begin(), visited.end()};
}

MPermutation maxclass(const MPermutation& sigma) {
  return max_element_from_inversions(tree_inversions(sigma));
}

MPermutation minclass(const MPermutation& sigma) {
  const auto members = meta_class(sigma);
  const MPermutation* best = &members.front();
  for (const auto& mu : members) {
    if (inversion_count(mu) < inversion_count(*best)) best = &mu;
  }
  for (const auto& mu : members) {
    METASYLV_INVARIANT(weak_leq(*best, mu), "class has no weak minimum");
  }
  return *best;
}

TreeCode tree_code(const MetasylvesterClass& cls) {
  TreeCode code{cls.n(), cls.m(), {}};
  code.entries.reserve(cls.n());
  for (int a = 1; a <= cls.n(); ++a) {
    code.entries.push_back(cls.inversions().count_for(a));
  }
  return code;
}

MetasylvesterClass from_tree_code(const TreeCode& code) {
  const int n = code.n;
  const int m = code.m;
  if (n < 1 || m < 1) throw CodeRangeError("tree-code needs n, m >= 1");
  if (static_cast<int>(code.entries.size()) != n) {
    throw CodeRangeError("tree-code has " +
                         std::to_string(code.entries.size()) +
                         " entries, expected " + std::to_string(n));
  }
  if (n * m > kMaxLength) throw SizeLimit("n*m exceeds kMaxLength");
  for (int a = 1; a <= n; ++a) {
    const int v = code.entries[a - 1];
    if (v < 0 || v > (n - a) * m) {
      throw CodeRangeError("tree-code entry v_" + std::to_string(a) + " = " +
                           std::to_string(v) + " outside 0.." +
                           std::to_string((n - a) * m));
    }
  }
  // Each gap of the current reading word is a leaf slot; gap g creates g
  // tree-inversions for the inserted letter.
  std::vector<Letter> word;
  word.reserve(n * m);
  for (int a = n; a >= 1; --a) {
    word.insert(word.begin() + code.entries[a - 1], m, Letter(a));
  }
  auto sigma = MPermutation::from_letters_unchecked(std::move(word), n, m);
  METASYLV_INVARIANT(is_max_element(sigma), "insertion left the set Max");
  auto cls = MetasylvesterClass::of(sigma);
  METASYLV_INVARIANT(cls.canonical() == sigma, "insertion word not canonical");
  return cls;
}

namespace {

void require_same_shape(const MetasylvesterClass& a,
                        const MetasylvesterClass& b) {
  metasylv::require_same_shape(a.canonical(), b.canonical());
}

MetasylvesterClass stable_class(const MPermutation& word, const char* op) {
  if (!is_max_element(word)) {
    throw StabilityViolation(std::string("weak ") + op + " of maximal " +
                             "elements left the set Max: " + word.to_string());
  }
  return MetasylvesterClass::of(word);
}

}  // namespace

bool meta_leq(const MetasylvesterClass& a, const MetasylvesterClass& b) {
  require_same_shape(a, b);
  return weak_leq(a.canonical(), b.canonical());
}

MetasylvesterClass meta_join(const MetasylvesterClass& a,
                             const MetasylvesterClass& b) {
  require_same_shape(a, b);
  return stable_class(weak_join(a.canonical(), b.canonical()), "join");
}

MetasylvesterClass meta_meet(const MetasylvesterClass& a,
                             const MetasylvesterClass& b) {
  require_same_shape(a, b);
  return stable_class(weak_meet(a.canonical(), b.canonical()), "meet");
}

std::vector<MetasylvesterClass> meta_covers(const MetasylvesterClass& cls) {
  const MPermutation& sigma = cls.canonical();
  const int n = sigma.n();
  const int len = sigma.length();
  std::vector<int> first(n + 1, -1);
  std::vector<int> last(n + 1, -1);
  for (int k = 0; k < len; ++k) {
    if (first[sigma[k]] < 0) first[sigma[k]] = k;
    last[sigma[k]] = k;
  }
  std::vector<MetasylvesterClass> out;
  for (int a = 1; a <= n; ++a) {
    const int k = last[a] + 1;
    if (k >= len || sigma[k] <= a) continue;
    std::vector<Letter> word(sigma.word().begin(), sigma.word().end());
    const Letter b = word[k];
    word.erase(word.begin() + k);
    word.insert(word.begin() + first[a], b);
    auto mu = MPermutation::from_letters_unchecked(std::move(word), n,
                                                   sigma.m());
    METASYLV_INVARIANT(is_max_element(mu), "cover left the set Max");
    out.push_back(MetasylvesterClass::of(mu));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_classes(int n, int m) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (int k = 1; k < n; ++k) {
    const std::uint64_t factor = 1 + static_cast<std::uint64_t>(k) * m;
    if (total > kMax / factor) throw SizeLimit("count overflows 64 bits");
    total *= factor;
  }
  return total;
}

ClassStream::ClassStream(int n, int m) : code_{n, m, {}} {
  if (n < 1 || m < 1) throw AlphabetError("n and m must be positive");
  if (n * m > kMaxLength) throw SizeLimit("n*m exceeds kMaxLength");
  reset();
}

void ClassStream::reset() {
  code_.entries.assign(code_.n, 0);
  exhausted_ = false;
  started_ = false;
}

std::optional<MetasylvesterClass> ClassStream::next() {
  if (exhausted_) return std::nullopt;
  if (started_) {
    int a = code_.n - 1;
    for (; a >= 1; --a) {
      if (code_.entries[a - 1] < (code_.n - a) * code_.m) {
        ++code_.entries[a - 1];
        break;
      }
      code_.entries[a - 1] = 0;
    }
    if (a < 1) {
      exhausted_ = true;
      return std::nullopt;
    }
  }
  started_ = true;
  return from_tree_code(code_);
}

ClassStream enumerate_classes(int n, int m) { return ClassStream(n, m); }

}  // namespace metasylv
