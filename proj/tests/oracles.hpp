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

// Independent reference implementations. Everything here works on plain
// digit strings and sets, never on the library's bit-packed relations.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::string;  // letters '1'..'9'

inline std::vector<Word> all_words(int n, int m) {
  std::vector<Word> out;
  Word current;
  std::vector<int> left(n + 1, m);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == n * m) {
      out.push_back(current);
      return;
    }
    for (int a = 1; a <= n; ++a) {
      if (left[a] == 0) continue;
      --left[a];
      current.push_back(static_cast<char>('0' + a));
      self(self);
      current.pop_back();
      ++left[a];
    }
  };
  rec(rec);
  return out;
}

// ((a,i),(b,j)) with a<b and the j-th b before the i-th a.
using Occ = std::pair<int, int>;
using CoInv = std::pair<Occ, Occ>;

inline std::vector<Occ> occurrences(const Word& w) {
  std::vector<Occ> occ;
  int seen[16] = {};
  for (char c : w) {
    const int a = c - '0';
    occ.emplace_back(a, ++seen[a]);
  }
  return occ;
}

inline std::set<CoInv> coinversions(const Word& w) {
  const auto occ = occurrences(w);
  std::set<CoInv> out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t q = p + 1; q < w.size(); ++q) {
      if (occ[p].first > occ[q].first) out.insert({occ[q], occ[p]});
    }
  }
  return out;
}

inline bool weak_leq(const Word& a, const Word& b) {
  const auto ca = coinversions(a);
  const auto cb = coinversions(b);
  return std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
}

inline Word swap_at(Word w, std::size_t p) {
  std::swap(w[p], w[p + 1]);
  return w;
}

inline bool occurs_in(const Word& w, std::size_t from, std::size_t to, char c) {
  for (std::size_t q = from; q < to; ++q) {
    if (w[q] == c) return true;
  }
  return false;
}

// One metasylvester step ac <-> ca at positions p, p+1 (a < c): either an a
// follows the pair, or some b with a < b < c occurs both before and after.
inline bool meta_step(const Word& w, std::size_t p) {
  char a = w[p];
  char c = w[p + 1];
  if (a == c) return false;
  if (a > c) std::swap(a, c);
  if (occurs_in(w, p + 2, w.size(), a)) return true;
  for (char b = a + 1; b < c; ++b) {
    if (occurs_in(w, 0, p, b) && occurs_in(w, p + 2, w.size(), b)) return true;
  }
  return false;
}

// One sylvester step ac <-> ca (a < c) with some b, a <= b < c, after the
// pair.
inline bool sylv_step(const Word& w, std::size_t p) {
  char a = w[p];
  char c = w[p + 1];
  if (a == c) return false;
  if (a > c) std::swap(a, c);
  for (char b = a; b < c; ++b) {
    if (occurs_in(w, p + 2, w.size(), b)) return true;
  }
  return false;
}

template <class Step>
std::set<Word> closure(const Word& w, Step step) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    const Word cur = queue.front();
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (!step(cur, p)) continue;
      Word next = swap_at(cur, p);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

inline std::set<Word> meta_class(const Word& w) { return closure(w, meta_step); }
inline std::set<Word> sylv_class(const Word& w) { return closure(w, sylv_step); }

inline Word max_by_inversions(const std::set<Word>& cls) {
  Word best = *cls.begin();
  for (const auto& w : cls) {
    if (coinversions(w).size() > coinversions(best).size()) best = w;
  }
  return best;
}

// (a,b,i): a < b and every a follows the i-th b.
inline std::set<std::tuple<int, int, int>> tree_inversions_of_max(
    const Word& w, int n, int m) {
  std::set<std::tuple<int, int, int>> out;
  for (int a = 1; a <= n; ++a) {
    const auto first_a = w.find(static_cast<char>('0' + a));
    for (int b = a + 1; b <= n; ++b) {
      int seen = 0;
      for (std::size_t p = 0; p < first_a; ++p) {
        if (w[p] == '0' + b) out.insert({a, b, ++seen});
      }
      (void)m;
    }
  }
  return out;
}

// Maximal element test: no a...b...a with a < b.
inline bool avoids_aba(const Word& w) {
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t q = p + 1; q < w.size(); ++q) {
      if (w[q] <= w[p]) continue;
      if (occurs_in(w, q + 1, w.size(), w[p])) return false;
    }
  }
  return true;
}

inline bool contains_231(const std::vector<int>& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (p[k] < p[i] && p[i] < p[j]) return true;
      }
    }
  }
  return false;
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::uint64_t fuss_catalan(int n, int m) {
  return binomial((m + 1) * n, n) / (static_cast<std::uint64_t>(m) * n + 1);
}

// Lattice paths with n steps N and n*m steps E whose prefixes satisfy
// m * #N >= #E.
inline std::vector<std::string> ballot_paths(int n, int m) {
  std::vector<std::string> out;
  std::string cur;
  auto rec = [&](auto&& self, int ups, int rights) -> void {
    if (ups == n && rights == n * m) {
      out.push_back(cur);
      return;
    }
    if (ups < n) {
      cur.push_back('N');
      self(self, ups + 1, rights);
      cur.pop_back();
    }
    if (rights < n * m && rights + 1 <= m * ups) {
      cur.push_back('E');
      self(self, ups, rights + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace oracle
