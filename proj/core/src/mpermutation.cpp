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

#include "metasylv/mpermutation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "metasylv/errors.hpp"

namespace metasylv {
namespace {

std::string describe(std::span<const int> word) {
  std::string out;
  for (int v : word) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::vector<int> parse_digits(std::string_view digits) {
  std::vector<int> word;
  word.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw AlphabetError("not a digit word: '" + std::string(digits) + "'");
    }
    word.push_back(c - '0');
  }
  return word;
}

std::string letters_to_string(std::span<const Letter> word, int alphabet) {
  std::string out;
  for (Letter v : word) {
    if (alphabet > 9 && !out.empty()) out += '.';
    out += std::to_string(static_cast<int>(v));
  }
  return out;
}

}  // namespace

Permutation Permutation::from_word(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  if (n > 255) throw SizeLimit("permutation too long");
  std::vector<bool> seen(n + 1, false);
  std::vector<Letter> letters;
  letters.reserve(n);
  for (int v : word) {
    if (v < 1 || v > n) {
      throw AlphabetError("letter " + std::to_string(v) + " outside 1.." +
                          std::to_string(n) + " in [" + describe(word) + "]");
    }
    if (seen[v]) {
      throw MultiplicityError("letter " + std::to_string(v) +
                              " repeated in [" + describe(word) + "]");
    }
    seen[v] = true;
    letters.push_back(static_cast<Letter>(v));
  }
  return Permutation(std::move(letters));
}

Permutation Permutation::parse(std::string_view digits) {
  const auto word = parse_digits(digits);
  return from_word(word);
}

Permutation Permutation::identity(int n) {
  std::vector<Letter> word(n);
  std::iota(word.begin(), word.end(), Letter{1});
  return Permutation(std::move(word));
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(word_.size() + 1, -1);
  for (std::size_t k = 0; k < word_.size(); ++k) {
    pos[word_[k]] = static_cast<int>(k);
  }
  return pos;
}

Permutation Permutation::inverse() const {
  std::vector<Letter> inv(word_.size());
  for (std::size_t k = 0; k < word_.size(); ++k) {
    inv[word_[k] - 1] = static_cast<Letter>(k + 1);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& right) const {
  if (right.size() != size()) {
    throw ShapeMismatch("composing permutations of different sizes");
  }
  std::vector<Letter> out(word_.size());
  for (std::size_t k = 0; k < word_.size(); ++k) {
    out[k] = word_[right.word_[k] - 1];
  }
  return Permutation(std::move(out));
}

bool Permutation::contains_pattern(std::span<const int> pattern) const {
  const int k = static_cast<int>(pattern.size());
  const int n = size();
  if (k == 0) return true;
  if (k > n) return false;
  // Depth-first choice of increasing positions; n is small.
  std::vector<int> chosen(k);
  auto matches_prefix = [&](int depth) {
    for (int a = 0; a < depth; ++a) {
      const bool want_less = pattern[a] < pattern[depth];
      const bool is_less = word_[chosen[a]] < word_[chosen[depth]];
      if (want_less != is_less) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int depth, int start) -> bool {
    if (depth == k) return true;
    for (int p = start; p <= n - (k - depth); ++p) {
      chosen[depth] = p;
      if (matches_prefix(depth) && self(self, depth + 1, p + 1)) return true;
    }
    return false;
  };
  return search(search, 0, 0);
}

std::string Permutation::to_string() const {
  return letters_to_string(word_, size());
}

MPermutation::MPermutation(std::span<const int> word, int n, int m) {
  if (n < 1 || m < 1) {
    throw AlphabetError("n and m must be positive");
  }
  if (static_cast<long long>(n) * m > kMaxLength) {
    throw SizeLimit("n*m = " + std::to_string(n * m) + " exceeds " +
                    std::to_string(kMaxLength));
  }
  if (static_cast<int>(word.size()) != n * m) {
    throw MultiplicityError("word [" + describe(word) + "] has length " +
                            std::to_string(word.size()) + ", expected n*m = " +
                            std::to_string(n * m));
  }
  std::vector<int> count(n + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n) {
      throw AlphabetError("letter " + std::to_string(v) + " outside 1.." +
                          std::to_string(n) + " in [" + describe(word) + "]");
    }
    ++count[v];
  }
  for (int v = 1; v <= n; ++v) {
    if (count[v] != m) {
      throw MultiplicityError("letter " + std::to_string(v) + " occurs " +
                              std::to_string(count[v]) + " times, expected " +
                              std::to_string(m));
    }
  }
  n_ = n;
  m_ = m;
  word_.assign(word.begin(), word.end());
}

MPermutation MPermutation::parse(std::string_view digits) {
  const auto word = parse_digits(digits);
  if (word.empty()) throw MultiplicityError("empty word");
  const int n = *std::max_element(word.begin(), word.end());
  const int m = static_cast<int>(std::count(word.begin(), word.end(), 1));
  return MPermutation(word, n, m);
}

MPermutation MPermutation::from_permutation(const Permutation& p) {
  return from_letters_unchecked({p.word().begin(), p.word().end()}, p.size(),
                                1);
}

MPermutation MPermutation::bottom(int n, int m) {
  std::vector<Letter> word;
  word.reserve(n * m);
  for (int v = 1; v <= n; ++v) word.insert(word.end(), m, Letter(v));
  return from_letters_unchecked(std::move(word), n, m);
}

MPermutation MPermutation::top(int n, int m) {
  std::vector<Letter> word;
  word.reserve(n * m);
  for (int v = n; v >= 1; --v) word.insert(word.end(), m, Letter(v));
  return from_letters_unchecked(std::move(word), n, m);
}

MPermutation MPermutation::from_letters_unchecked(std::vector<Letter> word,
                                                  int n, int m) {
  MPermutation out;
  out.n_ = n;
  out.m_ = m;
  out.word_ = std::move(word);
  return out;
}

Permutation MPermutation::occurrence_subword(int i) const {
  std::vector<int> seen(n_ + 1, 0);
  std::vector<int> sub;
  sub.reserve(n_);
  for (Letter v : word_) {
    if (++seen[v] == i) sub.push_back(v);
  }
  return Permutation::from_word(sub);
}

std::string MPermutation::to_string() const {
  return letters_to_string(word_, n_);
}

MPermutation make_mpermutation(std::span<const int> word, int n, int m) {
  return MPermutation(word, n, m);
}

Permutation standardize(const MPermutation& sigma) {
  const int m = sigma.m();
  std::vector<int> seen(sigma.n() + 1, 0);
  std::vector<int> word;
  word.reserve(sigma.length());
  for (Letter v : sigma.word()) {
    word.push_back((v - 1) * m + (++seen[v]));
  }
  return Permutation::from_word(word);
}

MPermutation destandardize(const Permutation& p, int n, int m) {
  if (p.size() != n * m) {
    throw ShapeMismatch("permutation of size " + std::to_string(p.size()) +
                        " cannot be an m-permutation with n*m = " +
                        std::to_string(n * m));
  }
  std::vector<int> next(n + 1, 1);
  std::vector<Letter> word;
  word.reserve(p.size());
  for (int x : p.word()) {
    const int letter = (x - 1) / m + 1;
    const int occurrence = (x - 1) % m + 1;
    if (occurrence != next[letter]) {
      throw AlphabetError("permutation " + p.to_string() +
                          " is outside the ideal of m-permutations");
    }
    ++next[letter];
    word.push_back(static_cast<Letter>(letter));
  }
  return MPermutation::from_letters_unchecked(std::move(word), n, m);
}

MPermutationStream::MPermutationStream(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 1) throw AlphabetError("n and m must be positive");
  if (n * m > kMaxLength) throw SizeLimit("n*m exceeds kMaxLength");
  reset();
}

void MPermutationStream::reset() {
  const MPermutation bottom = MPermutation::bottom(n_, m_);
  word_.assign(bottom.word().begin(), bottom.word().end());
  exhausted_ = false;
  started_ = false;
}

std::optional<MPermutation> MPermutationStream::next() {
  if (exhausted_) return std::nullopt;
  if (started_ && !std::next_permutation(word_.begin(), word_.end())) {
    exhausted_ = true;
    return std::nullopt;
  }
  started_ = true;
  return MPermutation::from_letters_unchecked(word_, n_, m_);
}

MPermutationStream enumerate_mpermutations(int n, int m) {
  return MPermutationStream(n, m);
}

std::vector<MPermutation> all_mpermutations(int n, int m) {
  return enumerate_mpermutations(n, m).collect();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for (const MPermutation& sigma : enumerate_mpermutations(n, 1)) {
    out.push_back(standardize(sigma));
  }
  return out;
}

std::uint64_t count_mpermutations(int n, int m) {
  // Product of binomials C(k*m, m) for k = 1..n, each built exactly.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t binom = 1;
    for (int j = 1; j <= m; ++j) {
      const std::uint64_t factor = static_cast<std::uint64_t>((k - 1) * m + j);
      if (binom > kMax / factor) throw SizeLimit("count overflows 64 bits");
      binom = binom * factor / j;
    }
    if (total > kMax / binom) throw SizeLimit("count overflows 64 bits");
    total *= binom;
  }
  return total;
}

}  // namespace metasylv
