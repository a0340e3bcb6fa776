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
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace metasylv {

using Letter = std::uint8_t;

// Upper bound on n*m. Co-inversion relations are stored as one 64-bit row
// per standardized letter.
inline constexpr int kMaxLength = 64;

/// A classical permutation of {1..n}, stored as its one-line word.
class Permutation {
 public:
  Permutation() = default;

  /// Throws AlphabetError / MultiplicityError unless `word` is a bijection
  /// onto {1..word.size()}.
  static Permutation from_word(std::span<const int> word);
  static Permutation from_word(std::initializer_list<int> word) {
    return from_word(std::span<const int>(word.begin(), word.size()));
  }
  /// Parses "23154"; letters must be single digits.
  static Permutation parse(std::string_view digits);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  std::span<const Letter> word() const { return word_; }
  int operator[](int position) const { return word_[position]; }

  /// Position (0-based) of each letter; index 0 unused.
  std::vector<int> positions() const;

  Permutation inverse() const;
  /// Function composition: (this * right)(k) = this(right(k)).
  Permutation compose(const Permutation& right) const;

  /// Classical pattern containment; `pattern` is itself a permutation word.
  bool contains_pattern(std::span<const int> pattern) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Letter> word) : word_(std::move(word)) {}
  std::vector<Letter> word_;
};

/// A permutation of the multiset 1^m 2^m ... n^m.
class MPermutation {
 public:
  MPermutation() = default;

  /// Validating constructor. Throws MultiplicityError when the length is not
  /// n*m or a letter count differs from m, AlphabetError for letters outside
  /// 1..n, SizeLimit when n*m exceeds kMaxLength.
  MPermutation(std::span<const int> word, int n, int m);
  MPermutation(std::initializer_list<int> word, int n, int m)
      : MPermutation(std::span<const int>(word.begin(), word.size()), n, m) {}

  /// Parses a digit string and infers n (largest letter) and m (count of 1).
  static MPermutation parse(std::string_view digits);
  static MPermutation from_permutation(const Permutation& p);

  /// The bottom 1^m 2^m ... n^m and the top n^m ... 1^m of the ideal.
  static MPermutation bottom(int n, int m);
  static MPermutation top(int n, int m);

  /// Skips validation; callers guarantee the multiset.
  static MPermutation from_letters_unchecked(std::vector<Letter> word, int n,
                                            int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int length() const { return static_cast<int>(word_.size()); }
  std::span<const Letter> word() const { return word_; }
  int operator[](int position) const { return word_[position]; }

  /// Subword made of the i-th occurrence of every letter (1-based i).
  Permutation occurrence_subword(int i) const;

  /// Digits when n <= 9, otherwise letters joined by '.'.
  std::string to_string() const;

  friend bool operator==(const MPermutation&, const MPermutation&) = default;
  friend auto operator<=>(const MPermutation&, const MPermutation&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Letter> word_;
};

MPermutation make_mpermutation(std::span<const int> word, int n, int m);

/// The i-th occurrence of letter v becomes (v-1)*m + i.
Permutation standardize(const MPermutation& sigma);

/// Inverse of standardize. Throws AlphabetError when `p` does not keep the
/// occurrences of each block in increasing order.
MPermutation destandardize(const Permutation& p, int n, int m);

/// Cursor-style stream with range-for support. `Derived` provides
/// `std::optional<T> next()` and `void reset()`.
template <class Derived, class T>
class Stream {
 public:
  using value_type = T;

  class iterator {
   public:
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(Derived* stream) : stream_(stream) { advance(); }
    const T& operator*() const { return *current_; }
    const T* operator->() const { return &*current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.current_.has_value();
    }

   private:
    void advance() { current_ = stream_->next(); }
    Derived* stream_ = nullptr;
    std::optional<T> current_;
  };

  iterator begin() {
    auto& self = static_cast<Derived&>(*this);
    self.reset();
    return iterator(&self);
  }
  std::default_sentinel_t end() const { return {}; }

  std::vector<T> collect() {
    std::vector<T> out;
    for (const T& value : *this) out.push_back(value);
    return out;
  }
};

/// All m-permutations of size n in lexicographic order of their words.
class MPermutationStream : public Stream<MPermutationStream, MPermutation> {
 public:
  MPermutationStream(int n, int m);
  std::optional<MPermutation> next();
  void reset();

 private:
  int n_;
  int m_;
  std::vector<Letter> word_;
  bool exhausted_ = false;
  bool started_ = false;
};

MPermutationStream enumerate_mpermutations(int n, int m);
std::vector<MPermutation> all_mpermutations(int n, int m);

/// All permutations of size n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// (nm)! / (m!)^n. Throws SizeLimit on 64-bit overflow.
std::uint64_t count_mpermutations(int n, int m);

}  // namespace metasylv
