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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace metasylv {

enum class Suite {
  kWeakLattice,
  kIntervals,
  kSemiQuotient,
  kBijections,
  kTamari,
  kAll,
};

const char* to_string(Suite suite);
/// Throws std::invalid_argument on an unknown name.
Suite suite_from_string(const std::string& name);

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = true;
  // Known non-property; `passed` means the failure was reproduced.
  bool expected_negative = false;
  std::uint64_t instances = 0;
  std::string counterexample;
  std::string note;
};

struct VerifyReport {
  std::vector<PropertyResult> results;
  double seconds = 0.0;

  bool passed() const;
  const PropertyResult* find(const std::string& name) const;
  /// One line per property: PASS/FAIL, name, instance count, and the first
  /// counterexample when there is one. Excludes timing.
  std::string to_text() const;
};

struct VerifyOptions {
  // Every (n, m) with n*m <= max_nm is checked.
  int max_nm = 6;
  // Exhaustive all-pairs oracles run for posets up to this many elements;
  // larger posets get `sample_pairs` random pairs.
  std::uint64_t exhaustive_pair_limit = 5040;
  std::uint64_t sample_pairs = 100000;
  // Associativity is exhaustive on triples up to this many elements.
  std::uint64_t exhaustive_triple_limit = 216;
  std::uint64_t sample_triples = 200000;
  // m-Tamari checks run for sizes with at most this many classes.
  std::uint64_t tamari_class_limit = 1000;
  std::uint32_t seed = 20121004;
  // Progress lines (one per suite and size) when non-null.
  std::ostream* progress = nullptr;
};

VerifyReport run_verification(Suite suite, const VerifyOptions& options);

}  // namespace metasylv
