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

namespace metasylv {

/// Size caps on n*m. The environment variable METASYLV_MAX_NM, when set to a
/// positive integer, replaces both defaults.
struct SizeCaps {
  static constexpr int kDefaultEnumeration = 12;
  static constexpr int kDefaultLattice = 9;

  int enumeration = kDefaultEnumeration;
  int lattice = kDefaultLattice;

  static SizeCaps from_environment();
};

}  // namespace metasylv
