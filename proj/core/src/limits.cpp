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

#include "metasylv/limits.hpp"

#include <cstdlib>
#include <string>

namespace metasylv {

SizeCaps SizeCaps::from_environment() {
  SizeCaps caps;
  if (const char* value = std::getenv("METASYLV_MAX_NM")) {
    try {
      std::size_t used = 0;
      const int cap = std::stoi(value, &used);
      if (used == std::string(value).size() && cap > 0) {
        caps.enumeration = cap;
        caps.lattice = cap;
      }
    } catch (const std::exception&) {
      // Unparseable values leave the defaults in place.
    }
  }
  return caps;
}

}  // namespace metasylv
