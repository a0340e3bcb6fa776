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

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace reference {

using Edge = std::pair<std::string, std::string>;

// Weak order on 2-permutations of size 2, lower element first.
inline const std::vector<Edge> kWeakTwoTwo = {
    {"1122", "1212"}, {"1212", "2112"}, {"1212", "1221"},
    {"2112", "2121"}, {"1221", "2121"}, {"2121", "2211"}};

// The same ideal after standardization.
inline const std::vector<Edge> kWeakTwoTwoStandard = {
    {"1234", "1324"}, {"1324", "3124"}, {"1324", "1342"},
    {"3124", "3142"}, {"1342", "3142"}, {"3142", "3412"}};

// Metasylvester lattice of size 3, m = 2, on maximal elements.
inline const std::vector<Edge> kMetaThreeTwo = {
    {"112233", "211233"}, {"112233", "113223"}, {"211233", "221133"},
    {"211233", "321123"}, {"113223", "311223"}, {"113223", "113322"},
    {"221133", "223113"}, {"311223", "321123"}, {"311223", "311322"},
    {"113322", "311322"}, {"223113", "223311"}, {"223113", "322113"},
    {"321123", "322113"}, {"321123", "332112"}, {"311322", "331122"},
    {"223311", "322311"}, {"322113", "322311"}, {"331122", "332112"},
    {"322311", "332211"}, {"332112", "332211"}};

// Same lattice labelled by chains (s^(2), s^(1)), keyed by maximal element.
inline const std::vector<std::pair<std::string, std::string>> kChainLabels = {
    {"112233", "123_123"}, {"211233", "123_213"}, {"113223", "123_132"},
    {"221133", "213_213"}, {"311223", "123_312"}, {"113322", "132_132"},
    {"223113", "213_231"}, {"321123", "123_321"}, {"311322", "132_312"},
    {"223311", "231_231"}, {"322113", "213_321"}, {"331122", "312_312"},
    {"322311", "231_321"}, {"332112", "312_321"}, {"332211", "321_321"}};

template <class Diagram>
std::set<Edge> labelled_edges(const Diagram& d) {
  std::set<Edge> out;
  for (const auto& [lo, hi] : d.covers) {
    out.insert({d.elements[lo], d.elements[hi]});
  }
  return out;
}

}  // namespace reference
