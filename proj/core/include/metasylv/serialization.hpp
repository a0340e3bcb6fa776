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

#include <nlohmann/json.hpp>

#include "metasylv/chain.hpp"
#include "metasylv/decreasing_tree.hpp"
#include "metasylv/lattice.hpp"
#include "metasylv/metasylvester.hpp"
#include "metasylv/mpermutation.hpp"
#include "metasylv/tamari.hpp"
#include "metasylv/weak_order.hpp"

// JSON forms shared by the library and the command-line tool. Parsers throw
// metasylv::Error subclasses (or nlohmann::json::exception) on bad input.
namespace metasylv::json {

using Json = nlohmann::ordered_json;

/// {"n":3,"m":2,"word":[1,2,2,3,1,3]}
Json to_json(const MPermutation& sigma);
/// Accepts the object form or a bare digit string such as "122313".
MPermutation mpermutation_from_json(const Json& j);

/// Sorted array [[a,i,b,j], ...].
Json to_json(const CoInversionSet& set);

/// {"n":6,"m":2,"triples":[[a,b,i], ...]} sorted lexicographically.
Json to_json(const TreeInversionSet& set);
TreeInversionSet tree_inversions_from_json(const Json& j);

/// {"n":..,"m":..,"entries":[...]}; `n` and `m` are optional on input,
/// with n defaulting to the entry count and m to `default_m`.
Json to_json(const TreeCode& code);
TreeCode tree_code_from_json(const Json& j, int default_m = 0);

/// {"arity":3,"tree":{"label":6,"children":[...]}} with null leaves.
Json to_json(const DecreasingTree& tree);
DecreasingTree tree_from_json(const Json& j);

/// {"n":3,"m":2,"perms":[[2,1,3],[2,3,1]],"slots":[2,1]}: perms run from
/// s^(m) to s^(1) and "slots" names the superscript of each entry.
Json to_json(const MetaChain& chain);
MetaChain chain_from_json(const Json& j);

/// ["uududd","uuddud"], slot 1 first.
Json to_json(const DyckChain& chain);
DyckChain dyck_chain_from_json(const Json& j);

/// {"kind":..,"n":..,"m":..,"elements":[...],"covers":[[lo,hi],...],
///  "annotations":{...}}
Json to_json(const LatticeDiagram& diagram);
LatticeDiagram lattice_from_json(const Json& j);

}  // namespace metasylv::json
