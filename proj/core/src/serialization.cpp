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

#include "metasylv/serialization.hpp"

#include <string>

#include "metasylv/errors.hpp"

namespace metasylv::json {
namespace {

int count_nodes(const Json& node) {
  if (node.is_null()) return 0;
  int total = 1;
  for (const auto& child : node.at("children")) total += count_nodes(child);
  return total;
}

// Returns the label of `node`, 0 for a leaf.
int collect(const Json& node, int arity,
            std::vector<std::vector<int>>& children) {
  if (node.is_null()) return 0;
  const int label = node.at("label").get<int>();
  const auto& slots = node.at("children");
  if (!slots.is_array() || static_cast<int>(slots.size()) != arity) {
    throw InvalidTree("node " + std::to_string(label) + " must have " +
                      std::to_string(arity) + " children");
  }
  if (label < 1 || label >= static_cast<int>(children.size())) {
    throw InvalidTree("label " + std::to_string(label) + " out of range");
  }
  if (!children[label].empty()) {
    throw InvalidTree("label " + std::to_string(label) + " repeated");
  }
  std::vector<int> own;
  own.reserve(arity);
  for (const auto& child : slots) own.push_back(collect(child, arity, children));
  children[label] = std::move(own);
  return label;
}

Json tree_node(const DecreasingTree& tree, int label) {
  Json node = Json::object();
  node["label"] = label;
  Json kids = Json::array();
  for (int c : tree.children(label)) {
    kids.push_back(c == 0 ? Json(nullptr) : tree_node(tree, c));
  }
  node["children"] = std::move(kids);
  return node;
}

}  // namespace

Json to_json(const MPermutation& sigma) {
  Json j = Json::object();
  j["n"] = sigma.n();
  j["m"] = sigma.m();
  Json word = Json::array();
  for (Letter v : sigma.word()) word.push_back(static_cast<int>(v));
  j["word"] = std::move(word);
  return j;
}

MPermutation mpermutation_from_json(const Json& j) {
  if (j.is_string()) return MPermutation::parse(j.get<std::string>());
  const auto word = j.at("word").get<std::vector<int>>();
  return MPermutation(word, j.at("n").get<int>(), j.at("m").get<int>());
}

Json to_json(const CoInversionSet& set) {
  Json out = Json::array();
  for (const auto& c : set.to_vector()) {
    out.push_back({c.smaller.letter, c.smaller.index, c.larger.letter,
                   c.larger.index});
  }
  return out;
}

Json to_json(const TreeInversionSet& set) {
  Json j = Json::object();
  j["n"] = set.n();
  j["m"] = set.m();
  Json triples = Json::array();
  for (const auto& t : set.to_vector()) triples.push_back({t.a, t.b, t.i});
  j["triples"] = std::move(triples);
  return j;
}

TreeInversionSet tree_inversions_from_json(const Json& j) {
  TreeInversionSet set(j.at("n").get<int>(), j.at("m").get<int>());
  for (const auto& t : j.at("triples")) {
    if (!t.is_array() || t.size() != 3) {
      throw InvalidTreeInversions("triples must be [a, b, i]");
    }
    set.insert(t[0].get<int>(), t[1].get<int>(), t[2].get<int>());
  }
  return set;
}

Json to_json(const TreeCode& code) {
  Json j = Json::object();
  j["n"] = code.n;
  j["m"] = code.m;
  j["entries"] = code.entries;
  return j;
}

TreeCode tree_code_from_json(const Json& j, int default_m) {
  TreeCode code;
  code.entries = j.at("entries").get<std::vector<int>>();
  code.n = j.contains("n") ? j.at("n").get<int>()
                           : static_cast<int>(code.entries.size());
  code.m = j.contains("m") ? j.at("m").get<int>() : default_m;
  if (code.m < 1) throw CodeRangeError("tree-code needs a positive m");
  return code;
}

Json to_json(const DecreasingTree& tree) {
  Json j = Json::object();
  j["arity"] = tree.arity();
  j["tree"] = tree_node(tree, tree.root());
  return j;
}

DecreasingTree tree_from_json(const Json& j) {
  const int arity = j.at("arity").get<int>();
  if (arity < 2) throw InvalidTree("arity must be at least 2");
  const Json& root = j.at("tree");
  const int n = count_nodes(root);
  if (n == 0) throw InvalidTree("tree needs at least one label");
  std::vector<std::vector<int>> children(n + 1);
  collect(root, arity, children);
  for (int label = 1; label <= n; ++label) {
    if (children[label].empty()) {
      throw InvalidTree("label " + std::to_string(label) + " missing");
    }
  }
  if (root.at("label").get<int>() != n) {
    throw InvalidTree("root must carry the largest label");
  }
  return DecreasingTree::from_children(arity, std::move(children));
}

Json to_json(const MetaChain& chain) {
  Json j = Json::object();
  j["n"] = chain.n();
  j["m"] = chain.m();
  Json perms = Json::array();
  Json slots = Json::array();
  int slot = chain.m();
  for (const auto& p : chain.perms()) {
    Json word = Json::array();
    for (Letter v : p.word()) word.push_back(static_cast<int>(v));
    perms.push_back(std::move(word));
    slots.push_back(slot--);
  }
  j["perms"] = std::move(perms);
  j["slots"] = std::move(slots);
  return j;
}

MetaChain chain_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : j.at("perms");
  std::vector<Permutation> perms;
  for (const auto& p : list) {
    perms.push_back(Permutation::from_word(p.get<std::vector<int>>()));
  }
  if (perms.empty()) throw InvalidChain("a chain needs at least one entry");
  MetaChain chain(std::move(perms));
  if (j.is_object()) {
    if ((j.contains("n") && j.at("n").get<int>() != chain.n()) ||
        (j.contains("m") && j.at("m").get<int>() != chain.m())) {
      throw ShapeMismatch("chain n/m fields disagree with its entries");
    }
  }
  return chain;
}

Json to_json(const DyckChain& chain) {
  Json out = Json::array();
  for (const auto& p : chain.paths) out.push_back(p.steps());
  return out;
}

DyckChain dyck_chain_from_json(const Json& j) {
  DyckChain chain;
  for (const auto& p : j) {
    chain.paths.push_back(DyckPath::parse(p.get<std::string>()));
  }
  if (chain.paths.empty()) throw InvalidPath("empty Dyck chain");
  chain.n = chain.paths.front().semilength();
  chain.m = static_cast<int>(chain.paths.size());
  for (const auto& p : chain.paths) {
    if (p.semilength() != chain.n) {
      throw ShapeMismatch("Dyck chain paths of different semilength");
    }
  }
  return chain;
}

Json to_json(const LatticeDiagram& diagram) {
  Json j = Json::object();
  j["kind"] = to_string(diagram.kind);
  j["n"] = diagram.n;
  j["m"] = diagram.m;
  j["elements"] = diagram.elements;
  Json covers = Json::array();
  for (const auto& [a, b] : diagram.covers) covers.push_back({a, b});
  j["covers"] = std::move(covers);
  Json annotations = Json::object();
  for (const auto& [key, values] : diagram.annotations) {
    annotations[key] = values;
  }
  j["annotations"] = std::move(annotations);
  return j;
}

LatticeDiagram lattice_from_json(const Json& j) {
  LatticeDiagram diagram;
  diagram.kind = lattice_kind_from_string(j.at("kind").get<std::string>());
  diagram.n = j.at("n").get<int>();
  diagram.m = j.at("m").get<int>();
  diagram.elements = j.at("elements").get<std::vector<std::string>>();
  for (const auto& c : j.at("covers")) {
    diagram.covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  }
  if (j.contains("annotations")) {
    for (const auto& [key, values] : j.at("annotations").items()) {
      diagram.annotations[key] = values.get<std::vector<std::string>>();
    }
  }
  return diagram;
}

}  // namespace metasylv::json
