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
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metasylv {

enum class LatticeKind { kWeak, kMetasylvester, kMTamari };

const char* to_string(LatticeKind kind);
/// Throws std::invalid_argument on an unknown name.
LatticeKind lattice_kind_from_string(const std::string& name);

/// Explicit finite poset: labelled elements plus cover edges
/// (lower index, upper index). `annotations` carries alternative labels, one
/// entry per element, keyed by name.
struct LatticeDiagram {
  LatticeKind kind = LatticeKind::kWeak;
  int n = 0;
  int m = 0;
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> covers;
  std::map<std::string, std::vector<std::string>> annotations;

  int size() const { return static_cast<int>(elements.size()); }
  /// Index of a label, or -1.
  int index_of(const std::string& label) const;

  friend bool operator==(const LatticeDiagram&,
                         const LatticeDiagram&) = default;
};

/// Reflexive order relation as bitsets over a linear extension.
class OrderMatrix {
 public:
  /// Returns nullopt if the cover graph has a cycle.
  static std::optional<OrderMatrix> from_covers(
      int size, std::span<const std::pair<int, int>> covers);
  template <class Leq>
  static OrderMatrix from_predicate(int size, Leq&& leq);

  int size() const { return size_; }
  bool leq(int a, int b) const;

  std::optional<int> join(int a, int b) const;
  std::optional<int> meet(int a, int b) const;

  /// Transitive reduction, sorted.
  std::vector<std::pair<int, int>> covers() const;
  OrderMatrix reversed() const;

  friend bool operator==(const OrderMatrix& a, const OrderMatrix& b);

 private:
  OrderMatrix(int size, std::vector<int> order);
  void set(int a, int b);
  const std::uint64_t* up_row(int pos) const { return &up_[pos * words_]; }
  const std::uint64_t* down_row(int pos) const { return &down_[pos * words_]; }
  void finish();

  int size_ = 0;
  int words_ = 0;
  std::vector<int> order_;     // position -> element
  std::vector<int> position_;  // element -> position
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
};

struct LatticeCheck {
  bool ok = true;
  std::string counterexample;
};

/// Joins and meets exist for every pair.
LatticeCheck check_lattice(const OrderMatrix& order,
                           std::span<const std::string> labels = {});

/// Covers form a DAG, the diagram is transitively reduced, and the order is
/// a lattice.
LatticeCheck verify_diagram(const LatticeDiagram& diagram);

/// `map[i]` is the element of `b` matched with element i of `a`. True when
/// the map is a bijection sending covers onto covers.
bool is_isomorphism(const LatticeDiagram& a, const LatticeDiagram& b,
                    std::span<const int> map);

/// Diagram for a poset given by labels and a leq predicate on indices.
template <class Leq>
LatticeDiagram diagram_from_order(LatticeKind kind, int n, int m,
                                  std::vector<std::string> labels, Leq&& leq);

/// Lattice of m-permutations, elements sorted by word.
LatticeDiagram weak_diagram(int n, int m);
/// Metasylvester lattice on maximal class elements, sorted by word.
LatticeDiagram metasylvester_diagram(int n, int m);

std::string to_dot(const LatticeDiagram& diagram);

template <class Leq>
OrderMatrix OrderMatrix::from_predicate(int size, Leq&& leq) {
  std::vector<std::pair<int, int>> relations;
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (a != b && leq(a, b)) relations.emplace_back(a, b);
    }
  }
  // A comparability graph is its own transitive closure, so from_covers
  // reproduces `leq` exactly as long as it is a partial order.
  auto order = from_covers(size, relations);
  if (!order) throw std::logic_error("predicate is not antisymmetric");
  return *std::move(order);
}

template <class Leq>
LatticeDiagram diagram_from_order(LatticeKind kind, int n, int m,
                                  std::vector<std::string> labels, Leq&& leq) {
  const int size = static_cast<int>(labels.size());
  OrderMatrix order = OrderMatrix::from_predicate(size, leq);
  LatticeDiagram diagram;
  diagram.kind = kind;
  diagram.n = n;
  diagram.m = m;
  diagram.elements = std::move(labels);
  diagram.covers = order.covers();
  return diagram;
}

}  // namespace metasylv
