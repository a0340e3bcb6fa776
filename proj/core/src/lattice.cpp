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

#include "metasylv/lattice.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>

#include "metasylv/metasylvester.hpp"
#include "metasylv/weak_order.hpp"

namespace metasylv {

const char* to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::kWeak:
      return "weak";
    case LatticeKind::kMetasylvester:
      return "metasylvester";
    case LatticeKind::kMTamari:
      return "mtamari";
  }
  return "unknown";
}

LatticeKind lattice_kind_from_string(const std::string& name) {
  if (name == "weak") return LatticeKind::kWeak;
  if (name == "metasylvester") return LatticeKind::kMetasylvester;
  if (name == "mtamari") return LatticeKind::kMTamari;
  throw std::invalid_argument("unknown lattice '" + name + "'");
}

int LatticeDiagram::index_of(const std::string& label) const {
  const auto it = std::find(elements.begin(), elements.end(), label);
  return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
}

OrderMatrix::OrderMatrix(int size, std::vector<int> order)
    : size_(size),
      words_((size + 63) / 64),
      order_(std::move(order)),
      position_(size),
      up_(static_cast<std::size_t>(size) * words_, 0),
      down_(static_cast<std::size_t>(size) * words_, 0) {
  for (int p = 0; p < size; ++p) position_[order_[p]] = p;
}

void OrderMatrix::set(int a, int b) {
  const int pa = position_[a];
  const int pb = position_[b];
  up_[pa * words_ + pb / 64] |= 1ULL << (pb % 64);
}

void OrderMatrix::finish() {
  for (int p = 0; p < size_; ++p) {
    const std::uint64_t* row = up_row(p);
    for (int w = 0; w < words_; ++w) {
      for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) {
        const int q = w * 64 + std::countr_zero(bits);
        down_[q * words_ + p / 64] |= 1ULL << (p % 64);
      }
    }
  }
}

std::optional<OrderMatrix> OrderMatrix::from_covers(
    int size, std::span<const std::pair<int, int>> covers) {
  std::vector<std::vector<int>> succ(size);
  std::vector<int> indegree(size, 0);
  for (const auto& [a, b] : covers) {
    succ[a].push_back(b);
    ++indegree[b];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int a = 0; a < size; ++a) {
    if (indegree[a] == 0) ready.push(a);
  }
  std::vector<int> order;
  order.reserve(size);
  while (!ready.empty()) {
    const int a = ready.top();
    ready.pop();
    order.push_back(a);
    for (int b : succ[a]) {
      if (--indegree[b] == 0) ready.push(b);
    }
  }
  if (static_cast<int>(order.size()) != size) return std::nullopt;
  OrderMatrix matrix(size, std::move(order));
  for (int p = size - 1; p >= 0; --p) {
    const int a = matrix.order_[p];
    std::uint64_t* row = &matrix.up_[p * matrix.words_];
    row[p / 64] |= 1ULL << (p % 64);
    for (int b : succ[a]) {
      const std::uint64_t* above = matrix.up_row(matrix.position_[b]);
      for (int w = 0; w < matrix.words_; ++w) row[w] |= above[w];
    }
  }
  matrix.finish();
  return matrix;
}

bool OrderMatrix::leq(int a, int b) const {
  const int pb = position_[b];
  return up_row(position_[a])[pb / 64] >> (pb % 64) & 1;
}

namespace {

bool subset(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int w = 0; w < words; ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

}  // namespace

std::optional<int> OrderMatrix::join(int a, int b) const {
  const std::uint64_t* ua = up_row(position_[a]);
  const std::uint64_t* ub = up_row(position_[b]);
  std::vector<std::uint64_t> common(words_);
  int first = -1;
  for (int w = 0; w < words_; ++w) {
    common[w] = ua[w] & ub[w];
    if (first < 0 && common[w]) first = w * 64 + std::countr_zero(common[w]);
  }
  // A least upper bound comes first in the linear extension.
  if (first < 0 || !subset(common.data(), up_row(first), words_)) {
    return std::nullopt;
  }
  return order_[first];
}

std::optional<int> OrderMatrix::meet(int a, int b) const {
  const std::uint64_t* da = down_row(position_[a]);
  const std::uint64_t* db = down_row(position_[b]);
  std::vector<std::uint64_t> common(words_);
  int last = -1;
  for (int w = 0; w < words_; ++w) {
    common[w] = da[w] & db[w];
    if (common[w]) last = w * 64 + 63 - std::countl_zero(common[w]);
  }
  if (last < 0 || !subset(common.data(), down_row(last), words_)) {
    return std::nullopt;
  }
  return order_[last];
}

std::vector<std::pair<int, int>> OrderMatrix::covers() const {
  std::vector<std::pair<int, int>> out;
  std::vector<std::uint64_t> strict(words_);
  for (int p = 0; p < size_; ++p) {
    std::copy_n(up_row(p), words_, strict.begin());
    strict[p / 64] &= ~(1ULL << (p % 64));
    for (int w = 0; w < words_; ++w) {
      for (std::uint64_t bits = strict[w]; bits; bits &= bits - 1) {
        const int q = w * 64 + std::countr_zero(bits);
        // q covers p when nothing strictly above p lies strictly below q.
        const std::uint64_t* below = down_row(q);
        bool cover = true;
        for (int v = 0; v < words_ && cover; ++v) {
          std::uint64_t between = strict[v] & below[v];
          if (v == q / 64) between &= ~(1ULL << (q % 64));
          cover = between == 0;
        }
        if (cover) out.emplace_back(order_[p], order_[q]);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrderMatrix OrderMatrix::reversed() const {
  std::vector<int> order(order_.rbegin(), order_.rend());
  OrderMatrix out(size_, std::move(order));
  for (int p = 0; p < size_; ++p) {
    for (int q = 0; q < size_; ++q) {
      if (up_row(p)[q / 64] >> (q % 64) & 1) {
        out.set(order_[q], order_[p]);
      }
    }
  }
  out.finish();
  return out;
}

bool operator==(const OrderMatrix& a, const OrderMatrix& b) {
  if (a.size_ != b.size_) return false;
  for (int x = 0; x < a.size_; ++x) {
    for (int y = 0; y < a.size_; ++y) {
      if (a.leq(x, y) != b.leq(x, y)) return false;
    }
  }
  return true;
}

LatticeCheck check_lattice(const OrderMatrix& order,
                           std::span<const std::string> labels) {
  auto name = [&](int x) {
    return x < static_cast<int>(labels.size()) ? labels[x]
                                               : std::to_string(x);
  };
  for (int a = 0; a < order.size(); ++a) {
    for (int b = a + 1; b < order.size(); ++b) {
      if (!order.join(a, b)) {
        return {false, "no join for (" + name(a) + ", " + name(b) + ")"};
      }
      if (!order.meet(a, b)) {
        return {false, "no meet for (" + name(a) + ", " + name(b) + ")"};
      }
    }
  }
  return {};
}

LatticeCheck verify_diagram(const LatticeDiagram& diagram) {
  for (const auto& [a, b] : diagram.covers) {
    if (a < 0 || b < 0 || a >= diagram.size() || b >= diagram.size()) {
      return {false, "cover index out of range"};
    }
  }
  const auto order = OrderMatrix::from_covers(diagram.size(), diagram.covers);
  if (!order) return {false, "cover relation has a cycle"};
  auto sorted = diagram.covers;
  std::sort(sorted.begin(), sorted.end());
  if (order->covers() != sorted) {
    return {false, "cover relation is not transitively reduced"};
  }
  return check_lattice(*order, diagram.elements);
}

bool is_isomorphism(const LatticeDiagram& a, const LatticeDiagram& b,
                    std::span<const int> map) {
  if (a.size() != b.size() || static_cast<int>(map.size()) != a.size()) {
    return false;
  }
  std::vector<bool> hit(b.size(), false);
  for (int image : map) {
    if (image < 0 || image >= b.size() || hit[image]) return false;
    hit[image] = true;
  }
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(a.covers.size());
  for (const auto& [x, y] : a.covers) mapped.emplace_back(map[x], map[y]);
  auto expected = b.covers;
  std::sort(mapped.begin(), mapped.end());
  std::sort(expected.begin(), expected.end());
  return mapped == expected;
}

namespace {

int index_in(const std::vector<MPermutation>& sorted, const MPermutation& x) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  return static_cast<int>(it - sorted.begin());
}

LatticeDiagram labelled(LatticeKind kind, int n, int m,
                        const std::vector<MPermutation>& elements) {
  LatticeDiagram diagram;
  diagram.kind = kind;
  diagram.n = n;
  diagram.m = m;
  diagram.elements.reserve(elements.size());
  for (const auto& x : elements) diagram.elements.push_back(x.to_string());
  return diagram;
}

}  // namespace

LatticeDiagram weak_diagram(int n, int m) {
  const auto elements = all_mpermutations(n, m);
  LatticeDiagram diagram = labelled(LatticeKind::kWeak, n, m, elements);
  for (int a = 0; a < static_cast<int>(elements.size()); ++a) {
    for (const auto& up : weak_covers(elements[a])) {
      diagram.covers.emplace_back(a, index_in(elements, up));
    }
  }
  std::sort(diagram.covers.begin(), diagram.covers.end());
  return diagram;
}

LatticeDiagram metasylvester_diagram(int n, int m) {
  std::vector<MetasylvesterClass> classes;
  for (const auto& cls : enumerate_classes(n, m)) classes.push_back(cls);
  std::sort(classes.begin(), classes.end());
  std::vector<MPermutation> elements;
  elements.reserve(classes.size());
  for (const auto& cls : classes) elements.push_back(cls.canonical());
  LatticeDiagram diagram =
      labelled(LatticeKind::kMetasylvester, n, m, elements);
  for (int a = 0; a < static_cast<int>(classes.size()); ++a) {
    for (const auto& up : meta_covers(classes[a])) {
      diagram.covers.emplace_back(a, index_in(elements, up.canonical()));
    }
  }
  std::sort(diagram.covers.begin(), diagram.covers.end());
  return diagram;
}

std::string to_dot(const LatticeDiagram& diagram) {
  std::ostringstream out;
  out << "digraph " << to_string(diagram.kind) << "_" << diagram.n << "_"
      << diagram.m << " {\n";
  for (int a = 0; a < diagram.size(); ++a) {
    out << "  n" << a << " [label=\"" << diagram.elements[a] << "\"];\n";
  }
  for (const auto& [a, b] : diagram.covers) {
    out << "  n" << a << " -> n" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace metasylv
