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

#include "metasylv/chain.hpp"

#include <algorithm>
#include <string>

#include "metasylv/errors.hpp"
#include "metasylv/weak_order.hpp"

namespace metasylv {
namespace {

constexpr int kPattern231[] = {2, 3, 1};

void require_sizes(std::span<const Permutation> perms) {
  for (const auto& p : perms) {
    if (p.size() != perms.front().size()) {
      throw ShapeMismatch("chain entries have different sizes");
    }
  }
}

// s^(1) visits slots 0..i-1, the root, then slots i..m.
void traverse(const DecreasingTree& tree, int label, int i,
              std::vector<int>& out) {
  for (int s = 0; s < tree.arity(); ++s) {
    if (s == i) out.push_back(label);
    if (const int c = tree.child(label, s)) traverse(tree, c, i, out);
  }
}

}  // namespace

MetaChain::MetaChain(std::vector<Permutation> perms)
    : perms_(std::move(perms)) {
  if (perms_.empty()) throw InvalidChain("a chain needs at least one entry");
  if (!is_meta_chain(perms_)) {
    std::string text;
    for (const auto& p : perms_) text += (text.empty() ? "" : ",") + p.to_string();
    throw InvalidChain("(" + text + ") is not a metasylvester chain");
  }
}

bool is_meta_chain(std::span<const Permutation> perms) {
  if (perms.empty()) return false;
  require_sizes(perms);
  const int m = static_cast<int>(perms.size());
  for (int k = 0; k + 1 < m; ++k) {
    if (!weak_leq(perms[k], perms[k + 1])) return false;
  }
  // perms[m - i] is s^(i).
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const auto quotient = perms[m - j].inverse().compose(perms[m - i]);
      if (quotient.contains_pattern(kPattern231)) return false;
    }
  }
  return true;
}

TreeInversionSet cinv(const MetaChain& chain) {
  const int n = chain.n();
  const int m = chain.m();
  TreeInversionSet set(n, m);
  for (int i = 1; i <= m; ++i) {
    const auto set_i = coinversions(chain.slot(i));
    const auto& relation = set_i.relation();
    for (int a = 1; a <= n; ++a) {
      // Relation bits are 0-based letters; tree rows use bit b-1 as well.
      set.row(a, i) = relation.rows[a - 1];
    }
  }
  return set;
}

MetasylvesterClass psi(const MetaChain& chain) {
  return MetasylvesterClass::from_inversions(cinv(chain));
}

MetaChain psi_inverse(const MetasylvesterClass& cls) {
  const int n = cls.n();
  const int m = cls.m();
  std::vector<Permutation> perms;
  perms.reserve(m);
  for (int i = m; i >= 1; --i) {
    CoCode code;
    for (int a = 1; a <= n; ++a) {
      code.entries.push_back(std::popcount(cls.inversions().row(a, i)));
    }
    auto sigma = permutation_from_cocode(code);
    const auto slice = coinversions(sigma);
    const auto& relation = slice.relation();
    for (int a = 1; a <= n; ++a) {
      METASYLV_INVARIANT(relation.rows[a - 1] == cls.inversions().row(a, i),
                         "slice is not the co-inversion set of a permutation");
    }
    perms.push_back(std::move(sigma));
  }
  return MetaChain(std::move(perms), MetaChain::Unchecked{});
}

MetaChain chain_from_tree(const DecreasingTree& tree) {
  const int m = tree.arity() - 1;
  std::vector<Permutation> perms;
  perms.reserve(m);
  for (int i = m; i >= 1; --i) {
    std::vector<int> word;
    word.reserve(tree.size());
    traverse(tree, tree.root(), i, word);
    perms.push_back(Permutation::from_word(word));
  }
  return MetaChain(std::move(perms), MetaChain::Unchecked{});
}

bool chain_leq(const MetaChain& a, const MetaChain& b) {
  if (a.n() != b.n() || a.m() != b.m()) {
    throw ShapeMismatch("chains of different shapes");
  }
  for (int i = 1; i <= a.m(); ++i) {
    if (!weak_leq(a.slot(i), b.slot(i))) return false;
  }
  return true;
}

std::vector<MetaChain> enumerate_chains(int n, int m, ChainEnumeration mode) {
  std::vector<MetaChain> out;
  if (mode == ChainEnumeration::kFromClasses) {
    for (const auto& cls : enumerate_classes(n, m)) {
      out.push_back(psi_inverse(cls));
    }
  } else {
    const auto perms = all_permutations(n);
    std::vector<Permutation> tuple;
    auto extend = [&](auto&& self) -> void {
      if (static_cast<int>(tuple.size()) == m) {
        if (is_meta_chain(tuple)) out.emplace_back(tuple);
        return;
      }
      for (const auto& p : perms) {
        if (!tuple.empty() && !weak_leq(tuple.back(), p)) continue;
        tuple.push_back(p);
        self(self);
        tuple.pop_back();
      }
    };
    extend(extend);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace metasylv
